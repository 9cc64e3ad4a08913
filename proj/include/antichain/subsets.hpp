#ifndef ANTICHAIN_SUBSETS_HPP
#define ANTICHAIN_SUBSETS_HPP

// Bit-level helpers over 64-bit subset masks. Bit i-1 stands for element i.

#include <bit>
#include <cstdint>
#include <vector>

namespace antichain::bits {

inline constexpr std::uint64_t low_mask(int n) noexcept {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

inline int popcount(std::uint64_t x) noexcept { return std::popcount(x); }

inline bool subset_of(std::uint64_t a, std::uint64_t b) noexcept { return (a & ~b) == 0; }

// Next mask with the same popcount in increasing integer order (Gosper's hack).
// Integer order on equal-size masks is colexicographic order on the subsets.
inline std::uint64_t next_same_popcount(std::uint64_t x) noexcept {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  if (r == 0) return 0;  // wrapped past bit 63
  return (((r ^ x) >> 2) / c) | r;
}

// Calls f(mask) for every k-subset of `universe` in colex order, where the
// positions of `universe` are relabelled 0..|universe|-1 ascending. Stops early
// when f returns false.
template <typename F>
void for_each_k_subset_of(std::uint64_t universe, int k, F&& f) {
  std::vector<int> pos;
  for (std::uint64_t u = universe; u != 0; u &= u - 1) pos.push_back(std::countr_zero(u));
  const int m = static_cast<int>(pos.size());
  if (k < 0 || k > m) return;
  if (k == 0) {
    f(std::uint64_t{0});
    return;
  }
  // Enumerate k-subsets of {0..m-1} with Gosper, then scatter into universe.
  std::uint64_t idx = low_mask(k);
  const std::uint64_t limit = low_mask(m);
  while (idx != 0 && (idx & ~limit) == 0) {
    std::uint64_t mask = 0;
    for (std::uint64_t w = idx; w != 0; w &= w - 1) mask |= std::uint64_t{1} << pos[std::countr_zero(w)];
    if (!f(mask)) return;
    idx = next_same_popcount(idx);
  }
}

// All k-subsets of {0..n-1} (as masks) in colex order.
inline std::vector<std::uint64_t> k_subsets(int n, int k) {
  std::vector<std::uint64_t> out;
  for_each_k_subset_of(low_mask(n), k, [&](std::uint64_t m) {
    out.push_back(m);
    return true;
  });
  return out;
}

// Elements (one-based) of a mask, ascending.
inline std::vector<int> elements_of(std::uint64_t mask) {
  std::vector<int> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(std::countr_zero(mask) + 1);
  return out;
}

}  // namespace antichain::bits

#endif  // ANTICHAIN_SUBSETS_HPP

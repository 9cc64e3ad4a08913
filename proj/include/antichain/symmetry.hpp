#ifndef ANTICHAIN_SYMMETRY_HPP
#define ANTICHAIN_SYMMETRY_HPP

// Orbit-minimality of small families of equal-size sets under permutations of
// the ground set.
//
// A family is given as its masks sorted ascending. Its orbit representative is
// the lexicographically least sorted image over all permutations. Removing the
// largest set of a representative leaves a representative, so the test can be
// applied to every prefix while sets are chosen in ascending order.

#include "antichain/subsets.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace antichain::symmetry {

enum class Minimality {
  Minimal,     // no permutation gives a smaller sorted image
  NotMinimal,  // some permutation does
  Undecided,   // work cap reached; callers must treat this as Minimal
};

namespace detail {

// Ordered partition of the ground positions; cell i maps onto a contiguous
// block of target positions starting at the sum of the previous cell sizes.
struct Cells {
  std::vector<std::uint64_t> cells;
};

// Least image of `set` under any permutation mapping each cell onto its
// block: the lowest |set & cell| positions of every block.
inline std::uint64_t best_image(const Cells& p, std::uint64_t set) {
  std::uint64_t img = 0;
  int offset = 0;
  for (auto c : p.cells) {
    const int in = std::popcount(set & c);
    if (in > 0) img |= bits::low_mask(in) << offset;
    offset += std::popcount(c);
  }
  return img;
}

inline Cells refine(const Cells& p, std::uint64_t set) {
  Cells out;
  out.cells.reserve(p.cells.size() + 4);
  for (auto c : p.cells) {
    const auto in = c & set;
    const auto out_part = c & ~set;
    if (in) out.cells.push_back(in);
    if (out_part) out.cells.push_back(out_part);
  }
  return out;
}

struct Tester {
  std::span<const std::uint64_t> target;  // the family, ascending
  long long budget;
  long long work = 0;
  bool capped = false;

  // true when a strictly smaller sorted image exists below this node
  bool smaller_exists(const Cells& p, std::vector<std::uint64_t>& remaining, std::size_t pos) {
    if (pos == target.size()) return false;
    if (++work > budget) {
      capped = true;
      return false;
    }
    std::uint64_t best = ~std::uint64_t{0};
    for (auto s : remaining) best = std::min(best, best_image(p, s));
    if (best < target[pos]) return true;
    if (best > target[pos]) return false;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      const auto s = remaining[i];
      if (best_image(p, s) != best) continue;
      std::vector<std::uint64_t> rest;
      rest.reserve(remaining.size() - 1);
      for (std::size_t j = 0; j < remaining.size(); ++j)
        if (j != i) rest.push_back(remaining[j]);
      if (smaller_exists(refine(p, s), rest, pos + 1)) return true;
      if (capped) return false;
    }
    return false;
  }
};

}  // namespace detail

/// Decides whether the ascending family `sorted_sets` over [n] is the least
/// sorted image in its orbit. `work_cap` bounds the number of search nodes.
inline Minimality orbit_minimality(int n, std::span<const std::uint64_t> sorted_sets, long long work_cap = 200000) {
  if (sorted_sets.empty()) return Minimality::Minimal;
  detail::Cells root;
  root.cells.push_back(bits::low_mask(n));
  detail::Tester t{sorted_sets, work_cap};
  std::vector<std::uint64_t> remaining(sorted_sets.begin(), sorted_sets.end());
  if (t.smaller_exists(root, remaining, 0)) return Minimality::NotMinimal;
  return t.capped ? Minimality::Undecided : Minimality::Minimal;
}

/// Orbit representatives of r-element families of k-subsets of [n], in
/// ascending lexicographic order, generated orderly (non-minimal prefixes are
/// never extended).
inline std::vector<std::vector<std::uint64_t>> orbit_representatives(int n, int k, int r,
                                                                     long long work_cap = 200000) {
  const std::vector<std::uint64_t> pool = bits::k_subsets(n, k);
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(chosen.size()) == r) {
      out.push_back(chosen);
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      chosen.push_back(pool[i]);
      if (orbit_minimality(n, chosen, work_cap) != Minimality::NotMinimal) self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace antichain::symmetry

#endif  // ANTICHAIN_SYMMETRY_HPP

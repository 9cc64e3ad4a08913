#ifndef ANTICHAIN_CONSTRUCT_HPP
#define ANTICHAIN_CONSTRUCT_HPP

// Explicit r-multiplicity antichains with n - 3 levels.
//
// The ground set is cut into blocks {a} | P | {u} | V0 + {b} | R | W. A "half"
// family lives on levels 2..k (k = floor(n/2)), every member contains the apex
// a, and level t >= 4 is told apart by a label L_t drawn from V0 + {b}. The
// half family together with its complements covers levels 2..n-2.

#include "antichain/bounds.hpp"
#include "antichain/error.hpp"
#include "antichain/family.hpp"
#include "antichain/subsets.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace antichain::construct {

/// Labels L_4..L_K over V0 + {b}: 2-sets {b, v} for t <= ell + 1, then
/// distinct ell-subsets of V0.
struct LabelGadget {
  int m = 0;
  int ell = 0;
  int K = 0;
  std::vector<int> v0;  // ascending
  int b = 0;
  std::vector<std::uint64_t> labels;  // labels[t - 4] for 4 <= t <= K

  std::uint64_t label(int t) const { return labels.at(static_cast<std::size_t>(t - 4)); }
};

namespace detail {

inline std::uint64_t mask_of(std::span<const int> elements) {
  std::uint64_t mask = 0;
  for (int e : elements) mask |= std::uint64_t{1} << (e - 1);
  return mask;
}

// First `count` k-subsets of `universe` in colex order.
inline std::vector<std::uint64_t> first_colex_subsets(std::uint64_t universe, int k, int count) {
  std::vector<std::uint64_t> out;
  if (count <= 0) return out;
  bits::for_each_k_subset_of(universe, k, [&](std::uint64_t s) {
    out.push_back(s);
    return static_cast<int>(out.size()) < count;
  });
  return out;
}

}  // namespace detail

inline LabelGadget build_label_gadget(int m, int K, std::span<const int> v0_elements, int b_element) {
  if (m < 4) throw GadgetPreconditionViolated("m >= 4 violated (m = " + std::to_string(m) + ")");
  const int ell = m / 2;
  if (K < ell + 1) throw GadgetPreconditionViolated("K >= ell + 1 violated");
  if (static_cast<std::uint64_t>(K - (ell + 1)) > bounds::binomial(m, ell))
    throw GadgetPreconditionViolated("K - (ell + 1) <= C(m, ell) violated: " + std::to_string(K - (ell + 1)) +
                                     " > " + std::to_string(bounds::binomial(m, ell)));
  if (static_cast<int>(v0_elements.size()) != m)
    throw GadgetPreconditionViolated("|V0| = m violated");

  std::vector<int> v0(v0_elements.begin(), v0_elements.end());
  std::sort(v0.begin(), v0.end());
  if (std::adjacent_find(v0.begin(), v0.end()) != v0.end())
    throw GadgetPreconditionViolated("V0 elements must be distinct");
  for (int e : v0)
    if (e < 1 || e > 64) throw GadgetPreconditionViolated("V0 element out of range");
  if (b_element < 1 || b_element > 64 || std::binary_search(v0.begin(), v0.end(), b_element))
    throw GadgetPreconditionViolated("b must be a valid element outside V0");

  LabelGadget g{m, ell, K, v0, b_element, {}};
  const std::uint64_t b = std::uint64_t{1} << (b_element - 1);
  for (int t = 4; t <= std::min(K, ell + 1); ++t) g.labels.push_back(b | (std::uint64_t{1} << (v0[t - 4] - 1)));
  const auto big = detail::first_colex_subsets(detail::mask_of(v0), ell, K - (ell + 1));
  for (int t = std::max(4, ell + 2); t <= K; ++t) g.labels.push_back(big[static_cast<std::size_t>(t - (ell + 2))]);
  return g;
}

/// Block partition of [n] for the construction, elements assigned in
/// ascending blocks starting with the apex a = 1.
struct ConstructionLayout {
  int n = 0;
  int r = 0;
  int k = 0;
  int m = 0;
  int ell = 0;
  bounds::Tier tier = bounds::Tier::Inapplicable;
  int a = 0;
  std::vector<int> P;
  int u = 0;
  std::vector<int> V0;
  int b = 0;
  std::vector<int> R;
  std::vector<int> W;

  std::vector<int> rprime() const {
    std::vector<int> out = R;
    out.insert(out.end(), W.begin(), W.end());
    return out;
  }
};

inline ConstructionLayout build_layout(int n, int r) {
  const auto app = bounds::construction_applicability(n, r);
  if (!app.applicable())
    throw LayoutInfeasible("no layout for n = " + std::to_string(n) + ", r = " + std::to_string(r) + ": " +
                           app.reason);
  ConstructionLayout L;
  L.n = n;
  L.r = r;
  L.k = app.k;
  L.m = app.m;
  L.ell = app.ell;
  L.tier = app.tier;
  int next = 1;
  auto take = [&](int count) {
    std::vector<int> out(static_cast<std::size_t>(count));
    std::iota(out.begin(), out.end(), next);
    next += count;
    return out;
  };
  L.a = take(1)[0];
  L.P = take(r);
  L.u = take(1)[0];
  L.V0 = take(L.m);
  L.b = take(1)[0];
  if (L.k - 2 < 0 || next - 1 + (L.k - 2) > n) throw LayoutInfeasible("no room for R");
  L.R = take(L.k - 2);
  L.W = take(n - (next - 1));
  if (static_cast<int>(L.R.size() + L.W.size()) < r) throw LayoutInfeasible("|R'| < r");
  return L;
}

/// Levels 2..k, r members each, all containing the apex.
inline Family build_half_family(const ConstructionLayout& L) {
  const GroundSize ground(L.n);
  const int r = L.r;
  const std::uint64_t apex = std::uint64_t{1} << (L.a - 1);
  const std::uint64_t u = std::uint64_t{1} << (L.u - 1);
  const auto rprime = L.rprime();
  const std::uint64_t rprime_mask = detail::mask_of(rprime);
  if (static_cast<int>(rprime.size()) < r) throw LayoutInfeasible("|R'| < r");

  std::vector<std::uint64_t> masks;
  for (int p : L.P) masks.push_back(apex | (std::uint64_t{1} << (p - 1)));
  for (int j = 0; j < r; ++j) masks.push_back(apex | u | (std::uint64_t{1} << (rprime[j] - 1)));

  if (L.k >= 4) {
    const auto gadget = build_label_gadget(L.m, L.k, L.V0, L.b);
    for (int t = 4; t <= L.k; ++t) {
      const std::uint64_t label = gadget.label(t);
      const int s = t - 1 - bits::popcount(label);
      if (s < 1 || s > static_cast<int>(rprime.size()) - 1)
        throw ConstructionPostconditionFailed("s(t) = " + std::to_string(s) + " outside 1..|R'|-1 at t = " +
                                              std::to_string(t));
      const auto blocks = detail::first_colex_subsets(rprime_mask, s, r);
      if (static_cast<int>(blocks.size()) < r)
        throw ConstructionPostconditionFailed("fewer than r subsets of R' at t = " + std::to_string(t));
      for (auto blk : blocks) masks.push_back(apex | label | blk);
    }
  }
  return Family::from_masks(ground, masks);
}

/// Half family plus its complements; occurring levels are exactly 2..n-2.
inline Family build_construction(int n, int r) {
  const auto layout = build_layout(n, r);
  const Family half = build_half_family(layout);
  const Family comp = complement_family(half);

  std::vector<SubsetCode> all(half.members().begin(), half.members().end());
  all.insert(all.end(), comp.members().begin(), comp.members().end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw ConstructionPostconditionFailed("half family meets its complement family");
  Family out(GroundSize(n), std::move(all));

  if (!is_r_multiplicity_antichain(out, r))
    throw ConstructionPostconditionFailed("constructed family is not an r-multiplicity antichain");
  std::vector<int> want(static_cast<std::size_t>(std::max(0, n - 3)));
  std::iota(want.begin(), want.end(), 2);
  if (out.profile().occurring != want)
    throw ConstructionPostconditionFailed("constructed family does not occupy levels 2..n-2");
  return out;
}

}  // namespace antichain::construct

#endif  // ANTICHAIN_CONSTRUCT_HPP

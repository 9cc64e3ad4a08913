#ifndef ANTICHAIN_BOUNDS_HPP
#define ANTICHAIN_BOUNDS_HPP

// Closed-form bounds on g(n, r) and on the threshold n0(r), evaluated exactly.
//
// g(n, r) is the largest number of distinct set sizes in an antichain on [n]
// whose every occurring size class has at least r members. n0(r) is the least
// n0 with g(n, r) = n - 3 for all n > n0.

#include "antichain/error.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace antichain::bounds {

/// C(m, k) for 0 <= m <= 64; zero outside 0 <= k <= m.
inline std::uint64_t binomial(int m, int k) {
  if (m < 0 || m > 64) throw DomainError("binomial: m must be in 0..64");
  if (k < 0 || k > m) return 0;
  k = std::min(k, m - k);
  __extension__ unsigned __int128 c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<unsigned>(m - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(c);
}

/// C(m, floor(m/2)) >= 2^m / (2 sqrt m), decided as (2C)^2 m >= 4^m.
inline bool central_binomial_inequality_holds(int m) {
  if (m < 1) throw DomainError("central binomial inequality needs m >= 1");
  using boost::multiprecision::cpp_int;
  const cpp_int c = binomial(m, m / 2);
  const cpp_int lhs = (2 * c) * (2 * c) * m;
  const cpp_int rhs = cpp_int(1) << (2 * m);
  return lhs >= rhs;
}

/// Least m >= 1 with C(m, floor(m/2)) >= K, by linear scan.
inline int min_m_for(std::uint64_t K) {
  if (K < 1) throw DomainError("min_m_for needs K >= 1");
  for (int m = 1; m <= 64; ++m)
    if (binomial(m, m / 2) >= K) return m;
  throw DomainError("min_m_for: K exceeds C(64, 32)");
}

namespace detail {

using Big = boost::multiprecision::cpp_bin_float_100;

inline long double lg(long double x) { return std::log2(x); }
inline Big lg(const Big& x) { return boost::multiprecision::log(x) / boost::multiprecision::log(Big(2)); }

struct GuardedValue {
  long long floor;
  bool integral;  // value is an integer (to 80 digits)

  long long ceil() const { return integral ? floor : floor + 1; }
};

// Floor of a real expression. The long double value decides unless it lies
// within 1e-6 of an integer; then a 100-digit evaluation decides.
template <typename Expr>
GuardedValue guarded_floor(Expr expr) {
  const long double v = expr(static_cast<long double>(1));
  const long double nearest = std::round(v);
  if (std::fabs(v - nearest) >= 1e-6L) return {static_cast<long long>(std::floor(v)), false};
  const Big precise = expr(Big(1));
  const Big diff = precise - Big(static_cast<long long>(nearest));
  const auto base = static_cast<long long>(nearest);
  if (boost::multiprecision::abs(diff) < Big("1e-80")) return {base, true};
  return {diff > 0 ? base : base - 1, false};
}

}  // namespace detail

/// ceil(log2 K + (1/2) log2 log2 K + 2), the cap on min_m_for(K) for K >= 4.
inline long long min_m_ceiling(std::uint64_t K) {
  if (K < 4) throw DomainError("min_m_ceiling needs K >= 4");
  const auto v = detail::guarded_floor([K](auto one) {
    using T = decltype(one);
    const T k = T(static_cast<long double>(K));
    return detail::lg(k) + detail::lg(detail::lg(k)) / 2 + 2;
  });
  return v.ceil();
}

/// 2r + 2 log2 r + log2 log2 r + 15, the hypothesis of the explicit construction.
inline detail::GuardedValue construction_bound(int r) {
  if (r < 2) throw DomainError("construction bound needs r >= 2");
  return detail::guarded_floor([r](auto one) {
    using T = decltype(one);
    const T rr = T(r);
    return 2 * rr + 2 * detail::lg(rr) + detail::lg(detail::lg(rr)) + 15;
  });
}

/// Smallest integer n satisfying the construction hypothesis.
inline int construction_threshold(int r) { return static_cast<int>(construction_bound(r).ceil()); }

/// Best closed-form upper bound on g(n, r): n - 4 inside the window
/// r + 3 <= n <= 2r + 2 for r >= 4, n - 3 otherwise.
inline int g_upper_bound(int n, int r) {
  if (n < 4 || r < 2) throw DomainError("g_upper_bound needs n >= 4 and r >= 2");
  if (r >= 4 && n >= r + 3 && n <= 2 * r + 2) return n - 4;
  return n - 3;
}

struct BoundsReport {
  std::optional<int> n;
  int r = 0;
  std::optional<int> g_upper;
  int n0_lower = 0;
  int n0_upper = 0;
  std::optional<int> n0_exact;
  std::map<std::string, std::string> provenance;
};

inline BoundsReport n0_bounds(int r) {
  if (r < 2) throw DomainError("n0 bounds need r >= 2");
  BoundsReport rep;
  rep.r = r;
  rep.n0_upper = static_cast<int>(construction_bound(r).floor);
  rep.provenance["n0_upper"] = "floor(2r + 2 log2 r + log2 log2 r + 15), explicit construction";
  if (r == 2) {
    rep.n0_lower = 3;
    rep.n0_exact = 3;
    rep.provenance["n0_lower"] = "g(3,2) = 1 != 3 - 3";
    rep.provenance["n0_exact"] = "g(n,2) = n - 3 certified for 4 <= n <= 21";
  } else if (r == 3) {
    rep.n0_lower = 8;
    rep.n0_exact = 8;
    rep.provenance["n0_lower"] = "g(8,3) <= 4 by exhaustive search";
    rep.provenance["n0_exact"] = "g(n,3) = n - 3 certified for 9 <= n <= 24";
  } else {
    rep.n0_lower = 2 * r + 2;
    rep.provenance["n0_lower"] = "2r + 2 (g(2r+2, r) <= n - 4)";
  }
  return rep;
}

inline BoundsReport bounds_report(int r, std::optional<int> n = std::nullopt) {
  BoundsReport rep = n0_bounds(r);
  rep.n = n;
  if (n && *n >= 4) {
    rep.g_upper = g_upper_bound(*n, r);
    const bool window = r >= 4 && *n >= r + 3 && *n <= 2 * r + 2;
    rep.provenance["g_upper"] = window ? "n - 4 (window r + 3 <= n <= 2r + 2, r >= 4)" : "n - 3 (r >= 2, n >= 4)";
  } else if (n) {
    rep.provenance["g_upper"] = "not defined for n < 4";
  }
  return rep;
}

enum class Tier { Strict, Relaxed, Inapplicable };

inline const char* to_string(Tier t) {
  switch (t) {
    case Tier::Strict: return "strict";
    case Tier::Relaxed: return "relaxed";
    case Tier::Inapplicable: return "inapplicable";
  }
  return "?";
}

/// Whether the explicit construction runs for (n, r), and the derived
/// parameters k = floor(n/2), m = min_m_for(k), ell = floor(m/2).
struct Applicability {
  Tier tier = Tier::Inapplicable;
  int n = 0;
  int r = 0;
  int k = 0;
  int m = 0;
  int ell = 0;
  std::string reason;  // first violated prerequisite when inapplicable

  bool applicable() const noexcept { return tier != Tier::Inapplicable; }
};

inline Applicability construction_applicability(int n, int r) {
  if (r < 2) throw DomainError("construction needs r >= 2");
  if (n < 1) throw DomainError("construction needs n >= 1");
  Applicability a;
  a.n = n;
  a.r = r;
  a.k = n / 2;
  if (n > 64) {
    a.reason = "n > 64";
    return a;
  }
  const bool strict = n >= construction_threshold(r);
  auto fail = [&](std::string why) {
    if (strict) throw Error("construction prerequisite failed under the strict hypothesis: " + why);
    a.tier = Tier::Inapplicable;
    a.reason = std::move(why);
    return a;
  };
  if (a.k < 1) return fail("k = floor(n/2) < 1");
  a.m = min_m_for(static_cast<std::uint64_t>(a.k));
  a.ell = a.m / 2;
  const int k = a.k, m = a.m, ell = a.ell;
  if (m < 4) return fail("m = " + std::to_string(m) + " < 4");
  if (k < r + m + 1)
    return fail("k = " + std::to_string(k) + " < r + m + 1 = " + std::to_string(r + m + 1));
  if (static_cast<std::uint64_t>(k - (ell + 1)) > binomial(m, ell))
    return fail("k - (ell + 1) > C(m, ell)");
  if (k < ell + 1) return fail("k < ell + 1");
  const int rprime = n - 1 - r - 1 - (m + 1);
  if (rprime < k - 2) return fail("no room for R (|R'| < k - 2)");
  if (rprime < r) return fail("|R'| < r");
  a.tier = strict ? Tier::Strict : Tier::Relaxed;
  return a;
}

}  // namespace antichain::bounds

#endif  // ANTICHAIN_BOUNDS_HPP

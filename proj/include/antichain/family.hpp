#ifndef ANTICHAIN_FAMILY_HPP
#define ANTICHAIN_FAMILY_HPP

#include "antichain/error.hpp"
#include "antichain/subsets.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace antichain {

inline constexpr int kMaxGroundSize = 64;

/// Size n of the ground set [n] = {1, ..., n}; 1 <= n <= 64.
class GroundSize {
public:
  explicit GroundSize(int n) : n_(n) {
    if (n < 1 || n > kMaxGroundSize)
      throw DomainError("ground size must be in 1..64, got " + std::to_string(n));
  }

  int value() const noexcept { return n_; }
  std::uint64_t mask() const noexcept { return bits::low_mask(n_); }

  friend bool operator==(GroundSize, GroundSize) = default;

private:
  int n_;
};

/// A subset of [n] as a bit mask; bit i-1 is element i.
///
/// Ordering is the canonical member order used everywhere in the library:
/// by size first, then by the mask read as an unsigned integer.
class SubsetCode {
public:
  SubsetCode() = default;

  static SubsetCode from_bits(GroundSize ground, std::uint64_t mask) {
    if ((mask & ~ground.mask()) != 0)
      throw InvalidFamily("subset has an element outside [" + std::to_string(ground.value()) + "]");
    return SubsetCode(mask);
  }

  static SubsetCode from_elements(GroundSize ground, std::span<const int> elements) {
    std::uint64_t mask = 0;
    for (int e : elements) {
      if (e < 1 || e > ground.value())
        throw InvalidFamily("element " + std::to_string(e) + " outside [" +
                            std::to_string(ground.value()) + "]");
      const std::uint64_t bit = std::uint64_t{1} << (e - 1);
      if (mask & bit) throw InvalidFamily("repeated element " + std::to_string(e));
      mask |= bit;
    }
    return SubsetCode(mask);
  }

  static SubsetCode from_elements(GroundSize ground, std::initializer_list<int> elements) {
    return from_elements(ground, std::span<const int>(elements.begin(), elements.size()));
  }

  std::uint64_t bits() const noexcept { return bits_; }
  int size() const noexcept { return size_; }
  bool contains(int element) const noexcept {
    return element >= 1 && element <= 64 && ((bits_ >> (element - 1)) & 1U);
  }
  bool subset_of(SubsetCode other) const noexcept { return bits::subset_of(bits_, other.bits_); }
  std::vector<int> elements() const { return bits::elements_of(bits_); }

  friend bool operator==(const SubsetCode& a, const SubsetCode& b) noexcept { return a.bits_ == b.bits_; }
  friend std::strong_ordering operator<=>(const SubsetCode& a, const SubsetCode& b) noexcept {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

private:
  explicit SubsetCode(std::uint64_t mask) : bits_(mask), size_(bits::popcount(mask)) {}

  std::uint64_t bits_ = 0;
  int size_ = 0;
};

/// Per-size member counts and the set S(F) of sizes that occur.
struct LevelProfile {
  std::vector<int> counts;     // index t = 0..n
  std::vector<int> occurring;  // ascending

  int count(int t) const noexcept {
    return t >= 0 && t < static_cast<int>(counts.size()) ? counts[t] : 0;
  }
  int num_levels() const noexcept { return static_cast<int>(occurring.size()); }

  friend bool operator==(const LevelProfile&, const LevelProfile&) = default;
};

/// A set of distinct subsets of [n], kept in canonical order.
class Family {
public:
  explicit Family(GroundSize ground) : Family(ground, std::vector<SubsetCode>{}) {}

  Family(GroundSize ground, std::vector<SubsetCode> members) : ground_(ground), members_(std::move(members)) {
    for (const auto& m : members_)
      if ((m.bits() & ~ground_.mask()) != 0)
        throw InvalidFamily("member does not fit ground set [" + std::to_string(ground_.value()) + "]");
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
      throw InvalidFamily("family members must be pairwise distinct");
    index_levels();
  }

  /// Convenience for literals: Family::of(3, {{1}, {2}}).
  static Family of(int n, std::initializer_list<std::initializer_list<int>> sets) {
    GroundSize g(n);
    std::vector<SubsetCode> members;
    members.reserve(sets.size());
    for (const auto& s : sets) members.push_back(SubsetCode::from_elements(g, s));
    return Family(g, std::move(members));
  }

  static Family from_masks(GroundSize ground, std::span<const std::uint64_t> masks) {
    std::vector<SubsetCode> members;
    members.reserve(masks.size());
    for (auto m : masks) members.push_back(SubsetCode::from_bits(ground, m));
    return Family(ground, std::move(members));
  }

  GroundSize ground() const noexcept { return ground_; }
  int n() const noexcept { return ground_.value(); }
  std::span<const SubsetCode> members() const& noexcept { return members_; }
  // a temporary family hands its members over instead of a dangling view
  std::vector<SubsetCode> members() && noexcept { return std::move(members_); }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const LevelProfile& profile() const noexcept { return profile_; }

  /// Members of size t, in canonical order.
  std::span<const SubsetCode> level(int t) const noexcept {
    if (t < 0 || t > n()) return {};
    return std::span<const SubsetCode>(members_).subspan(offsets_[t], offsets_[t + 1] - offsets_[t]);
  }

  bool contains(SubsetCode s) const { return std::binary_search(members_.begin(), members_.end(), s); }

  friend bool operator==(const Family& a, const Family& b) {
    return a.ground_ == b.ground_ && a.members_ == b.members_;
  }

private:
  void index_levels() {
    const int n = ground_.value();
    profile_.counts.assign(n + 1, 0);
    for (const auto& m : members_) ++profile_.counts[m.size()];
    profile_.occurring.clear();
    offsets_.assign(n + 2, 0);
    for (int t = 0; t <= n; ++t) {
      if (profile_.counts[t] > 0) profile_.occurring.push_back(t);
      offsets_[t + 1] = offsets_[t] + profile_.counts[t];
    }
  }

  GroundSize ground_;
  std::vector<SubsetCode> members_;
  LevelProfile profile_;
  std::vector<std::size_t> offsets_;
};

inline LevelProfile level_profile(const Family& f) { return f.profile(); }

/// No member is contained in another. Only members of strictly smaller size
/// are tested against larger ones; equal-size distinct sets never nest.
inline bool is_antichain(const Family& f) {
  const auto& occ = f.profile().occurring;
  for (std::size_t i = 0; i < occ.size(); ++i) {
    const auto lower = f.level(occ[i]);
    for (std::size_t j = i + 1; j < occ.size(); ++j) {
      const auto upper = f.level(occ[j]);
      for (const auto& a : lower)
        for (const auto& b : upper)
          if (a.subset_of(b)) return false;
    }
  }
  return true;
}

inline bool is_r_multiplicity_antichain(const Family& f, int r) {
  for (int t : f.profile().occurring)
    if (f.profile().counts[t] < r) return false;
  return is_antichain(f);
}

inline Family complement_family(const Family& f) {
  std::vector<SubsetCode> out;
  out.reserve(f.size());
  const auto full = f.ground().mask();
  for (const auto& m : f.members()) out.push_back(SubsetCode::from_bits(f.ground(), full & ~m.bits()));
  return Family(f.ground(), std::move(out));
}

/// Keeps the r canonically-first members of every occurring level.
inline Family trim_to_exact(const Family& f, int r) {
  if (r < 1) throw DomainError("multiplicity must be positive");
  std::vector<SubsetCode> out;
  for (int t : f.profile().occurring) {
    const auto lvl = f.level(t);
    if (static_cast<int>(lvl.size()) < r)
      throw MultiplicityDeficit("level " + std::to_string(t) + " has " + std::to_string(lvl.size()) +
                                " members, fewer than " + std::to_string(r));
    out.insert(out.end(), lvl.begin(), lvl.begin() + r);
  }
  return Family(f.ground(), std::move(out));
}

// Shapes of a family of 2-sets.
namespace shape {
struct Empty {
  friend bool operator==(const Empty&, const Empty&) = default;
};
struct Star {
  int center;
  friend bool operator==(const Star&, const Star&) = default;
};
struct Triangle {
  int a, b, c;
  friend bool operator==(const Triangle&, const Triangle&) = default;
};
struct NotIntersecting {
  SubsetCode first, second;
  friend bool operator==(const NotIntersecting&, const NotIntersecting&) = default;
};
}  // namespace shape

using TwoSetShape = std::variant<shape::Empty, shape::Star, shape::Triangle, shape::NotIntersecting>;

/// Star/triangle classification of a family of 2-sets. A pairwise
/// intersecting family with a common element is reported as a star on the
/// smallest such element.
inline TwoSetShape classify_two_sets(const Family& e) {
  for (const auto& m : e.members())
    if (m.size() != 2) throw SizeViolation("classify_two_sets expects 2-sets only");
  const auto ms = e.members();
  if (ms.empty()) return shape::Empty{};
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if ((ms[i].bits() & ms[j].bits()) == 0) return shape::NotIntersecting{ms[i], ms[j]};
  std::uint64_t common = ~std::uint64_t{0};
  std::uint64_t all = 0;
  for (const auto& m : ms) {
    common &= m.bits();
    all |= m.bits();
  }
  if (common != 0) return shape::Star{bits::elements_of(common).front()};
  // Pairwise intersecting without a common point forces exactly {ab, ac, bc}.
  const auto els = bits::elements_of(all);
  if (els.size() != 3 || ms.size() != 3)
    throw Error("classify_two_sets: pairwise intersecting family is neither star nor triangle");
  return shape::Triangle{els[0], els[1], els[2]};
}

}  // namespace antichain

#endif  // ANTICHAIN_FAMILY_HPP

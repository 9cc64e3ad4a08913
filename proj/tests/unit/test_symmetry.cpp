#include "antichain/symmetry.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

namespace {

using namespace antichain;
using namespace antichain::symmetry;

std::vector<std::uint64_t> masks(std::initializer_list<std::vector<int>> sets) {
  std::vector<std::uint64_t> out;
  for (const auto& s : sets) out.push_back(oracle::mask_of(s));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(OrbitMinimality, SmallCases) {
  EXPECT_EQ(orbit_minimality(4, masks({{1, 2}, {1, 3}})), Minimality::Minimal);
  EXPECT_EQ(orbit_minimality(4, masks({{1, 2}, {3, 4}})), Minimality::Minimal);
  EXPECT_EQ(orbit_minimality(4, masks({{1, 3}, {1, 4}})), Minimality::NotMinimal);
  EXPECT_EQ(orbit_minimality(4, masks({{2, 3}})), Minimality::NotMinimal);
  EXPECT_EQ(orbit_minimality(4, {}), Minimality::Minimal);
}

TEST(OrbitMinimality, WorkCapReportsUndecided) {
  EXPECT_EQ(orbit_minimality(8, masks({{1, 2}, {1, 3}, {2, 4}}), 1), Minimality::Undecided);
}

TEST(OrbitRepresentatives, ThreeEdgeGraphsOnEightVertices) {
  const auto reps = orbit_representatives(8, 2, 3);
  EXPECT_EQ(reps.size(), oracle::count_orbits(8, 2, 3));
  EXPECT_EQ(reps.size(), 5u);
}

TEST(OrbitRepresentatives, MatchBruteForceOrbitCounts) {
  for (auto [n, k, r] : {std::tuple{5, 2, 2}, {5, 2, 4}, {6, 2, 4}, {6, 3, 2}, {6, 3, 3}, {5, 1, 3}, {6, 2, 5}}) {
    EXPECT_EQ(orbit_representatives(n, k, r).size(), oracle::count_orbits(n, k, r)) << n << " " << k << " " << r;
  }
}

TEST(OrbitRepresentatives, EachRepresentativeIsLeastInItsOrbit) {
  // every family of the orbit class maps onto exactly one representative
  const auto reps = orbit_representatives(6, 2, 3);
  for (const auto& rep : reps) EXPECT_EQ(orbit_minimality(6, rep), Minimality::Minimal);
  EXPECT_TRUE(std::is_sorted(reps.begin(), reps.end()));
}

TEST(OrbitRepresentatives, StarAndTriangleAreDistinctClasses) {
  const auto reps = orbit_representatives(5, 2, 3);
  const auto star = masks({{1, 2}, {1, 3}, {1, 4}});
  const auto triangle = masks({{1, 2}, {1, 3}, {2, 3}});
  EXPECT_NE(std::find(reps.begin(), reps.end(), star), reps.end());
  EXPECT_NE(std::find(reps.begin(), reps.end(), triangle), reps.end());
}

TEST(OrbitRepresentatives, CappedWorkKeepsEveryTrueRepresentative) {
  const auto exact = orbit_representatives(8, 2, 3);
  const auto capped = orbit_representatives(8, 2, 3, 1);
  EXPECT_GE(capped.size(), exact.size());
  for (const auto& rep : exact) EXPECT_NE(std::find(capped.begin(), capped.end(), rep), capped.end());
}

}  // namespace

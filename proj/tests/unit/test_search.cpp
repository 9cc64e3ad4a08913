#include "antichain/search.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <vector>

namespace {

using namespace antichain;
using namespace antichain::search;

std::vector<int> range(int a, int b) {
  std::vector<int> v;
  for (int t = a; t <= b; ++t) v.push_back(t);
  return v;
}

bool exact_witness(const Family& f, int r, const std::vector<int>& T) {
  if (!is_antichain(f) || f.profile().occurring != T) return false;
  for (int t : T)
    if (f.profile().count(t) != r) return false;
  return true;
}

TEST(Profile, EightThreeIsInfeasible) {
  const auto o = feasible_exact_profile({8, 3, range(2, 6)});
  EXPECT_EQ(o.verdict, Verdict::Infeasible);
  EXPECT_EQ(o.stats.first_level, 2);
  EXPECT_EQ(o.stats.first_level_families, 5u);
}

TEST(Profile, EightThreeWithoutSymmetryAgrees) {
  const auto o = feasible_exact_profile({8, 3, range(2, 6)}, {}, symmetry_prune_config(false));
  EXPECT_EQ(o.verdict, Verdict::Infeasible);
  EXPECT_EQ(o.stats.first_level_families, 3276u);  // C(28, 3)
}

TEST(Profile, SmallExamples) {
  EXPECT_EQ(feasible_exact_profile({3, 2, {1, 2}}).verdict, Verdict::Infeasible);
  const auto o = feasible_exact_profile({4, 2, {2}});
  ASSERT_EQ(o.verdict, Verdict::Feasible);
  EXPECT_TRUE(exact_witness(*o.witness, 2, {2}));
  EXPECT_EQ(*o.witness, Family::of(4, {{1, 2}, {1, 3}}));
}

TEST(Profile, ThirteenFourIsFeasible) {
  const auto o = feasible_exact_profile({13, 4, range(2, 11)});
  ASSERT_EQ(o.verdict, Verdict::Feasible);
  EXPECT_TRUE(exact_witness(*o.witness, 4, range(2, 11)));
}

TEST(Profile, EmptyTargetIsTheEmptyFamily) {
  const auto o = feasible_exact_profile({5, 3, {}});
  ASSERT_EQ(o.verdict, Verdict::Feasible);
  EXPECT_TRUE(o.witness->empty());
}

TEST(Profile, LevelsMayIncludeZeroAndN) {
  EXPECT_EQ(feasible_exact_profile({4, 1, {0}}).verdict, Verdict::Feasible);
  EXPECT_EQ(feasible_exact_profile({4, 2, {0}}).verdict, Verdict::Infeasible);
  EXPECT_EQ(feasible_exact_profile({4, 1, {0, 1}}).verdict, Verdict::Infeasible);
}

TEST(Profile, InvalidInstances) {
  EXPECT_THROW(feasible_exact_profile({4, 2, {5}}), InvalidInstance);
  EXPECT_THROW(feasible_exact_profile({4, 2, {-1}}), InvalidInstance);
  EXPECT_THROW(feasible_exact_profile({4, 0, {1}}), InvalidInstance);
  EXPECT_THROW(feasible_exact_profile({65, 2, {1}}), InvalidInstance);
}

TEST(Profile, BudgetExpiryIsUnknownNeverInfeasible) {
  SearchBudget b;
  b.max_nodes = 50;
  const auto o = feasible_exact_profile({8, 3, range(2, 6)}, b);
  EXPECT_EQ(o.verdict, Verdict::Unknown);
  SearchBudget t;
  t.wall_time = 1e-9;
  EXPECT_EQ(feasible_exact_profile({8, 3, range(2, 6)}, t).verdict, Verdict::Unknown);
}

TEST(Profile, OversizedCandidateTablesAreUnknown) {
  SearchConfig cfg;
  cfg.max_candidates = 100;
  const auto o = feasible_exact_profile({10, 2, {5}}, {}, cfg);
  EXPECT_EQ(o.verdict, Verdict::Unknown);
  EXPECT_FALSE(o.stats.note.empty());
}

TEST(Profile, MatchesDefinitionLevelEnumerator) {
  // every T inside {1..n-1}, n <= 6, r <= 3, with each prune rule on and off
  for (int n = 1; n <= 6; ++n)
    for (int r = 1; r <= 3; ++r)
      for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << std::max(0, n - 1)); ++sel) {
        std::vector<int> T;
        for (int t = 1; t <= n - 1; ++t)
          if ((sel >> (t - 1)) & 1U) T.push_back(t);
        const bool want = oracle::profile_feasible(n, r, T);
        for (bool sym : {true, false})
          for (bool fc : {true, false}) {
            SearchConfig cfg;
            cfg.symmetry = sym;
            cfg.forward_check = fc;
            const auto o = feasible_exact_profile({n, r, T}, {}, cfg);
            ASSERT_NE(o.verdict, Verdict::Unknown);
            ASSERT_EQ(o.verdict == Verdict::Feasible, want) << "n=" << n << " r=" << r << " sel=" << sel;
            if (o.witness) {
              ASSERT_TRUE(exact_witness(*o.witness, r, T));
            }
          }
      }
}

TEST(Profile, ComplementSymmetryOfVerdicts) {
  for (int n = 4; n <= 7; ++n)
    for (int r = 2; r <= 3; ++r)
      for (std::uint64_t sel = 1; sel < (std::uint64_t{1} << (n - 1)); sel += 3) {
        std::vector<int> T, R;
        for (int t = 1; t <= n - 1; ++t)
          if ((sel >> (t - 1)) & 1U) {
            T.push_back(t);
            R.push_back(n - t);
          }
        std::sort(R.begin(), R.end());
        const auto a = feasible_exact_profile({n, r, T});
        const auto b = feasible_exact_profile({n, r, R});
        ASSERT_EQ(a.verdict, b.verdict) << n << " " << r << " " << sel;
        if (a.witness) {
          ASSERT_TRUE(exact_witness(complement_family(*a.witness), r, R));
        }
      }
}

TEST(Profile, DeterministicWitnessSingleThread) {
  const auto a = feasible_exact_profile({13, 4, range(2, 11)});
  const auto b = feasible_exact_profile({13, 4, range(2, 11)});
  ASSERT_TRUE(a.witness && b.witness);
  EXPECT_EQ(*a.witness, *b.witness);
}

TEST(Profile, ThreadCountDoesNotChangeVerdicts) {
  SearchBudget b;
  b.threads = 3;
  EXPECT_EQ(feasible_exact_profile({8, 3, range(2, 6)}, b).verdict, Verdict::Infeasible);
  const auto o = feasible_exact_profile({13, 4, range(2, 11)}, b);
  ASSERT_EQ(o.verdict, Verdict::Feasible);
  EXPECT_TRUE(exact_witness(*o.witness, 4, range(2, 11)));
  // the smallest successful first-level task wins, as in a single-threaded run
  EXPECT_EQ(*o.witness, *feasible_exact_profile({13, 4, range(2, 11)}).witness);
}

TEST(GExact, Examples) {
  const auto g32 = g_exact(3, 2);
  EXPECT_EQ(g32.kind, GKind::Exact);
  EXPECT_EQ(g32.lo, 1);
  ASSERT_TRUE(g32.witness);
  EXPECT_TRUE(is_r_multiplicity_antichain(*g32.witness, 2));
  EXPECT_EQ(g32.witness->profile().num_levels(), 1);

  EXPECT_EQ(g_exact(4, 2).lo, 1);
  EXPECT_EQ(g_exact(5, 2).lo, 2);
  EXPECT_EQ(g_exact(4, 1).lo, 2);
  EXPECT_EQ(g_exact(3, 1).lo, 2);
}

TEST(GExact, MatchesBruteForceOracle) {
  for (int n = 1; n <= 5; ++n)
    for (int r = 1; r <= 3; ++r) {
      const auto g = g_exact(n, r);
      ASSERT_EQ(g.kind, GKind::Exact);
      EXPECT_EQ(g.lo, oracle::brute_force_g(n, r)) << n << " " << r;
      if (g.witness) {
        EXPECT_TRUE(is_r_multiplicity_antichain(*g.witness, r));
      }
    }
}

TEST(GExact, EightThreeIsAtMostFour) {
  const auto g = g_exact(8, 3);
  ASSERT_EQ(g.kind, GKind::Exact);
  EXPECT_LE(g.lo, 4);
  EXPECT_EQ(g.lo, 4);
  ASSERT_TRUE(g.witness);
  EXPECT_TRUE(is_r_multiplicity_antichain(*g.witness, 3));
}

TEST(GExact, MonotoneInNAndR) {
  int table[7][4] = {};
  for (int n = 1; n <= 6; ++n)
    for (int r = 1; r <= 3; ++r) table[n][r] = g_exact(n, r).lo;
  for (int n = 2; n <= 6; ++n)
    for (int r = 1; r <= 3; ++r) EXPECT_GE(table[n][r], table[n - 1][r]) << n << " " << r;
  for (int n = 1; n <= 6; ++n)
    for (int r = 2; r <= 3; ++r) EXPECT_LE(table[n][r], table[n][r - 1]) << n << " " << r;
}

TEST(GExact, BudgetGivesInterval) {
  SearchBudget b;
  b.max_nodes = 5;
  const auto g = g_exact(8, 3, b);
  EXPECT_NE(g.kind, GKind::Exact);
}

TEST(BruteForceOracle, Examples) {
  EXPECT_EQ(oracle::brute_force_g(3, 2), 1);
  // {1} and {2,3} already give two sizes on [3]
  EXPECT_EQ(oracle::brute_force_g(3, 1), 2);
  EXPECT_EQ(oracle::brute_force_g(4, 1), 2);
  EXPECT_THROW(oracle::brute_force_g(6, 2), InstanceTooLarge);
  EXPECT_THROW(oracle::brute_force_g(4, 4), InstanceTooLarge);
}

TEST(AdmissibleLevels, DropsLevelsTooSmallForR) {
  EXPECT_EQ(admissible_levels(4, 2), range(1, 3));
  EXPECT_EQ(admissible_levels(4, 1), range(0, 4));
  EXPECT_EQ(g_search_ceiling(10, 4), 6);
}

TEST(Certify, RTwoFourToNine) {
  const auto entries = certify_threshold_range(2, 4, 9);
  ASSERT_EQ(entries.size(), 6u);
  for (const auto& e : entries) {
    EXPECT_EQ(e.status, CertifyStatus::Achieved) << e.n;
    ASSERT_TRUE(e.witness);
    EXPECT_TRUE(is_r_multiplicity_antichain(*e.witness, 2));
    EXPECT_EQ(e.witness->profile().num_levels(), e.n - 3);
  }
}

TEST(Certify, RFourTenIsRefuted) {
  const auto entries = certify_threshold_range(4, 10, 10);
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0].status, CertifyStatus::Refuted);
  EXPECT_FALSE(entries[0].witness);
}

TEST(Certify, FallbackRunsOutsideTheWindow) {
  // r = 3, n = 8: levels 2..6 fail and the closed form allows 5, so g_exact decides
  const auto entries = certify_threshold_range(3, 8, 8);
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0].contiguous.verdict, Verdict::Infeasible);
  ASSERT_TRUE(entries[0].fallback);
  EXPECT_EQ(entries[0].status, CertifyStatus::Refuted);
}

TEST(Certify, Errors) {
  EXPECT_THROW(certify_threshold_range(1, 4, 5), DomainError);
  EXPECT_THROW(certify_threshold_range(2, 3, 5), DomainError);
  EXPECT_THROW(certify_threshold_range(2, 6, 5), DomainError);
  EXPECT_THROW(certify_threshold_range(2, 6, 65), DomainError);
}

}  // namespace

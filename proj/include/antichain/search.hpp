#ifndef ANTICHAIN_SEARCH_HPP
#define ANTICHAIN_SEARCH_HPP

// Exhaustive backtracking over exact-profile instances: does an antichain on
// [n] exist with exactly r members on every level of T and none elsewhere?
//
// Levels above n/2 are stored by complements, so every candidate is a small
// set and every containment test is one AND against a 64-bit mask:
//
//   low A (size s) vs low B (size t > s):   A subset B      <=>  A & ~B == 0
//   low A vs high level with complement c:  A subset ~c     <=>  A & c  == 0
//   high c1 (t1) vs high c2 (t2 > t1):      ~c1 subset ~c2  <=>  c2 & ~c1 == 0
//
// A level is filled completely (r members in strictly increasing order) before
// the next one is opened. The first level is the one with the fewest
// candidates; afterwards the open level is the one with the smallest surviving
// pool. After each placement every unfilled pool is filtered, and a pool that
// can no longer supply its remaining members cuts the branch.

#include "antichain/bounds.hpp"
#include "antichain/error.hpp"
#include "antichain/family.hpp"
#include "antichain/subsets.hpp"
#include "antichain/symmetry.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <cmath>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace antichain::search {

struct ProfileInstance {
  int n = 0;
  int r = 0;
  std::vector<int> levels;  // target sizes T
};

struct SearchBudget {
  std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
  double wall_time = std::numeric_limits<double>::infinity();  // seconds
  int threads = 1;
};

struct SearchConfig {
  bool symmetry = true;       // orbit representatives on the first level
  bool forward_check = true;  // cut when a pool drops below what its level still needs
  long long symmetry_work_cap = 200000;
  std::size_t max_candidates = std::size_t{1} << 23;
};

inline SearchConfig symmetry_prune_config(bool enable) {
  SearchConfig c;
  c.symmetry = enable;
  return c;
}

enum class Verdict { Feasible, Infeasible, Unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Feasible: return "feasible";
    case Verdict::Infeasible: return "infeasible";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

struct SearchStats {
  std::uint64_t nodes = 0;              // attempted set placements
  int max_depth = 0;                    // most sets placed at once
  std::uint64_t pruned_pool_deficit = 0;
  std::uint64_t pruned_symmetry = 0;    // first-level prefixes skipped as non-minimal
  std::uint64_t symmetry_undecided = 0; // minimality checks that hit the work cap
  std::uint64_t first_level_families = 0;
  int first_level = -1;
  double elapsed = 0;
  std::string note;

  void merge(const SearchStats& o) {
    nodes += o.nodes;
    max_depth = std::max(max_depth, o.max_depth);
    pruned_pool_deficit += o.pruned_pool_deficit;
    pruned_symmetry += o.pruned_symmetry;
    symmetry_undecided += o.symmetry_undecided;
    first_level_families += o.first_level_families;
  }
};

struct SearchOutcome {
  Verdict verdict = Verdict::Unknown;
  std::optional<Family> witness;
  SearchStats stats;
};

namespace detail {

using Clock = std::chrono::steady_clock;

struct Level {
  int t = 0;
  int enc = 0;       // size of the stored sets
  bool high = false; // stored by complement
  std::vector<std::uint64_t> candidates;
};

enum class Relation : unsigned char { LowLow, LowHigh, HighHigh };

struct Problem {
  int n = 0;
  int r = 0;
  std::uint64_t full = 0;
  std::vector<Level> levels;  // ascending t
  int first = -1;

  // True when x (in level a) and y (in level b) are comparable; a != b.
  bool comparable(int a, std::uint64_t x, int b, std::uint64_t y) const {
    if (levels[a].t > levels[b].t) {
      std::swap(a, b);
      std::swap(x, y);
    }
    // now level a is the smaller size
    if (!levels[a].high && !levels[b].high) return (x & ~y) == 0;
    if (!levels[a].high) return (x & y) == 0;
    return (y & ~x) == 0;
  }
};

struct Control {
  std::uint64_t max_nodes = 0;
  Clock::time_point deadline;
  bool has_deadline = false;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> expired{false};
  std::atomic<long long> best_task{LLONG_MAX};
};

// Lazily yields first-level families (ascending r-combinations of the first
// level's candidates), skipping non-minimal prefixes when symmetry is on.
class FirstLevelGenerator {
public:
  FirstLevelGenerator(const Problem& p, const SearchConfig& cfg)
      : pool_(p.levels[p.first].candidates), n_(p.n), r_(p.r), cfg_(cfg) {}

  std::optional<std::vector<std::uint64_t>> next() {
    if (done_) return std::nullopt;
    bool advance = started_;
    started_ = true;
    const std::size_t size = pool_.size();
    const std::size_t r = static_cast<std::size_t>(r_);
    if (r > size) {
      done_ = true;
      return std::nullopt;
    }
    for (;;) {
      if (advance) {
        for (;;) {
          if (idx_.empty()) {
            done_ = true;
            return std::nullopt;
          }
          ++idx_.back();
          if (idx_.back() + (r - idx_.size()) < size) break;
          idx_.pop_back();
        }
        advance = false;
      } else {
        idx_.push_back(idx_.empty() ? 0 : idx_.back() + 1);
        if (idx_.back() + (r - idx_.size()) >= size) {
          idx_.pop_back();
          advance = true;
          continue;
        }
      }
      chosen_.clear();
      for (auto i : idx_) chosen_.push_back(pool_[i]);
      if (cfg_.symmetry && chosen_.size() > 1) {
        const auto m = symmetry::orbit_minimality(n_, chosen_, cfg_.symmetry_work_cap);
        if (m == symmetry::Minimality::NotMinimal) {
          ++stats.pruned_symmetry;
          advance = true;
          continue;
        }
        if (m == symmetry::Minimality::Undecided) ++stats.symmetry_undecided;
      }
      if (idx_.size() == r) {
        ++stats.first_level_families;
        return chosen_;
      }
    }
  }

  SearchStats stats;

private:
  const std::vector<std::uint64_t>& pool_;
  int n_;
  int r_;
  SearchConfig cfg_;
  std::vector<std::size_t> idx_;
  std::vector<std::uint64_t> chosen_;
  bool started_ = false;
  bool done_ = false;
};

class Worker {
public:
  Worker(const Problem& p, Control& c, const SearchConfig& cfg) : P_(p), C_(c), cfg_(cfg) {}

  // Runs one first-level family to completion. True when a solution was found
  // (left in placed()).
  bool run(long long task, const std::vector<std::uint64_t>& first_family) {
    task_ = task;
    aborted_ = false;
    const std::size_t L = P_.levels.size();
    pools_.resize(L);
    for (std::size_t i = 0; i < L; ++i) pools_[i] = P_.levels[i].candidates;
    placed_.assign(L, {});
    trail_.clear();
    depth_ = 0;
    for (auto x : first_family) {
      if (!count_node()) return false;
      if (!place(P_.first, x)) return false;
    }
    return dfs(-1);
  }

  bool aborted() const noexcept { return aborted_; }
  const std::vector<std::vector<std::uint64_t>>& placed() const noexcept { return placed_; }
  SearchStats stats;

private:
  bool count_node() {
    ++stats.nodes;
    const auto total = C_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (C_.best_task.load(std::memory_order_relaxed) < task_) {
      // a lower-numbered task already has a solution
      aborted_ = false;
      return false;
    }
    if (C_.expired.load(std::memory_order_relaxed)) {
      aborted_ = true;
      return false;
    }
    if (total > C_.max_nodes) {
      C_.expired = true;
      aborted_ = true;
      return false;
    }
    if (C_.has_deadline && (stats.nodes & 1023) == 0 && Clock::now() >= C_.deadline) {
      C_.expired = true;
      aborted_ = true;
      return false;
    }
    return true;
  }

  bool stopped() const {
    return aborted_ || C_.expired.load(std::memory_order_relaxed) ||
           C_.best_task.load(std::memory_order_relaxed) < task_;
  }

  // Places x in level li and filters every unfilled pool. Returns false on a
  // forward-checking cut (the placement stays on the trail either way).
  bool place(int li, std::uint64_t x) {
    placed_[li].push_back(x);
    trail_.push_back({li, -1, {}});
    ++depth_;
    stats.max_depth = std::max(stats.max_depth, depth_);
    const int r = P_.r;
    bool ok = true;
    for (int lj = 0; lj < static_cast<int>(pools_.size()); ++lj) {
      const int need = r - static_cast<int>(placed_[lj].size());
      if (lj == li || need == 0) continue;
      const auto& pool = pools_[lj];
      std::vector<std::uint64_t> kept = take_buffer();
      kept.reserve(pool.size());
      for (auto y : pool)
        if (!P_.comparable(li, x, lj, y)) kept.push_back(y);
      if (kept.size() == pool.size()) {
        give_buffer(std::move(kept));
        continue;
      }
      trail_.push_back({lj, 0, std::move(pools_[lj])});
      pools_[lj] = std::move(kept);
      if (cfg_.forward_check && static_cast<int>(pools_[lj].size()) < need) {
        ok = false;
        break;
      }
    }
    if (!ok) ++stats.pruned_pool_deficit;
    return ok;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      auto& e = trail_.back();
      if (e.kind < 0) {
        placed_[e.level].pop_back();
        --depth_;
      } else {
        give_buffer(std::move(pools_[e.level]));
        pools_[e.level] = std::move(e.saved);
      }
      trail_.pop_back();
    }
  }

  bool dfs(int open) {
    const int r = P_.r;
    if (open < 0 || static_cast<int>(placed_[open].size()) == r) {
      open = -1;
      std::size_t best = std::numeric_limits<std::size_t>::max();
      for (int i = 0; i < static_cast<int>(pools_.size()); ++i) {
        if (static_cast<int>(placed_[i].size()) == r) continue;
        if (pools_[i].size() < best) {
          best = pools_[i].size();
          open = i;
        }
      }
      if (open < 0) return true;  // every level holds r members
    }
    const auto& pool = pools_[open];
    const int need = r - static_cast<int>(placed_[open].size());
    auto it = placed_[open].empty() ? pool.begin()
                                    : std::upper_bound(pool.begin(), pool.end(), placed_[open].back());
    for (; it != pool.end(); ++it) {
      const auto left = static_cast<long long>(pool.end() - it);
      if (left < need) {
        if (cfg_.forward_check) ++stats.pruned_pool_deficit;
        break;
      }
      if (!count_node()) return false;
      const std::uint64_t y = *it;
      const std::size_t mark = trail_.size();
      // pools_[open] itself is never filtered while its level is open
      if (place(open, y) && dfs(open)) return true;
      undo_to(mark);
      if (stopped()) return false;
    }
    return false;
  }

  std::vector<std::uint64_t> take_buffer() {
    if (free_.empty()) return {};
    auto b = std::move(free_.back());
    free_.pop_back();
    b.clear();
    return b;
  }
  void give_buffer(std::vector<std::uint64_t>&& b) { free_.push_back(std::move(b)); }

  struct TrailEntry {
    int level;
    int kind;  // -1: placement, 0: saved pool
    std::vector<std::uint64_t> saved;
  };

  const Problem& P_;
  Control& C_;
  SearchConfig cfg_;
  long long task_ = 0;
  bool aborted_ = false;
  int depth_ = 0;
  std::vector<std::vector<std::uint64_t>> pools_;
  std::vector<std::vector<std::uint64_t>> placed_;
  std::vector<TrailEntry> trail_;
  std::vector<std::vector<std::uint64_t>> free_;
};

inline std::vector<int> normalize_levels(const ProfileInstance& inst) {
  if (inst.n < 1 || inst.n > kMaxGroundSize) throw InvalidInstance("n must be in 1..64");
  if (inst.r < 1) throw InvalidInstance("r must be positive");
  std::vector<int> T = inst.levels;
  std::sort(T.begin(), T.end());
  T.erase(std::unique(T.begin(), T.end()), T.end());
  for (int t : T)
    if (t < 0 || t > inst.n)
      throw InvalidInstance("level " + std::to_string(t) + " outside 0.." + std::to_string(inst.n));
  return T;
}

inline Family decode_witness(const Problem& P, const std::vector<std::vector<std::uint64_t>>& placed) {
  std::vector<std::uint64_t> masks;
  for (std::size_t i = 0; i < P.levels.size(); ++i)
    for (auto x : placed[i]) masks.push_back(P.levels[i].high ? (P.full & ~x) : x);
  return Family::from_masks(GroundSize(P.n), masks);
}

// Witness check used on every Feasible verdict: antichain, exactly r on each
// target level, nothing elsewhere.
inline bool witness_matches(const Family& f, int r, const std::vector<int>& T) {
  if (!is_antichain(f)) return false;
  if (f.profile().occurring != T) return false;
  for (int t : T)
    if (f.profile().count(t) != r) return false;
  return true;
}

}  // namespace detail

/// Decides an exact-profile instance within the budget. Infeasible is only
/// returned after the search space was exhausted.
inline SearchOutcome feasible_exact_profile(const ProfileInstance& inst, const SearchBudget& budget = {},
                                            const SearchConfig& cfg = {}) {
  using namespace detail;
  const auto start = Clock::now();
  const std::vector<int> T = normalize_levels(inst);
  SearchOutcome out;
  auto finish = [&](Verdict v) {
    out.verdict = v;
    out.stats.elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    return out;
  };

  Problem P;
  P.n = inst.n;
  P.r = inst.r;
  P.full = bits::low_mask(inst.n);
  if (T.empty()) {
    out.witness = Family(GroundSize(inst.n));
    return finish(Verdict::Feasible);
  }
  std::size_t total = 0;
  for (int t : T) {
    const auto count = bounds::binomial(inst.n, std::min(t, inst.n - t));
    total += static_cast<std::size_t>(std::min<std::uint64_t>(count, cfg.max_candidates + 1));
    if (total > cfg.max_candidates) {
      out.stats.note = "candidate tables exceed the configured limit";
      return finish(Verdict::Unknown);
    }
  }
  for (int t : T) {
    Level L;
    L.t = t;
    L.high = 2 * t > inst.n;
    L.enc = L.high ? inst.n - t : t;
    L.candidates = bits::k_subsets(inst.n, L.enc);
    P.levels.push_back(std::move(L));
  }
  P.first = 0;
  for (int i = 1; i < static_cast<int>(P.levels.size()); ++i)
    if (P.levels[i].candidates.size() < P.levels[P.first].candidates.size()) P.first = i;
  out.stats.first_level = P.levels[P.first].t;

  if (cfg.forward_check) {
    for (const auto& L : P.levels)
      if (static_cast<int>(L.candidates.size()) < inst.r) {
        ++out.stats.pruned_pool_deficit;
        return finish(Verdict::Infeasible);
      }
  }

  Control C;
  C.max_nodes = budget.max_nodes;
  if (std::isfinite(budget.wall_time)) {
    C.has_deadline = true;
    C.deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(budget.wall_time));
  }

  FirstLevelGenerator gen(P, cfg);
  std::mutex mu;
  long long next_task = 0;
  std::optional<std::vector<std::vector<std::uint64_t>>> best_placed;
  bool any_aborted = false;
  SearchStats merged;

  auto work = [&]() {
    Worker w(P, C, cfg);
    for (;;) {
      std::optional<std::vector<std::uint64_t>> fam;
      long long task = 0;
      {
        std::lock_guard lock(mu);
        if (C.expired || next_task > C.best_task.load()) break;
        fam = gen.next();
        if (!fam) break;
        task = next_task++;
      }
      const bool found = w.run(task, *fam);
      std::lock_guard lock(mu);
      if (found && task < C.best_task.load()) {
        C.best_task = task;
        best_placed = w.placed();
      }
      if (w.aborted()) any_aborted = true;
    }
    std::lock_guard lock(mu);
    merged.merge(w.stats);
  };

  const int threads = std::max(1, budget.threads);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  merged.merge(gen.stats);
  merged.first_level = out.stats.first_level;
  merged.note = out.stats.note;
  out.stats = merged;

  if (best_placed) {
    Family wit = decode_witness(P, *best_placed);
    if (!witness_matches(wit, inst.r, T)) throw Error("search produced a witness that fails verification");
    out.witness = std::move(wit);
    return finish(Verdict::Feasible);
  }
  if (any_aborted || C.expired) {
    if (out.stats.note.empty()) out.stats.note = "budget exhausted";
    return finish(Verdict::Unknown);
  }
  return finish(Verdict::Infeasible);
}

// ---------------------------------------------------------------------------
// Maximum number of levels.

enum class GKind { Exact, LowerBound, Interval };

inline const char* to_string(GKind k) {
  switch (k) {
    case GKind::Exact: return "exact";
    case GKind::LowerBound: return "lower-bound";
    case GKind::Interval: return "interval";
  }
  return "?";
}

struct GResult {
  GKind kind = GKind::Interval;
  int lo = 0;  // value for Exact / LowerBound
  int hi = 0;  // largest level count not refuted
  std::optional<Family> witness;
  std::vector<int> levels;  // occurring levels of the witness
  std::uint64_t instances = 0;
  SearchStats stats;
};

namespace detail {

inline double remaining_seconds(const SearchBudget& b, Clock::time_point start) {
  if (!std::isfinite(b.wall_time)) return b.wall_time;
  return b.wall_time - std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace detail

/// Sizes that can carry r distinct members at all: C(n, t) >= r.
inline std::vector<int> admissible_levels(int n, int r) {
  std::vector<int> out;
  for (int t = 0; t <= n; ++t)
    if (bounds::binomial(n, t) >= static_cast<std::uint64_t>(r)) out.push_back(t);
  return out;
}

/// Trivial or closed-form ceiling on g(n, r) used to start the descent.
inline int g_search_ceiling(int n, int r) {
  int hi = static_cast<int>(admissible_levels(n, r).size());
  if (n >= 4 && r >= 2) hi = std::min(hi, bounds::g_upper_bound(n, r));
  return hi;
}

/// g(n, r) by descending over the number of levels s and, for each s, over
/// every level set T of that size in colex order.
inline GResult g_exact(int n, int r, const SearchBudget& budget = {}, const SearchConfig& cfg = {}) {
  using namespace detail;
  if (n < 1 || n > kMaxGroundSize) throw InvalidInstance("n must be in 1..64");
  if (r < 1) throw InvalidInstance("r must be positive");
  const auto start = Clock::now();
  GResult res;
  const auto allowed = admissible_levels(n, r);
  if (allowed.size() > 64) throw InvalidInstance("too many admissible levels");
  const int ceiling = g_search_ceiling(n, r);
  int hi = ceiling;  // every s above hi has been fully refuted
  bool refuted_above = true;
  std::uint64_t nodes_used = 0;

  for (int s = ceiling; s >= 1; --s) {
    bool unresolved = false;
    std::uint64_t idx = bits::low_mask(s);
    const std::uint64_t limit = bits::low_mask(static_cast<int>(allowed.size()));
    while (idx != 0 && (idx & ~limit) == 0) {
      ProfileInstance inst{n, r, {}};
      for (std::uint64_t w = idx; w != 0; w &= w - 1) inst.levels.push_back(allowed[std::countr_zero(w)]);
      SearchBudget b = budget;
      b.wall_time = remaining_seconds(budget, start);
      b.max_nodes = budget.max_nodes == std::numeric_limits<std::uint64_t>::max()
                        ? budget.max_nodes
                        : (nodes_used >= budget.max_nodes ? 0 : budget.max_nodes - nodes_used);
      SearchOutcome o;
      if (b.wall_time <= 0 || b.max_nodes == 0) {
        o.verdict = Verdict::Unknown;
      } else {
        o = feasible_exact_profile(inst, b, cfg);
      }
      ++res.instances;
      nodes_used += o.stats.nodes;
      res.stats.merge(o.stats);
      if (o.verdict == Verdict::Feasible) {
        res.kind = refuted_above ? GKind::Exact : GKind::LowerBound;
        res.lo = s;
        res.hi = res.kind == GKind::Exact ? s : hi;
        res.witness = std::move(o.witness);
        res.levels = inst.levels;
        res.stats.elapsed = std::chrono::duration<double>(Clock::now() - start).count();
        return res;
      }
      if (o.verdict == Verdict::Unknown) unresolved = true;
      if (remaining_seconds(budget, start) <= 0 ||
          (budget.max_nodes != std::numeric_limits<std::uint64_t>::max() && nodes_used >= budget.max_nodes)) {
        res.kind = GKind::Interval;
        res.lo = 0;
        res.hi = hi;
        res.stats.elapsed = std::chrono::duration<double>(Clock::now() - start).count();
        return res;
      }
      idx = bits::next_same_popcount(idx);
    }
    if (unresolved) {
      refuted_above = false;
    } else if (refuted_above) {
      hi = s - 1;
    }
  }
  res.stats.elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  if (refuted_above) {
    res.kind = GKind::Exact;
    res.lo = res.hi = 0;
    res.witness = Family(GroundSize(n));
  } else {
    res.kind = GKind::Interval;
    res.lo = 0;
    res.hi = hi;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Threshold certification.

enum class CertifyStatus { Achieved, Refuted, Unknown };

inline const char* to_string(CertifyStatus s) {
  switch (s) {
    case CertifyStatus::Achieved: return "achieved";
    case CertifyStatus::Refuted: return "refuted";
    case CertifyStatus::Unknown: return "unknown";
  }
  return "?";
}

struct CertifyEntry {
  int n = 0;
  CertifyStatus status = CertifyStatus::Unknown;
  std::optional<Family> witness;  // n - 3 levels when achieved
  SearchOutcome contiguous;       // the attempt at levels 2..n-2
  std::optional<GResult> fallback;
};

struct CertifyOptions {
  bool fallback = true;  // run g_exact when levels 2..n-2 fail
};

inline std::vector<int> contiguous_levels(int n) {
  std::vector<int> T;
  for (int t = 2; t <= n - 2; ++t) T.push_back(t);
  return T;
}

/// For each n in [from, to], tries to realise n - 3 levels: first on 2..n-2,
/// then over every level set via g_exact. When the closed-form bound already
/// excludes n - 3 levels the fallback is skipped. Each n gets the full budget.
inline std::vector<CertifyEntry> certify_threshold_range(int r, int from, int to, const SearchBudget& budget = {},
                                                         const SearchConfig& cfg = {},
                                                         const CertifyOptions& opts = {}) {
  if (r < 2) throw DomainError("certify needs r >= 2");
  if (from < 4 || from > to || to > kMaxGroundSize) throw DomainError("certify needs 4 <= from <= to <= 64");
  std::vector<CertifyEntry> out;
  for (int n = from; n <= to; ++n) {
    CertifyEntry e;
    e.n = n;
    e.contiguous = feasible_exact_profile({n, r, contiguous_levels(n)}, budget, cfg);
    const bool closed_form_refutes = bounds::g_upper_bound(n, r) < n - 3;
    if (e.contiguous.verdict == Verdict::Feasible) {
      if (closed_form_refutes) throw Error("certify: witness exceeds the closed-form bound");
      e.status = CertifyStatus::Achieved;
      e.witness = e.contiguous.witness;
    } else if (closed_form_refutes) {
      e.status = CertifyStatus::Refuted;
    } else if (opts.fallback) {
      SearchBudget b = budget;
      if (std::isfinite(b.wall_time)) b.wall_time = std::max(0.0, b.wall_time - e.contiguous.stats.elapsed);
      if (b.max_nodes != std::numeric_limits<std::uint64_t>::max())
        b.max_nodes = b.max_nodes > e.contiguous.stats.nodes ? b.max_nodes - e.contiguous.stats.nodes : 0;
      e.fallback = g_exact(n, r, b, cfg);
      const auto& g = *e.fallback;
      if ((g.kind == GKind::Exact || g.kind == GKind::LowerBound) && g.lo >= n - 3) {
        e.status = CertifyStatus::Achieved;
        e.witness = g.witness;
      } else if (g.hi < n - 3) {
        e.status = CertifyStatus::Refuted;
      } else {
        e.status = CertifyStatus::Unknown;
      }
    } else {
      e.status = CertifyStatus::Unknown;
    }
    if (e.witness && !is_r_multiplicity_antichain(*e.witness, r))
      throw Error("certify: witness failed re-verification");
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace antichain::search

#endif  // ANTICHAIN_SEARCH_HPP

#ifndef ANTICHAIN_CORPUS_HPP
#define ANTICHAIN_CORPUS_HPP

// Regenerates a directory of certificates for g(n, r) = n - 3:
//   r2_n_<a>_to_<b>.txt, r3_n_<a>_to_<b>.txt, 2r_plus_5_r_<a>_to_<b>.txt
// plus manifest.json. Each instance is built by the explicit construction when
// it applies and otherwise searched on levels 2..n-2 under a budget.

#include "antichain/bounds.hpp"
#include "antichain/certio.hpp"
#include "antichain/construct.hpp"
#include "antichain/report.hpp"
#include "antichain/search.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace antichain::corpus {

inline constexpr double kDefaultBudgetSeconds = 300;
inline constexpr const char* kBudgetEnv = "ANTICHAIN_BUDGET_SECS";

/// Per-instance wall budget: the environment variable when set and positive,
/// else the built-in default.
inline double default_budget_seconds() {
  if (const char* v = std::getenv(kBudgetEnv)) {
    char* end = nullptr;
    const double d = std::strtod(v, &end);
    if (end != v && *end == '\0' && d > 0) return d;
  }
  return kDefaultBudgetSeconds;
}

struct CorpusConfig {
  int r2_from = 4;
  int r2_to = 21;
  int r3_from = 9;
  int r3_to = 24;
  std::vector<int> plus_five_r{4};  // n = 2r + 5
  search::SearchBudget budget{};    // per instance
  search::SearchConfig search{};

  CorpusConfig() { budget.wall_time = default_budget_seconds(); }

  static CorpusConfig heavy() {
    CorpusConfig c;
    c.plus_five_r = {4, 5, 6, 7, 8, 9, 10, 11};
    return c;
  }
};

struct ManifestEntry {
  std::string file;  // empty when nothing was written
  int n = 0;
  int r = 0;
  std::string method;  // construction-strict, construction-relaxed or search
  std::string status;  // certified, refuted or unknown
  std::uint64_t nodes = 0;
  double seconds = 0;
  double budget_seconds = 0;
  std::string note;
};

struct Manifest {
  std::vector<std::string> files;
  std::vector<ManifestEntry> entries;

  std::vector<ManifestEntry> unknown() const {
    std::vector<ManifestEntry> out;
    for (const auto& e : entries)
      if (e.status == "unknown") out.push_back(e);
    return out;
  }
};

inline nlohmann::json to_json(const ManifestEntry& e) {
  return nlohmann::json{{"file", e.file},     {"n", e.n},         {"r", e.r},
                        {"method", e.method}, {"status", e.status}, {"nodes", e.nodes},
                        {"seconds", e.seconds}, {"budget_seconds", e.budget_seconds}, {"note", e.note}};
}

inline nlohmann::json to_json(const Manifest& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : m.entries) entries.push_back(to_json(e));
  nlohmann::json unknown = nlohmann::json::array();
  for (const auto& e : m.unknown()) unknown.push_back(nlohmann::json{{"n", e.n}, {"r", e.r}});
  return nlohmann::json{{"tool", tool_version()}, {"files", m.files}, {"entries", entries}, {"unknown", unknown}};
}

/// One instance: a certificate when n - 3 levels were realised.
inline std::optional<certio::Certificate> certify_instance(int n, int r, const CorpusConfig& cfg, ManifestEntry& entry) {
  entry.n = n;
  entry.r = r;
  const auto start = std::chrono::steady_clock::now();
  std::optional<certio::Certificate> cert;
  const auto app = bounds::construction_applicability(n, r);
  if (app.applicable()) {
    const bool strict = app.tier == bounds::Tier::Strict;
    entry.method = strict ? "construction-strict" : "construction-relaxed";
    cert = certio::make_certificate(construct::build_construction(n, r), r,
                                    strict ? certio::Provenance::ConstructedStrict
                                           : certio::Provenance::ConstructedRelaxed);
    entry.status = "certified";
  } else {
    entry.method = "search";
    entry.budget_seconds = cfg.budget.wall_time;
    const auto o = search::feasible_exact_profile({n, r, search::contiguous_levels(n)}, cfg.budget, cfg.search);
    entry.nodes = o.stats.nodes;
    entry.note = o.stats.note;
    if (o.verdict == search::Verdict::Feasible) {
      cert = certio::make_certificate(*o.witness, r, certio::Provenance::Search);
      entry.status = "certified";
    } else {
      entry.status = o.verdict == search::Verdict::Infeasible ? "refuted" : "unknown";
    }
  }
  entry.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (cert && !certio::verify_certificate(*cert).matches_claim)
    throw Error("corpus: certificate for n = " + std::to_string(n) + ", r = " + std::to_string(r) +
                " failed verification");
  return cert;
}

/// Writes the corpus into `dir` (created if needed) and returns the manifest,
/// which is also stored as manifest.json.
inline Manifest regenerate_corpus(const std::string& dir, const CorpusConfig& cfg = {}) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoFailure("cannot create " + dir + ": " + ec.message());

  Manifest manifest;
  auto run_file = [&](const std::string& name, const std::vector<std::pair<int, int>>& instances) {
    std::vector<certio::Certificate> certs;
    for (auto [n, r] : instances) {
      ManifestEntry e;
      if (auto c = certify_instance(n, r, cfg, e)) {
        certs.push_back(std::move(*c));
        e.file = name;
      }
      manifest.entries.push_back(std::move(e));
    }
    certio::write_certificates(certs, (fs::path(dir) / name).string());
    manifest.files.push_back(name);
  };

  std::vector<std::pair<int, int>> r2, r3, plus5;
  for (int n = cfg.r2_from; n <= cfg.r2_to; ++n) r2.emplace_back(n, 2);
  for (int n = cfg.r3_from; n <= cfg.r3_to; ++n) r3.emplace_back(n, 3);
  for (int r : cfg.plus_five_r) plus5.emplace_back(2 * r + 5, r);
  if (!r2.empty())
    run_file("r2_n_" + std::to_string(cfg.r2_from) + "_to_" + std::to_string(cfg.r2_to) + ".txt", r2);
  if (!r3.empty())
    run_file("r3_n_" + std::to_string(cfg.r3_from) + "_to_" + std::to_string(cfg.r3_to) + ".txt", r3);
  if (!plus5.empty())
    run_file("2r_plus_5_r_" + std::to_string(cfg.plus_five_r.front()) + "_to_" +
                 std::to_string(cfg.plus_five_r.back()) + ".txt",
             plus5);

  std::ofstream os(fs::path(dir) / "manifest.json", std::ios::binary | std::ios::trunc);
  if (!os) throw IoFailure("cannot write manifest.json in " + dir);
  os << to_json(manifest).dump(2) << "\n";
  if (!os) throw IoFailure("write to manifest.json failed");
  return manifest;
}

}  // namespace antichain::corpus

#endif  // ANTICHAIN_CORPUS_HPP

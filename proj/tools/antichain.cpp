// Command-line front end: verify, construct, search, bounds, corpus.
//
// Exit codes: 0 feasible / achieved / verified, 1 infeasible / refuted /
// failed verification or inapplicable, 2 unknown (budget expired),
// 3 usage or I/O error.

#include "antichain/antichain.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace antichain;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUnknown = 2;
constexpr int kError = 3;

// "2..11", "1,3,5..7" -> sorted level list
std::vector<int> parse_levels(const std::string& spec) {
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string item;
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size() || v < 0) throw CLI::ValidationError("--levels", "bad level '" + s + "'");
    return v;
  };
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw CLI::ValidationError("--levels", "empty item");
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(number(item));
    } else {
      const int a = number(item.substr(0, dots));
      const int b = number(item.substr(dots + 2));
      if (a > b) throw CLI::ValidationError("--levels", "empty range '" + item + "'");
      for (int t = a; t <= b; ++t) out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string describe(const Family& f) {
  std::string s;
  for (const auto& m : f.members()) {
    s += "{";
    bool first = true;
    for (int e : m.elements()) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    s += "} ";
  }
  if (!s.empty()) s.pop_back();
  return s;
}

void emit_certificates(const std::vector<certio::Certificate>& certs, const std::string& path) {
  if (path.empty() || path == "-") {
    for (const auto& c : certs) certio::write_certificate(c, std::cout);
  } else {
    certio::write_certificates(certs, path);
  }
}

struct BudgetFlags {
  std::optional<std::uint64_t> nodes;
  std::optional<double> secs;
  int threads = 1;
  bool no_symmetry = false;

  void attach(CLI::App* app) {
    app->add_option("--budget-nodes", nodes, "Node budget (attempted set placements)")->check(CLI::PositiveNumber);
    app->add_option("--budget-secs", secs, "Wall-clock budget in seconds")->check(CLI::PositiveNumber);
    app->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));
    app->add_flag("--no-symmetry", no_symmetry, "Disable orbit pruning on the first level");
  }

  search::SearchBudget budget() const {
    search::SearchBudget b;
    b.max_nodes = nodes.value_or(std::numeric_limits<std::uint64_t>::max());
    b.wall_time = secs.value_or(corpus::default_budget_seconds());
    b.threads = threads;
    return b;
  }

  search::SearchConfig config() const { return search::symmetry_prune_config(!no_symmetry); }
};

int cmd_verify(const std::vector<std::string>& files, bool as_json) {
  bool all_ok = true;
  json out = json::array();
  for (const auto& path : files) {
    std::vector<certio::Certificate> certs;
    try {
      certs = certio::read_certificates(path);
    } catch (const ParseError& e) {
      std::cerr << path << ": " << e.what() << "\n";
      return kError;
    } catch (const HeaderMismatch& e) {
      std::cerr << path << ": " << e.what() << "\n";
      all_ok = false;
      out.push_back(json{{"file", path}, {"error", e.what()}});
      continue;
    }
    for (std::size_t i = 0; i < certs.size(); ++i) {
      const auto& c = certs[i];
      const auto rep = certio::verify_certificate(c);
      const bool ok = rep.matches_claim && rep.g_bound_consistent;
      all_ok = all_ok && ok;
      if (as_json) {
        auto j = report::to_json(rep);
        j["file"] = path;
        j["block"] = i + 1;
        j["n"] = c.n;
        j["r"] = c.r;
        j["provenance"] = certio::to_string(c.provenance);
        out.push_back(j);
      } else {
        std::cout << path << " #" << (i + 1) << " n=" << c.n << " r=" << c.r << " levels=" << rep.num_levels
                  << " antichain=" << rep.antichain << " multiplicity=" << rep.multiplicity_ok
                  << " claim=" << rep.matches_claim << " bound=" << rep.g_bound_consistent << " "
                  << (ok ? "OK" : "FAIL") << "\n";
      }
    }
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return all_ok ? kOk : kNo;
}

int cmd_construct(int n, int r, const std::string& mode, const std::string& out_path, bool as_json) {
  const auto app = bounds::construction_applicability(n, r);
  const bool allowed = mode == "strict" ? app.tier == bounds::Tier::Strict : app.applicable();
  if (!allowed) {
    const std::string why = app.applicable() ? "hypothesis fails (relaxed tier only; use --mode best-effort)"
                                             : app.reason;
    if (as_json)
      std::cout << json{{"applicability", report::to_json(app)}, {"constructed", false}}.dump(2) << "\n";
    else
      std::cerr << "construction not available for n=" << n << ", r=" << r << ": " << why << "\n";
    return kNo;
  }
  const Family f = construct::build_construction(n, r);
  const auto prov = app.tier == bounds::Tier::Strict ? certio::Provenance::ConstructedStrict
                                                     : certio::Provenance::ConstructedRelaxed;
  const auto cert = certio::make_certificate(f, r, prov);
  if (as_json) {
    std::cout << json{{"applicability", report::to_json(app)},
                      {"constructed", true},
                      {"family", report::to_json(f)},
                      {"verification", report::to_json(certio::verify_certificate(cert))}}
                     .dump(2)
              << "\n";
    if (!out_path.empty() && out_path != "-") emit_certificates({cert}, out_path);
  } else {
    emit_certificates({cert}, out_path);
  }
  return kOk;
}

int cmd_profile(int n, int r, const std::string& levels, const BudgetFlags& bf, const std::string& out_path,
                bool stats_json, bool as_json) {
  const search::ProfileInstance inst{n, r, parse_levels(levels)};
  const auto o = search::feasible_exact_profile(inst, bf.budget(), bf.config());
  if (as_json) {
    std::cout << report::to_json(o).dump(2) << "\n";
  } else {
    std::cout << search::to_string(o.verdict) << "\n";
    if (o.witness) std::cout << describe(*o.witness) << "\n";
    if (!o.stats.note.empty()) std::cout << "note: " << o.stats.note << "\n";
  }
  if (stats_json && !as_json) std::cout << report::to_json(o.stats).dump() << "\n";
  if (o.witness && !out_path.empty())
    emit_certificates({certio::make_certificate(*o.witness, r, certio::Provenance::Search)}, out_path);
  switch (o.verdict) {
    case search::Verdict::Feasible: return kOk;
    case search::Verdict::Infeasible: return kNo;
    case search::Verdict::Unknown: return kUnknown;
  }
  return kError;
}

int cmd_gmax(int n, int r, const BudgetFlags& bf, const std::string& out_path, bool stats_json, bool as_json) {
  const auto g = search::g_exact(n, r, bf.budget(), bf.config());
  if (as_json) {
    std::cout << report::to_json(g).dump(2) << "\n";
  } else {
    std::cout << search::to_string(g.kind);
    if (g.kind == search::GKind::Interval)
      std::cout << " [" << g.lo << ", " << g.hi << "]\n";
    else if (g.kind == search::GKind::LowerBound)
      std::cout << " " << g.lo << " (at most " << g.hi << ")\n";
    else
      std::cout << " " << g.lo << "\n";
    if (g.witness) std::cout << describe(*g.witness) << "\n";
  }
  if (stats_json && !as_json) std::cout << report::to_json(g.stats).dump() << "\n";
  if (g.witness && !out_path.empty())
    emit_certificates({certio::make_certificate(*g.witness, r, certio::Provenance::Search)}, out_path);
  return g.kind == search::GKind::Exact ? kOk : kUnknown;
}

int cmd_certify(int r, int from, int to, const BudgetFlags& bf, const std::string& out_path, bool stats_json,
                bool as_json) {
  const auto entries = search::certify_threshold_range(r, from, to, bf.budget(), bf.config());
  bool any_unknown = false, any_refuted = false;
  std::vector<certio::Certificate> certs;
  json out = json::array();
  for (const auto& e : entries) {
    any_unknown = any_unknown || e.status == search::CertifyStatus::Unknown;
    any_refuted = any_refuted || e.status == search::CertifyStatus::Refuted;
    if (e.witness) certs.push_back(certio::make_certificate(*e.witness, r, certio::Provenance::Search));
    if (as_json) {
      out.push_back(report::to_json(e));
    } else {
      std::cout << "n=" << e.n << " " << search::to_string(e.status) << "\n";
      if (stats_json) std::cout << report::to_json(e.contiguous.stats).dump() << "\n";
    }
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  if (!out_path.empty()) emit_certificates(certs, out_path);
  if (any_unknown) return kUnknown;
  return any_refuted ? kNo : kOk;
}

int cmd_bounds(int r, std::optional<int> n, bool as_json) {
  const auto rep = bounds::bounds_report(r, n);
  if (as_json) {
    std::cout << report::to_json(rep).dump(2) << "\n";
    return kOk;
  }
  std::cout << "r = " << r << "\n";
  std::cout << "n0 lower = " << rep.n0_lower << "  (" << rep.provenance.at("n0_lower") << ")\n";
  std::cout << "n0 upper = " << rep.n0_upper << "  (" << rep.provenance.at("n0_upper") << ")\n";
  if (rep.n0_exact) std::cout << "n0 exact = " << *rep.n0_exact << "  (" << rep.provenance.at("n0_exact") << ")\n";
  if (rep.g_upper) std::cout << "g(" << *n << ", " << r << ") <= " << *rep.g_upper << "  (" << rep.provenance.at("g_upper") << ")\n";
  else if (n) std::cout << "g(" << *n << ", " << r << "): " << rep.provenance.at("g_upper") << "\n";
  return kOk;
}

int cmd_corpus(const std::string& dir, bool heavy, std::optional<double> secs, bool as_json) {
  auto cfg = heavy ? corpus::CorpusConfig::heavy() : corpus::CorpusConfig{};
  if (secs) cfg.budget.wall_time = *secs;
  const auto m = corpus::regenerate_corpus(dir, cfg);
  bool refuted = false;
  for (const auto& e : m.entries) refuted = refuted || e.status == "refuted";
  if (as_json) {
    std::cout << corpus::to_json(m).dump(2) << "\n";
  } else {
    for (const auto& e : m.entries)
      std::cout << "r=" << e.r << " n=" << e.n << " " << e.method << " " << e.status << " (" << e.seconds << " s)\n";
    std::cout << m.files.size() << " files written to " << dir << "\n";
  }
  if (!m.unknown().empty()) return kUnknown;
  return refuted ? kNo : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"r-multiplicity antichains: certificates, constructions and exhaustive search"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  auto* verify = app.add_subcommand("verify", "Verify certificate files");
  std::vector<std::string> files;
  verify->add_option("files", files, "Certificate files")->required()->check(CLI::ExistingFile);

  auto* construct = app.add_subcommand("construct", "Explicit construction with n - 3 levels");
  int cn = 0, cr = 0;
  std::string mode = "strict", c_out;
  construct->add_option("--n", cn, "Ground set size")->required()->check(CLI::Range(1, 64));
  construct->add_option("--r", cr, "Multiplicity")->required()->check(CLI::Range(2, 64));
  construct->add_option("--mode", mode, "strict or best-effort")->check(CLI::IsMember({"strict", "best-effort"}));
  construct->add_option("-o,--output", c_out, "Write the certificate here");

  auto* search = app.add_subcommand("search", "Exhaustive search");
  search->require_subcommand(1);

  auto* profile = search->add_subcommand("profile", "Exactly r sets on each listed level, none elsewhere");
  int pn = 0, pr = 0;
  std::string plevels, p_out;
  bool p_stats = false;
  BudgetFlags pb;
  profile->add_option("--n", pn, "Ground set size")->required()->check(CLI::Range(1, 64));
  profile->add_option("--r", pr, "Multiplicity")->required()->check(CLI::PositiveNumber);
  profile->add_option("--levels", plevels, "Levels, e.g. 2..11 or 1,3,5..7")->required();
  profile->add_option("-o,--output", p_out, "Write the witness certificate here");
  profile->add_flag("--stats-json", p_stats, "Print search statistics as JSON");
  pb.attach(profile);

  auto* gmax = search->add_subcommand("gmax", "Largest number of levels g(n, r)");
  int gn = 0, gr = 0;
  std::string g_out;
  bool g_stats = false;
  BudgetFlags gb;
  gmax->add_option("--n", gn, "Ground set size")->required()->check(CLI::Range(1, 64));
  gmax->add_option("--r", gr, "Multiplicity")->required()->check(CLI::PositiveNumber);
  gmax->add_option("-o,--output", g_out, "Write the witness certificate here");
  gmax->add_flag("--stats-json", g_stats, "Print search statistics as JSON");
  gb.attach(gmax);

  auto* certify = search->add_subcommand("certify", "Realise n - 3 levels for every n in a range");
  int tr = 0, tfrom = 0, tto = 0;
  std::string t_out;
  bool t_stats = false;
  BudgetFlags tb;
  certify->add_option("--r", tr, "Multiplicity")->required()->check(CLI::Range(2, 64));
  certify->add_option("--from", tfrom, "First n")->required()->check(CLI::Range(4, 64));
  certify->add_option("--to", tto, "Last n")->required()->check(CLI::Range(4, 64));
  certify->add_option("-o,--output", t_out, "Write the witness certificates here");
  certify->add_flag("--stats-json", t_stats, "Print search statistics as JSON");
  tb.attach(certify);

  auto* bounds_cmd = app.add_subcommand("bounds", "Closed-form bounds on g(n, r) and n0(r)");
  int br = 0;
  std::optional<int> bn;
  bounds_cmd->add_option("--r", br, "Multiplicity")->required()->check(CLI::Range(2, 1000000));
  bounds_cmd->add_option("--n", bn, "Ground set size")->check(CLI::PositiveNumber);

  auto* corpus_cmd = app.add_subcommand("corpus", "Regenerate the certificate corpus");
  std::string dir;
  bool heavy = false;
  std::optional<double> corpus_secs;
  corpus_cmd->add_option("--out", dir, "Output directory")->required();
  corpus_cmd->add_flag("--heavy", heavy, "Also attempt n = 2r + 5 for r = 5..11");
  corpus_cmd->add_option("--budget-secs", corpus_secs, "Per-instance search budget in seconds")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*verify) return cmd_verify(files, as_json);
    if (*construct) return cmd_construct(cn, cr, mode, c_out, as_json);
    if (*profile) return cmd_profile(pn, pr, plevels, pb, p_out, p_stats, as_json);
    if (*gmax) return cmd_gmax(gn, gr, gb, g_out, g_stats, as_json);
    if (*certify) return cmd_certify(tr, tfrom, tto, tb, t_out, t_stats, as_json);
    if (*bounds_cmd) return cmd_bounds(br, bn, as_json);
    if (*corpus_cmd) return cmd_corpus(dir, heavy, corpus_secs, as_json);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

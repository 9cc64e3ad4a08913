#ifndef ANTICHAIN_REPORT_HPP
#define ANTICHAIN_REPORT_HPP

// JSON views of the library's result types, for the CLI and the corpus manifest.

#include "antichain/bounds.hpp"
#include "antichain/certio.hpp"
#include "antichain/family.hpp"
#include "antichain/search.hpp"

#include <json.hpp>

#include <string>

namespace antichain::report {

using nlohmann::json;

inline json to_json(const Family& f) {
  json sets = json::array();
  for (const auto& s : f.members()) sets.push_back(s.elements());
  return json{{"n", f.n()}, {"levels", f.profile().occurring}, {"sets", sets}};
}

inline json to_json(const bounds::BoundsReport& b) {
  json j;
  j["n"] = b.n ? json(*b.n) : json(nullptr);
  j["r"] = b.r;
  j["g_upper"] = b.g_upper ? json(*b.g_upper) : json(nullptr);
  j["n0_lower"] = b.n0_lower;
  j["n0_upper"] = b.n0_upper;
  j["n0_exact"] = b.n0_exact ? json(*b.n0_exact) : json(nullptr);
  j["provenance"] = b.provenance;
  return j;
}

inline json to_json(const bounds::Applicability& a) {
  return json{{"n", a.n},       {"r", a.r},     {"tier", bounds::to_string(a.tier)},
              {"k", a.k},       {"m", a.m},     {"ell", a.ell},
              {"reason", a.reason}};
}

inline json to_json(const search::SearchStats& s) {
  return json{{"nodes", s.nodes},
              {"max_depth", s.max_depth},
              {"pruned_pool_deficit", s.pruned_pool_deficit},
              {"pruned_symmetry", s.pruned_symmetry},
              {"symmetry_undecided", s.symmetry_undecided},
              {"first_level_families", s.first_level_families},
              {"first_level", s.first_level},
              {"elapsed_seconds", s.elapsed},
              {"note", s.note}};
}

inline json to_json(const search::SearchOutcome& o) {
  json j{{"verdict", search::to_string(o.verdict)}, {"stats", to_json(o.stats)}};
  j["witness"] = o.witness ? to_json(*o.witness) : json(nullptr);
  return j;
}

inline json to_json(const search::GResult& g) {
  json j{{"kind", search::to_string(g.kind)},
         {"lo", g.lo},
         {"hi", g.hi},
         {"levels", g.levels},
         {"instances", g.instances},
         {"stats", to_json(g.stats)}};
  j["witness"] = g.witness ? to_json(*g.witness) : json(nullptr);
  return j;
}

inline json to_json(const search::CertifyEntry& e) {
  json j{{"n", e.n}, {"status", search::to_string(e.status)}, {"contiguous", to_json(e.contiguous)}};
  j["fallback"] = e.fallback ? to_json(*e.fallback) : json(nullptr);
  return j;
}

inline json to_json(const certio::VerificationReport& v) {
  json levels = json::object();
  for (const auto& [t, c] : v.levels) levels[std::to_string(t)] = c;
  return json{{"antichain", v.antichain},         {"multiplicity_ok", v.multiplicity_ok},
              {"levels", levels},                 {"num_levels", v.num_levels},
              {"matches_claim", v.matches_claim}, {"g_bound_consistent", v.g_bound_consistent}};
}

}  // namespace antichain::report

#endif  // ANTICHAIN_REPORT_HPP

#pragma once

// JSON forms of the library's values (nlohmann::json). Big integers are
// written as decimal strings; polynomials as coefficient arrays, low degree
// first.

#include "classifier.hpp"
#include "miner.hpp"

#include <json.hpp>

#include <string>

#ifndef CHARGRAPH_VERSION
#define CHARGRAPH_VERSION "0.1.0"
#endif

namespace chargraph {

using Json = nlohmann::json;

inline constexpr const char* kVersion = CHARGRAPH_VERSION;

inline Json to_json(const BigInt& v) { return v.get_str(); }

inline Json to_json(const ZPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

inline ZPoly zpoly_from_json(const Json& j) {
  std::vector<BigInt> c;
  for (const auto& x : j) c.push_back(x.is_string() ? parse_bigint(x.get<std::string>()) : BigInt(x.get<long>()));
  return ZPoly(std::move(c));
}

/// {"generators": [[...], ...], "basis": [[...], ...]}
inline Json to_json(const IdealZt& ideal) {
  Json g = Json::array(), b = Json::array();
  for (const auto& p : ideal.generators()) g.push_back(to_json(p));
  for (const auto& p : ideal.basis()) b.push_back(to_json(p));
  return {{"generators", g}, {"basis", b}};
}

inline IdealZt ideal_from_json(const Json& j) {
  std::vector<ZPoly> gens;
  for (const auto& p : j.at("generators")) gens.push_back(zpoly_from_json(p));
  return IdealZt(std::move(gens));
}

inline Json to_json(const InvariantFactors& f) {
  Json a = Json::array();
  for (const auto& d : f.factors) a.push_back(d.get_str());
  return a;
}

inline Json to_json(const Certificate& c) {
  Json j = {{"kind", to_string(c.kind)}, {"tag", c.tag}};
  if (!c.parameters.empty()) j["parameters"] = c.parameters;
  if (!c.embedding.empty()) j["embedding"] = c.embedding;
  if (c.invariants) j["invariants"] = to_json(*c.invariants);
  return j;
}

inline Json to_json(const ClassificationReport& r) {
  Json fams = Json::object(), certs = Json::object();
  for (const auto& [name, v] : r.families) {
    fams[name] = v.member;
    Json c = to_json(v.certificate);
    if (v.partial) c["partial"] = true;
    certs[name] = c;
  }
  Json j = {{"graph6", r.graph6},
            {"order", r.order},
            {"phi_A", r.phi_A},
            {"gamma", r.gamma},
            {"adjacency_invariants", to_json(r.adjacency_invariants)},
            {"memberships", fams},
            {"certificates", certs}};
  if (r.phi_L) {
    j["phi_L"] = *r.phi_L;
    j["laplacian_invariants"] = to_json(*r.laplacian_invariants);
  }
  return j;
}

inline Json to_json(const MiningResult& r, bool emit_all = false) {
  auto list = [](const std::vector<MinedGraph>& v) {
    Json a = Json::array();
    for (const auto& m : v) a.push_back({{"graph6", m.graph6}, {"order", m.order}, {"value", m.value}});
    return a;
  };
  Json counts = Json::object();
  for (const auto& [n, c] : r.counts_by_order) counts[std::to_string(n)] = c;
  Json j = {{"max_vertices", r.task.max_vertices},
            {"statistic", to_string(r.task.statistic)},
            {"k", r.task.k},
            {"minimal_forbidden", list(r.minimal_forbidden)},
            {"counts_by_order", counts}};
  if (emit_all) j["all_forbidden"] = list(r.all_forbidden);
  return j;
}

inline Json to_json(const CrossCheckReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"graph6", x.graph6}, {"detail", x.detail}});
  return {{"n_max", r.n_max}, {"graphs_per_order", r.graphs_per_order}, {"family_counts", r.family_counts}, {"violations", v}};
}

/// {command, input, payload, version}
inline Json envelope(const std::string& command, const std::string& input, Json payload) {
  return {{"command", command}, {"input", input}, {"payload", std::move(payload)}, {"version", kVersion}};
}

}  // namespace chargraph

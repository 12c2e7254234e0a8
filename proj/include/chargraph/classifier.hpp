#pragma once

// Membership in the families S<=k (at most k unit invariant factors of A),
// C<=k (algebraic co-rank at most k) and, for regular graphs, K<=k (at most k
// unit invariant factors of L). Each family is decided by up to three routes
// that must agree: the defining count, a forbidden induced subgraph list and
// a structural description.

#include "blowup.hpp"
#include "canonical.hpp"
#include "catalog.hpp"
#include "char_ideals.hpp"
#include "enumerate.hpp"
#include "induced.hpp"
#include "parallel.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chargraph {

inline std::size_t phi_adjacency(const Graph& g) { return count_unit_factors(adjacency_matrix(g)); }
inline std::size_t phi_laplacian(const Graph& g) { return count_unit_factors(laplacian_matrix(g)); }

/// Why a graph is or is not in a family.
struct Certificate {
  enum class Kind { Structure, Forbidden, Invariants };
  Kind kind = Kind::Structure;
  std::string tag;              // form name or forbidden graph name
  std::vector<int> parameters;  // part sizes, blow-up vector, ...
  Embedding embedding;          // forbidden witness: host vertex per pattern vertex
  std::optional<InvariantFactors> invariants;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

inline std::string to_string(Certificate::Kind k) {
  switch (k) {
    case Certificate::Kind::Structure: return "structure";
    case Certificate::Kind::Forbidden: return "forbidden";
    case Certificate::Kind::Invariants: return "invariants";
  }
  return "";
}

struct Verdict {
  bool member = false;
  Certificate certificate;
  bool partial = false;  // no completeness theorem backs this decision
};

struct ClassificationReport {
  std::string graph6;  // canonical
  std::size_t order = 0;
  std::size_t phi_A = 0;
  std::optional<std::size_t> phi_L;  // regular graphs only
  std::size_t gamma = 0;
  InvariantFactors adjacency_invariants;
  std::optional<InvariantFactors> laplacian_invariants;
  std::map<std::string, Verdict> families;  // "S<=1", "C<=3", "K<=2", ...

  bool in(const std::string& family) const {
    auto it = families.find(family);
    return it != families.end() && it->second.member;
  }
};

// ---- structural recognizers ------------------------------------------------

/// Part sizes if g is complete multipartite (parts of size 1 allowed),
/// i.e. an induced subgraph of a complete m-partite graph for m >= parts.
inline std::optional<std::vector<int>> multipartite_parts(const Graph& g) {
  BlowupSpec q = quotient_by(g, TwinKind::False);
  if (!q.underlying.is_complete()) return std::nullopt;
  return q.d;
}

/// If g is an induced subgraph of host^r for some all-negative r, the class
/// sizes of g's true twins laid over host vertices (0 where unused).
inline std::optional<std::vector<int>> clique_blowup_within(const Graph& g, const Graph& host) {
  BlowupSpec q = quotient_by(g, TwinKind::True);
  auto e = find_induced(host, q.underlying);
  if (!e) return std::nullopt;
  std::vector<int> r(host.order(), 0);
  for (std::size_t i = 0; i < e->size(); ++i) r[(*e)[i]] = -std::abs(q.d[i]);
  return r;
}

inline std::optional<Certificate> induced_in_fixed(const Graph& g, const Graph& host, const std::string& tag) {
  if (g.order() > host.order()) return std::nullopt;
  auto e = find_induced(host, g);
  if (!e) return std::nullopt;
  Certificate c{Certificate::Kind::Structure, tag, {}, {}, {}};
  for (auto v : *e) c.parameters.push_back(static_cast<int>(v));
  return c;
}

namespace detail {

inline Certificate structure(std::string tag, std::vector<int> params = {}) {
  return {Certificate::Kind::Structure, std::move(tag), std::move(params), {}, {}};
}

/// Complete multipartite with at most m parts.
inline std::optional<Certificate> within_multipartite(const Graph& g, std::size_t m) {
  auto parts = multipartite_parts(g);
  if (!parts || parts->size() > m) return std::nullopt;
  return structure("complete-multipartite", *parts);
}

inline std::optional<Certificate> within_five_forms(const Graph& g) {
  if (auto c = within_multipartite(g, 4)) return c;
  if (auto c = induced_in_fixed(g, cycle_graph(5), "induced-in-C5")) return c;
  if (auto c = induced_in_fixed(g, triangular_prism(), "induced-in-prism")) return c;
  if (auto r = clique_blowup_within(g, cycle_graph(4))) return structure("induced-in-C4-blowup", *r);
  if (auto r = clique_blowup_within(g, star_graph(4))) return structure("induced-in-S4-blowup", *r);
  return std::nullopt;
}

/// The regular graphs of the K<=k closed lists.
inline std::optional<Certificate> regular_closed_list(const Graph& g, std::size_t k) {
  if (g.is_complete()) return structure("complete", {static_cast<int>(g.order())});
  if (k < 2) return std::nullopt;
  if (auto parts = multipartite_parts(g)) {
    const bool equal = std::all_of(parts->begin(), parts->end(), [&](int p) { return p == parts->front(); });
    if (equal && parts->size() <= (k >= 3 ? 4u : 3u)) return structure("regular-complete-multipartite", *parts);
  }
  if (k < 3) return std::nullopt;
  if (is_isomorphic(g, cycle_graph(5))) return structure("C5");
  if (is_isomorphic(g, triangular_prism())) return structure("prism");
  BlowupSpec q = quotient_by(g, TwinKind::True);
  if (q.underlying.order() == 4 && is_isomorphic(q.underlying, cycle_graph(4)) &&
      std::all_of(q.d.begin(), q.d.end(), [&](int x) { return std::abs(x) == std::abs(q.d.front()); }))
    return structure("C4-uniform-blowup", {-std::abs(q.d.front())});
  return std::nullopt;
}

struct ForbiddenEntry {
  std::string name;
  Graph graph;
};

inline std::vector<ForbiddenEntry> forbidden_list(const std::string& family) {
  if (family == "S<=1") return {{"K2", complete_graph(2)}};
  if (family == "S<=2") return {{"P4", path_graph(4)}, {"paw", paw_graph()}, {"K4", complete_graph(4)}};
  if (family == "S<=3") return {{"P4", path_graph(4)}, {"paw", paw_graph()}, {"K5", complete_graph(5)}};
  if (family == "S<=4") {
    std::vector<ForbiddenEntry> out;
    const auto& codes = smith4_forbidden_graph6();
    for (const auto& c : codes) out.push_back({std::string(c), parse_graph6(c)});
    return out;
  }
  if (family == "C<=1") return {{"P3", path_graph(3)}};
  if (family == "C<=2") return {{"P4", path_graph(4)}, {"paw", paw_graph()}, {"K5-e", complete_minus_edge(5)}};
  if (family == "C<=3") {
    std::vector<ForbiddenEntry> out;
    for (const auto& f : family_f()) out.push_back({f.name, f.graph});
    return out;
  }
  throw ArgumentError("no forbidden list for family " + family);
}

inline const std::vector<ForbiddenEntry>& cached_forbidden_list(const std::string& family) {
  static const std::map<std::string, std::vector<ForbiddenEntry>> lists = [] {
    std::map<std::string, std::vector<ForbiddenEntry>> m;
    for (const char* f : {"S<=1", "S<=2", "S<=3", "S<=4", "C<=1", "C<=2", "C<=3"}) m.emplace(f, forbidden_list(f));
    return m;
  }();
  return lists.at(family);
}

inline std::optional<Certificate> forbidden_witness(const Graph& g, const std::string& family) {
  for (const auto& entry : cached_forbidden_list(family)) {
    if (entry.graph.order() > g.order()) continue;
    if (auto e = find_induced(g, entry.graph)) return Certificate{Certificate::Kind::Forbidden, entry.name, {}, std::move(*e), {}};
  }
  return std::nullopt;
}

inline std::string yes_no(bool b) { return b ? "in" : "out"; }

/// Combines the routes of one family; throws InternalError when they disagree.
inline Verdict decide(const std::string& code, const std::string& family, bool direct,
                      const std::optional<Certificate>& witness, const std::optional<Certificate>& form) {
  const bool by_forbidden = !witness.has_value();
  const bool by_structure = form.has_value();
  if (by_forbidden != direct || by_structure != direct)
    throw InternalError("route disagreement on " + code + " for " + family + ": count " + yes_no(direct) + ", forbidden list " +
                        yes_no(by_forbidden) + ", structure " + yes_no(by_structure));
  Verdict v;
  v.member = direct;
  v.certificate = direct ? *form : *witness;
  return v;
}

}  // namespace detail

/// Decides every family for a connected graph. Throws ArgumentError for
/// disconnected input and InternalError if two routes disagree.
inline ClassificationReport classify(const Graph& g) {
  if (g.order() == 0) throw ArgumentError("the empty graph is not classified");
  if (!g.is_connected()) throw ArgumentError("graph is disconnected; families are defined for connected graphs");
  ClassificationReport rep;
  rep.graph6 = canonical_form(g);
  rep.order = g.order();
  rep.adjacency_invariants = snf_diagonal(adjacency_matrix(g));
  rep.phi_A = rep.adjacency_invariants.count_ones();
  rep.gamma = algebraic_corank(g);
  const auto& code = rep.graph6;
  const Certificate adj_cert{Certificate::Kind::Invariants, "adjacency", {}, {}, rep.adjacency_invariants};

  auto s_form = [&](std::size_t k) -> std::optional<Certificate> {
    if (k == 1) return g.order() == 1 ? std::optional(detail::structure("K1")) : std::nullopt;
    return detail::within_multipartite(g, k + 1);
  };
  for (std::size_t k = 1; k <= 3; ++k) {
    const std::string fam = "S<=" + std::to_string(k);
    rep.families[fam] = detail::decide(code, fam, rep.phi_A <= k, detail::forbidden_witness(g, fam), s_form(k));
  }
  {
    // no completeness theorem for four unit factors: decide by the count and
    // only require that a listed obstruction forces at least five
    Verdict v;
    v.member = rep.phi_A <= 4;
    v.partial = true;
    auto witness = detail::forbidden_witness(g, "S<=4");
    if (witness && v.member)
      throw InternalError("route disagreement on " + code + " for S<=4: contains " + witness->tag + " but phi_A = " +
                          std::to_string(rep.phi_A));
    v.certificate = witness && !v.member ? *witness : adj_cert;
    rep.families["S<=4"] = v;
  }

  auto c_form = [&](std::size_t k) -> std::optional<Certificate> {
    if (k == 1) return g.is_complete() ? std::optional(detail::structure("complete", {static_cast<int>(g.order())})) : std::nullopt;
    if (k == 2) {
      if (g.is_complete()) return detail::structure("complete", {static_cast<int>(g.order())});
      return detail::within_multipartite(g, 3);
    }
    return detail::within_five_forms(g);
  };
  for (std::size_t k = 1; k <= 3; ++k) {
    const std::string fam = "C<=" + std::to_string(k);
    rep.families[fam] = detail::decide(code, fam, rep.gamma <= k, detail::forbidden_witness(g, fam), c_form(k));
  }

  if (g.regular_degree()) {
    rep.laplacian_invariants = snf_diagonal(laplacian_matrix(g));
    rep.phi_L = rep.laplacian_invariants->count_ones();
    const Certificate lap_cert{Certificate::Kind::Invariants, "laplacian", {}, {}, rep.laplacian_invariants};
    for (std::size_t k = 1; k <= 3; ++k) {
      const std::string fam = "K<=" + std::to_string(k);
      auto form = detail::regular_closed_list(g, k);
      const bool direct = *rep.phi_L <= k;
      if (form.has_value() != direct)
        throw InternalError("route disagreement on " + code + " for " + fam + ": count " + detail::yes_no(direct) +
                            ", closed list " + detail::yes_no(form.has_value()));
      rep.families[fam] = Verdict{direct, direct ? *form : lap_cert, false};
    }
  }
  return rep;
}

inline Verdict is_S_leq(const Graph& g, std::size_t k) {
  if (k < 1 || k > 4) throw ArgumentError("S<=k is decided for k in 1..4");
  return classify(g).families.at("S<=" + std::to_string(k));
}

inline Verdict is_C_leq(const Graph& g, std::size_t k) {
  if (k < 1 || k > 3) throw ArgumentError("C<=k is decided for k in 1..3");
  return classify(g).families.at("C<=" + std::to_string(k));
}

inline Verdict is_K_leq_regular(const Graph& g, std::size_t k) {
  if (k < 1 || k > 3) throw ArgumentError("K<=k is decided for k in 1..3");
  if (!g.regular_degree()) throw ArgumentError("K<=k membership is decided for regular graphs only");
  return classify(g).families.at("K<=" + std::to_string(k));
}

// ---- exhaustive cross-check ------------------------------------------------

struct CrossCheckViolation {
  std::string graph6;
  std::string detail;
};

struct CrossCheckReport {
  std::size_t n_max = 0;
  std::vector<std::size_t> graphs_per_order;  // index n-1
  std::map<std::string, std::size_t> family_counts;
  std::vector<CrossCheckViolation> violations;
};

namespace detail {

inline std::vector<std::string> nesting_failures(const ClassificationReport& r) {
  std::vector<std::string> out;
  auto implies = [&](const std::string& a, const std::string& b) {
    if (r.families.count(a) && r.families.count(b) && r.in(a) && !r.in(b)) out.push_back("in " + a + " but not in " + b);
  };
  for (const char* pre : {"S<=", "C<=", "K<="})
    for (int k = 1; k < 4; ++k) implies(pre + std::to_string(k), pre + std::to_string(k + 1));
  for (int k = 1; k <= 3; ++k) {
    implies("S<=" + std::to_string(k), "C<=" + std::to_string(k));
    implies("K<=" + std::to_string(k), "C<=" + std::to_string(k));
  }
  return out;
}

}  // namespace detail

/// Classifies every connected graph on at most n_max vertices, collecting
/// route disagreements and nesting failures instead of stopping.
inline CrossCheckReport cross_check(std::size_t n_max, std::size_t threads = default_threads()) {
  if (n_max < 1 || n_max > 8) throw ArgumentError("cross-check supports 1 <= n_max <= 8");
  CrossCheckReport rep;
  rep.n_max = n_max;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto graphs = enumerate_connected(n);
    rep.graphs_per_order.push_back(graphs.size());
    std::vector<std::optional<ClassificationReport>> reports(graphs.size());
    std::vector<std::string> errors(graphs.size());
    parallel_for(graphs.size(), threads, [&](std::size_t i) {
      try {
        reports[i] = classify(graphs[i]);
      } catch (const InternalError& e) {
        errors[i] = e.what();
      }
    });
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (!reports[i]) {
        rep.violations.push_back({to_graph6(graphs[i]), errors[i]});
        continue;
      }
      for (const auto& [fam, v] : reports[i]->families)
        if (v.member) ++rep.family_counts[fam];
      for (auto& f : detail::nesting_failures(*reports[i])) rep.violations.push_back({reports[i]->graph6, f});
    }
  }
  return rep;
}

}  // namespace chargraph

#pragma once

#include "graph6.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chargraph {

// ---- constructions -------------------------------------------------------

inline Graph empty_graph(std::size_t n) { return Graph(n); }

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ArgumentError("cycles need at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline Graph complete_graph(std::size_t n) { return Graph(n).complement(); }

/// K_n minus the edge {0,1}.
inline Graph complete_minus_edge(std::size_t n) {
  if (n < 2) throw ArgumentError("K_n - e needs n >= 2");
  Graph g = complete_graph(n);
  g.remove_edge(0, 1);
  return g;
}

/// Star with n vertices: apex 0 and n-1 leaves.
inline Graph star_graph(std::size_t n) {
  if (n < 1) throw ArgumentError("a star needs at least one vertex");
  Graph g(n);
  for (std::size_t v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

/// Parts laid out consecutively in the given order.
inline Graph complete_multipartite(const std::vector<std::size_t>& parts) {
  std::size_t n = 0;
  std::vector<std::size_t> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) throw ArgumentError("multipartite parts must be nonempty");
    n += parts[i];
    part_of.insert(part_of.end(), parts[i], i);
  }
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return g;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

/// Disjoint union plus every edge between the two sides.
inline Graph join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  for (std::size_t u = 0; u < a.order(); ++u)
    for (std::size_t v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
  return g;
}

inline Graph diamond_graph() { return Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
inline Graph paw_graph() { return Graph(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}}); }
inline Graph house_graph() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}}); }
inline Graph claw_graph() { return star_graph(4); }

/// K_3 □ K_2: triangles {0,1,2} and {3,4,5}, matched i -- i+3.
inline Graph triangular_prism() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

inline Graph petersen_graph() {
  Graph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

// ---- the obstruction set for three trivial characteristic ideals ---------

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// The 14 graphs whose fourth characteristic ideal is trivial, labeled as drawn.
inline const std::vector<NamedGraph>& family_f() {
  static const std::vector<NamedGraph> family = {
      {"fork", Graph(5, {{0, 3}, {0, 4}, {1, 4}, {2, 4}})},
      {"4-pan", Graph(5, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 4}})},
      {"bull", Graph(5, {{0, 3}, {0, 4}, {1, 3}, {2, 4}, {3, 4}})},
      {"dart", Graph(5, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 4}, {3, 4}})},
      {"P5", Graph(5, {{0, 2}, {0, 4}, {1, 3}, {1, 4}})},
      {"co-4-pan", Graph(5, {{0, 2}, {0, 4}, {1, 3}, {1, 4}, {2, 4}})},
      {"3-fan", Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 4}, {3, 4}})},
      {"kite", Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 4}, {2, 3}, {2, 4}})},
      {"S6+e", Graph(6, {{0, 4}, {0, 5}, {1, 5}, {2, 5}, {3, 5}, {4, 5}})},
      {"co-(diamond+K2)", Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}})},
      {"K33+e", Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 5}})},
      {"co-(P3+co-P3)",
       Graph(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 5}, {4, 5}})},
      {"K11122", Graph(7, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6},
                           {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}})},
      {"K11114", join(empty_graph(4), complete_graph(4))},
  };
  return family;
}

inline std::vector<Graph> family_f_graphs() {
  std::vector<Graph> out;
  for (const auto& f : family_f()) out.push_back(f.graph);
  return out;
}

/// Join-form descriptions of the members of F that are joins.
inline std::vector<std::pair<std::string, Graph>> family_f_join_forms() {
  const Graph k1 = empty_graph(1), k2 = complete_graph(2);
  return {
      {"dart", join(k1, disjoint_union(path_graph(3), k1))},
      {"3-fan", join(path_graph(4), k1)},
      {"S6+e", join(k1, disjoint_union(k2, empty_graph(3)))},
      {"co-(diamond+K2)", join(empty_graph(2), disjoint_union(k2, empty_graph(2)))},
      {"K33+e", join(empty_graph(3), disjoint_union(k2, k1))},
      {"co-(P3+co-P3)", join(path_graph(3), disjoint_union(k2, k1))},
      {"K11122", join(complete_graph(3), cycle_graph(4))},
      {"K11114", join(complete_graph(4), empty_graph(4))},
  };
}

// ---- minimal forbidden graphs for at most four unit invariant factors -----

inline const std::array<std::string_view, 43>& smith4_forbidden_graph6() {
  static const std::array<std::string_view, 43> list = {
      "Edo_", "Eto_", "Elo_", "E|o_", "Elw_", "E|w_", "Epoo", "Exwo", "ExGG", "ExGg", "E~_G",
      "E~cG", "E~sG", "E~{G", "Ep_G", "EpgG", "EpOG", "ExOG", "ExoG", "ExwG", "EpWG", "ExWG",
      "EpSG", "EpsG", "Ep{G", "E|OW", "E~oW", "E~sW", "E|qW", "E|SW", "E~TW", "EzSW", "ErOW",
      "EzOW", "EzPW", "EroW", "EvoW", "EvsW", "Ezow", "Ez{w", "E~~w", "E~YW", "E~}W",
  };
  return list;
}

inline std::vector<Graph> smith4_forbidden_graphs() {
  std::vector<Graph> out;
  for (auto s : smith4_forbidden_graph6()) out.push_back(parse_graph6(s));
  return out;
}

// ---- lookup by name ------------------------------------------------------

namespace detail {

inline std::string normalize_name(std::string_view raw) {
  std::string s;
  for (char c : raw)
    if (c != '_' && c != '{' && c != '}' && c != ' ') s.push_back(c);
  return s;
}

inline std::optional<std::size_t> parse_count(std::string_view s) {
  if (s.empty() || s.size() > 3) return std::nullopt;
  std::size_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

inline const std::map<std::string, Graph>& fixed_catalog() {
  static const std::map<std::string, Graph> table = [] {
    std::map<std::string, Graph> t{
        {"diamond", diamond_graph()},
        {"paw", paw_graph()},
        {"house", house_graph()},
        {"claw", claw_graph()},
        {"prism", triangular_prism()},
        {"K3xK2", triangular_prism()},
        {"petersen", petersen_graph()},
    };
    for (const auto& f : family_f())
      if (f.name != "P5") t.emplace(f.name, f.graph);  // P5 resolves to the path family
    const auto& forb = smith4_forbidden_graph6();
    for (std::size_t i = 0; i < forb.size(); ++i) {
      std::string idx = std::to_string(i + 1);
      t.emplace("S4forb" + std::string(2 - std::min<std::size_t>(2, idx.size()), '0') + idx, parse_graph6(forb[i]));
    }
    return t;
  }();
  return table;
}

}  // namespace detail

/// Names accepted: the fixed entries of catalog_names() and the families
/// Pn, Cn, Kn, Kn-e, Sn and K{a,b,...} (underscores and braces optional).
inline std::optional<Graph> lookup_graph(std::string_view raw) {
  const std::string name = detail::normalize_name(raw);
  if (auto it = detail::fixed_catalog().find(name); it != detail::fixed_catalog().end()) return it->second;
  if (name.size() < 2) return std::nullopt;
  const char head = name[0];
  std::string_view rest(name);
  rest.remove_prefix(1);
  if (head == 'K' && rest.find(',') != std::string_view::npos) {
    std::vector<std::size_t> parts;
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      auto comma = rest.find(',', pos);
      auto piece = rest.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      auto v = detail::parse_count(piece);
      if (!v || *v == 0) return std::nullopt;
      parts.push_back(*v);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    std::size_t total = 0;
    for (auto p : parts) total += p;
    if (total > Graph::kMaxVertices) return std::nullopt;
    return complete_multipartite(parts);
  }
  bool minus_e = false;
  if (rest.size() > 2 && rest.substr(rest.size() - 2) == "-e") {
    minus_e = true;
    rest.remove_suffix(2);
  }
  auto n = detail::parse_count(rest);
  if (!n || *n == 0 || *n > Graph::kMaxVertices) return std::nullopt;
  switch (head) {
    case 'P': return minus_e ? std::nullopt : std::optional<Graph>(path_graph(*n));
    case 'C': return (minus_e || *n < 3) ? std::nullopt : std::optional<Graph>(cycle_graph(*n));
    case 'S': return minus_e ? std::nullopt : std::optional<Graph>(star_graph(*n));
    case 'K':
      if (minus_e) return *n >= 2 ? std::optional<Graph>(complete_minus_edge(*n)) : std::nullopt;
      return complete_graph(*n);
    default: return std::nullopt;
  }
}

inline std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : detail::fixed_catalog()) names.push_back(k);
  return names;
}

namespace detail {
inline std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const bool same = std::tolower(static_cast<unsigned char>(a[i - 1])) == std::tolower(static_cast<unsigned char>(b[j - 1]));
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (same ? 0 : 1)});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}
}  // namespace detail

/// Catalog names within a small edit distance of `name`, closest first.
inline std::vector<std::string> near_catalog_names(std::string_view name, std::size_t limit = 5) {
  const std::string n = detail::normalize_name(name);
  std::vector<std::pair<std::size_t, std::string>> scored;
  for (const auto& c : catalog_names()) scored.emplace_back(detail::edit_distance(n, c), c);
  std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::string> out;
  for (const auto& [d, c] : scored) {
    if (out.size() >= limit || d > std::max<std::size_t>(3, n.size() / 2)) break;
    out.push_back(c);
  }
  return out;
}

}  // namespace chargraph

#pragma once

#include "int_matrix.hpp"

#include <algorithm>
#include <bit>
#include <initializer_list>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace chargraph {

using VertexSet = std::uint64_t;

/// Simple undirected graph on vertices 0..n-1, adjacency kept as row bitsets.
class Graph {
public:
  static constexpr std::size_t kMaxVertices = 64;

  Graph() = default;
  explicit Graph(std::size_t n) : rows_(n, 0) {
    if (n > kMaxVertices) throw ArgumentError("graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
  }
  Graph(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }
  static Graph from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  std::size_t order() const { return rows_.size(); }
  std::size_t size() const {
    std::size_t m = 0;
    for (auto r : rows_) m += static_cast<std::size_t>(std::popcount(r));
    return m / 2;
  }

  void add_edge(std::size_t u, std::size_t v) {
    check(u);
    check(v);
    if (u == v) throw ArgumentError("loops are not allowed (vertex " + std::to_string(u) + ")");
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
  }
  void remove_edge(std::size_t u, std::size_t v) {
    check(u);
    check(v);
    rows_[u] &= ~bit(v);
    rows_[v] &= ~bit(u);
  }
  bool has_edge(std::size_t u, std::size_t v) const { return (rows_[u] >> v) & 1u; }
  VertexSet neighbors(std::size_t v) const { return rows_[v]; }
  std::size_t degree(std::size_t v) const { return static_cast<std::size_t>(std::popcount(rows_[v])); }
  VertexSet all_vertices() const { return order() == 64 ? ~VertexSet{0} : (VertexSet{1} << order()) - 1; }

  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t u = 0; u < order(); ++u)
      for (std::size_t v = u + 1; v < order(); ++v)
        if (has_edge(u, v)) e.emplace_back(u, v);
    return e;
  }

  Graph complement() const {
    Graph c(order());
    for (std::size_t v = 0; v < order(); ++v) c.rows_[v] = all_vertices() & ~rows_[v] & ~bit(v);
    return c;
  }

  /// Vertex i of the result is vertex perm[i] of this graph.
  Graph relabeled(std::span<const std::size_t> perm) const {
    if (perm.size() != order()) throw ArgumentError("relabeling has wrong length");
    return induced(perm);
  }

  /// Induced subgraph on the given vertices, relabeled 0..k-1 in the given order.
  Graph induced(std::span<const std::size_t> vertices) const {
    Graph h(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) check(vertices[i]);
    for (std::size_t i = 0; i < vertices.size(); ++i)
      for (std::size_t j = i + 1; j < vertices.size(); ++j) {
        if (vertices[i] == vertices[j]) throw ArgumentError("repeated vertex in induced subgraph");
        if (has_edge(vertices[i], vertices[j])) h.add_edge(i, j);
      }
    return h;
  }
  Graph induced(VertexSet s) const { return induced(members(s)); }

  static std::vector<std::size_t> members(VertexSet s) {
    std::vector<std::size_t> out;
    while (s) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
      s &= s - 1;
    }
    return out;
  }

  /// Vertices reachable from `start` inside `within`.
  VertexSet component_of(std::size_t start, VertexSet within) const {
    VertexSet seen = bit(start), frontier = seen;
    while (frontier) {
      VertexSet next = 0;
      for (auto v : members(frontier)) next |= rows_[v];
      next &= within & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  bool is_connected() const {
    if (order() == 0) return false;
    return component_of(0, all_vertices()) == all_vertices();
  }
  bool is_connected_within(VertexSet s) const {
    if (s == 0) return false;
    return component_of(static_cast<std::size_t>(std::countr_zero(s)), s) == s;
  }

  /// Common degree, or nothing when degrees differ.
  std::optional<std::size_t> regular_degree() const {
    if (order() == 0) return std::nullopt;
    const std::size_t d = degree(0);
    for (std::size_t v = 1; v < order(); ++v)
      if (degree(v) != d) return std::nullopt;
    return d;
  }
  bool is_complete() const {
    for (std::size_t v = 0; v < order(); ++v)
      if (degree(v) + 1 != order()) return false;
    return true;
  }

  std::span<const VertexSet> rows() const { return rows_; }
  friend bool operator==(const Graph&, const Graph&) = default;

  static VertexSet bit(std::size_t v) { return VertexSet{1} << v; }

private:
  void check(std::size_t v) const {
    if (v >= order()) throw ArgumentError("vertex " + std::to_string(v) + " out of range for graph of order " + std::to_string(order()));
  }
  std::vector<VertexSet> rows_;
};

inline bool is_connected(const Graph& g) { return g.is_connected(); }
inline std::optional<std::size_t> is_regular(const Graph& g) { return g.regular_degree(); }

inline Graph induced_subgraph(const Graph& g, std::span<const std::size_t> s) { return g.induced(s); }
inline Graph induced_subgraph(const Graph& g, std::initializer_list<std::size_t> s) {
  return g.induced(std::span<const std::size_t>(s.begin(), s.size()));
}

inline IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix a(g.order(), g.order());
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = 0; v < g.order(); ++v)
      if (g.has_edge(u, v)) a(u, v) = 1;
  return a;
}

/// L = D - A.
inline IntMatrix laplacian_matrix(const Graph& g) {
  IntMatrix l(g.order(), g.order());
  for (std::size_t u = 0; u < g.order(); ++u) {
    l(u, u) = static_cast<unsigned long>(g.degree(u));
    for (std::size_t v = 0; v < g.order(); ++v)
      if (g.has_edge(u, v)) l(u, v) = -1;
  }
  return l;
}

/// Edge-list text: one "u v" pair per line; '#' starts a comment. An optional
/// first line "n <count>" fixes the order, otherwise it is 1 + the largest label.
inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::optional<std::size_t> order;
  std::size_t top = 0, lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a)) continue;
    if (!(ls >> b) || (ls >> extra)) throw ArgumentError("edge list line " + std::to_string(lineno) + ": expected two fields");
    try {
      if (a == "n") {
        order = std::stoul(b);
        continue;
      }
      std::size_t u = std::stoul(a), v = std::stoul(b);
      edges.emplace_back(u, v);
      top = std::max({top, u + 1, v + 1});
    } catch (const std::logic_error&) {
      throw ArgumentError("edge list line " + std::to_string(lineno) + ": not a vertex number");
    }
  }
  std::size_t n = order.value_or(top);
  if (n < top) throw ArgumentError("edge list mentions a vertex beyond the declared order");
  return Graph::from_edges(n, edges);
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace chargraph

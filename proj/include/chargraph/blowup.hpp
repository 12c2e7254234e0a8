#pragma once

#include "graph.hpp"

#include <cstddef>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

namespace chargraph {

/// G^d: vertex u of the underlying graph becomes a clique of size -d[u]
/// (d[u] < 0) or a stable set of size d[u] (d[u] > 0); classes are joined
/// completely along the edges of the underlying graph.
struct BlowupSpec {
  Graph underlying;
  std::vector<int> d;

  std::size_t order() const {
    std::size_t n = 0;
    for (int x : d) n += static_cast<std::size_t>(std::abs(x));
    return n;
  }
  friend bool operator==(const BlowupSpec&, const BlowupSpec&) = default;
};

/// Vertices are laid out class by class in underlying-vertex order.
inline Graph blowup(const BlowupSpec& spec) {
  const Graph& h = spec.underlying;
  if (spec.d.size() != h.order())
    throw ArgumentError("blow-up vector has " + std::to_string(spec.d.size()) + " entries for " + std::to_string(h.order()) + " vertices");
  std::vector<std::size_t> start(h.order() + 1, 0);
  for (std::size_t u = 0; u < h.order(); ++u) {
    if (spec.d[u] == 0) throw ArgumentError("blow-up entry for vertex " + std::to_string(u) + " is zero");
    start[u + 1] = start[u] + static_cast<std::size_t>(std::abs(spec.d[u]));
  }
  Graph g(start.back());
  for (std::size_t u = 0; u < h.order(); ++u) {
    if (spec.d[u] < 0)
      for (std::size_t a = start[u]; a < start[u + 1]; ++a)
        for (std::size_t b = a + 1; b < start[u + 1]; ++b) g.add_edge(a, b);
    for (std::size_t v = u + 1; v < h.order(); ++v) {
      if (!h.has_edge(u, v)) continue;
      for (std::size_t a = start[u]; a < start[u + 1]; ++a)
        for (std::size_t b = start[v]; b < start[v + 1]; ++b) g.add_edge(a, b);
    }
  }
  return g;
}

inline Graph blowup(const Graph& underlying, std::vector<int> d) { return blowup(BlowupSpec{underlying, std::move(d)}); }

enum class TwinKind { True, False };

namespace detail {

/// Greedy twin classes by smallest label. kind restricts which twins merge;
/// nothing means both kinds (a vertex never has twins of both kinds).
inline std::vector<std::vector<std::size_t>> twin_classes(const Graph& g, std::optional<TwinKind> kind) {
  const std::size_t n = g.order();
  std::vector<bool> taken(n, false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t v = 0; v < n; ++v) {
    if (taken[v]) continue;
    taken[v] = true;
    classes.push_back({v});
    for (std::size_t u = v + 1; u < n; ++u) {
      if (taken[u]) continue;
      const bool adj = g.has_edge(u, v);
      const VertexSet mask = ~(Graph::bit(u) | Graph::bit(v));
      if ((g.neighbors(u) & mask) != (g.neighbors(v) & mask)) continue;
      if (kind && (*kind == TwinKind::True) != adj) continue;
      taken[u] = true;
      classes.back().push_back(u);
    }
  }
  return classes;
}

inline BlowupSpec quotient_from_classes(const Graph& g, const std::vector<std::vector<std::size_t>>& classes) {
  BlowupSpec spec{Graph(classes.size()), {}};
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    const int size = static_cast<int>(c.size());
    spec.d.push_back(size > 1 && g.has_edge(c[0], c[1]) ? -size : size);
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      if (g.has_edge(c[0], classes[j][0])) spec.underlying.add_edge(i, j);
  }
  return spec;
}

}  // namespace detail

struct TwinQuotient {
  Graph underlying;
  /// Would be absent if the two twin kinds could overlap; they cannot (a true
  /// twin u of v and a false twin w of v would force u ~ w and w ~ v), so
  /// this is always set, with d all 1 for twin-free graphs.
  std::optional<BlowupSpec> spec;
};

/// Merge true twins into clique classes and false twins into stable classes
/// in one pass. blowup(*spec) is isomorphic to g.
inline TwinQuotient twin_quotient(const Graph& g) {
  auto classes = detail::twin_classes(g, std::nullopt);
  auto spec = detail::quotient_from_classes(g, classes);
  Graph under = spec.underlying;
  return {std::move(under), std::move(spec)};
}

/// Quotient by one kind of twin only; the spec entries are all negative
/// (true twins) or all positive (false twins), singletons being +1.
inline BlowupSpec quotient_by(const Graph& g, TwinKind kind) {
  return detail::quotient_from_classes(g, detail::twin_classes(g, kind));
}

}  // namespace chargraph

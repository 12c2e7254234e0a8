#pragma once

#include "graph.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace chargraph {

/// Witness of an induced copy: embedding[i] is the host vertex playing pattern vertex i.
using Embedding = std::vector<std::size_t>;

namespace detail {

class InducedSearch {
public:
  InducedSearch(const Graph& host, const Graph& pattern) : host_(host), pattern_(pattern) {
    const std::size_t k = pattern.order();
    // Visit pattern vertices so that each one (after the first of its
    // component) already has a mapped neighbour.
    std::vector<bool> placed(k, false);
    while (order_.size() < k) {
      std::size_t start = k;
      for (std::size_t v = 0; v < k; ++v)
        if (!placed[v] && (start == k || pattern.degree(v) > pattern.degree(start))) start = v;
      std::vector<std::size_t> queue{start};
      placed[start] = true;
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        order_.push_back(queue[qi]);
        auto nbrs = Graph::members(pattern.neighbors(queue[qi]));
        std::sort(nbrs.begin(), nbrs.end(), [&](auto a, auto b) { return pattern.degree(a) > pattern.degree(b); });
        for (auto w : nbrs)
          if (!placed[w]) {
            placed[w] = true;
            queue.push_back(w);
          }
      }
    }
    map_.assign(k, 0);
  }

  std::optional<Embedding> run() {
    if (pattern_.order() > host_.order()) return std::nullopt;
    if (pattern_.order() == 0) return Embedding{};
    if (extend(0, 0)) return map_;
    return std::nullopt;
  }

private:
  bool extend(std::size_t depth, VertexSet used) {
    if (depth == order_.size()) return true;
    const std::size_t p = order_[depth];
    const std::size_t pdeg = pattern_.degree(p);
    const std::size_t pnon = pattern_.order() - 1 - pdeg;
    VertexSet cand = host_.all_vertices() & ~used;
    for (std::size_t d = 0; d < depth; ++d) {
      const std::size_t q = order_[d];
      if (pattern_.has_edge(p, q))
        cand &= host_.neighbors(map_[q]);
      else
        cand &= ~host_.neighbors(map_[q]);
    }
    for (auto h : Graph::members(cand)) {
      const std::size_t hdeg = host_.degree(h);
      if (hdeg < pdeg || host_.order() - 1 - hdeg < pnon) continue;
      map_[p] = h;
      if (extend(depth + 1, used | Graph::bit(h))) return true;
    }
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::vector<std::size_t> order_;
  Embedding map_;
};

}  // namespace detail

/// An injective map from pattern vertices to host vertices preserving both
/// adjacency and non-adjacency, if one exists.
inline std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern) {
  return detail::InducedSearch(host, pattern).run();
}

inline bool has_induced(const Graph& host, const Graph& pattern) { return find_induced(host, pattern).has_value(); }

inline bool is_induced_embedding(const Graph& host, const Graph& pattern, const Embedding& e) {
  if (e.size() != pattern.order()) return false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] >= host.order()) return false;
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (e[i] == e[j]) return false;
      if (pattern.has_edge(i, j) != host.has_edge(e[i], e[j])) return false;
    }
  }
  return true;
}

struct ForbiddenHit {
  std::size_t index;  // position in the forbidden list
  Embedding embedding;
};

/// First member of `forbidden` found as an induced subgraph of g.
inline std::optional<ForbiddenHit> find_any_induced(const Graph& g, std::span<const Graph> forbidden) {
  for (std::size_t i = 0; i < forbidden.size(); ++i)
    if (auto e = find_induced(g, forbidden[i])) return ForbiddenHit{i, std::move(*e)};
  return std::nullopt;
}

}  // namespace chargraph

#pragma once

#include "graph6.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <string>
#include <vector>

namespace chargraph {

namespace detail {

using Cells = std::vector<std::vector<std::size_t>>;

/// Split cells by neighbour counts into every cell until the partition is
/// equitable. Splits are ordered by signature, so the result depends only on
/// the graph and the incoming cell order.
inline Cells refine(const Graph& g, Cells cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<VertexSet> masks(cells.size(), 0);
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (auto v : cells[i]) masks[i] |= Graph::bit(v);
    Cells next;
    next.reserve(cells.size());
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, std::size_t>> sig;
      sig.reserve(cell.size());
      for (auto v : cell) {
        std::vector<int> s(masks.size());
        for (std::size_t j = 0; j < masks.size(); ++j) s[j] = std::popcount(g.neighbors(v) & masks[j]);
        sig.emplace_back(std::move(s), v);
      }
      std::stable_sort(sig.begin(), sig.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      std::size_t start = next.size();
      next.emplace_back();
      for (std::size_t i = 0; i < sig.size(); ++i) {
        if (i > 0 && sig[i].first != sig[i - 1].first) next.emplace_back();
        next.back().push_back(sig[i].second);
      }
      if (next.size() - start > 1) changed = true;
    }
    cells = std::move(next);
  }
  return cells;
}

inline bool are_twins(const Graph& g, std::size_t u, std::size_t v) {
  const VertexSet mask = ~(Graph::bit(u) | Graph::bit(v));
  return (g.neighbors(u) & mask) == (g.neighbors(v) & mask);
}

class Canonizer {
public:
  explicit Canonizer(const Graph& g) : g_(g) {}

  void run() {
    if (g_.order() == 0) {
      best_ = to_graph6(g_);
      return;
    }
    Cells start(1);
    for (std::size_t v = 0; v < g_.order(); ++v) start[0].push_back(v);
    search(std::move(start));
  }

  const std::string& certificate() const { return best_; }
  const std::vector<std::size_t>& labeling() const { return best_order_; }

private:
  void search(Cells cells) {
    cells = refine(g_, std::move(cells));
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1 && (target == cells.size() || cells[i].size() < cells[target].size())) target = i;
    if (target == cells.size()) {
      std::vector<std::size_t> order;
      order.reserve(g_.order());
      for (const auto& c : cells) order.push_back(c.front());
      std::string cert = to_graph6(g_.relabeled(order));
      if (best_.empty() || cert > best_) {
        best_ = std::move(cert);
        best_order_ = std::move(order);
      }
      return;
    }
    // Swapping two twins is an automorphism fixing everything individualized
    // so far, so one representative per twin class gives the same leaves.
    std::vector<std::size_t> tried;
    for (auto v : cells[target]) {
      if (std::any_of(tried.begin(), tried.end(), [&](auto u) { return are_twins(g_, u, v); })) continue;
      tried.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != target) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({v});
        std::vector<std::size_t> rest;
        for (auto w : cells[i])
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      search(std::move(child));
    }
  }

  const Graph& g_;
  std::string best_;
  std::vector<std::size_t> best_order_;
};

}  // namespace detail

/// Canonical relabeling: result[i] is the original vertex placed at position i.
inline std::vector<std::size_t> canonical_labeling(const Graph& g) {
  detail::Canonizer c(g);
  c.run();
  return c.labeling();
}

/// graph6 of a canonically relabeled copy; equal exactly for isomorphic graphs.
inline std::string canonical_form(const Graph& g) {
  if (g.order() > kGraph6MaxOrder) throw ArgumentError("canonical_form supports at most 62 vertices");
  detail::Canonizer c(g);
  c.run();
  return c.certificate();
}

inline Graph canonical_graph(const Graph& g) { return parse_graph6(canonical_form(g)); }

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

}  // namespace chargraph

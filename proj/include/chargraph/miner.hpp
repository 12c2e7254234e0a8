#pragma once

// Minimal forbidden induced subgraphs for "statistic <= k", found by
// exhaustive search over connected graphs.

#include "classifier.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace chargraph {

enum class Statistic { PhiA, GammaA, PhiLRegular };

inline std::string to_string(Statistic s) {
  switch (s) {
    case Statistic::PhiA: return "phiA";
    case Statistic::GammaA: return "gammaA";
    case Statistic::PhiLRegular: return "phiL";
  }
  return "";
}

inline Statistic parse_statistic(const std::string& s) {
  if (s == "phiA" || s == "phi_A") return Statistic::PhiA;
  if (s == "gammaA" || s == "gamma_A") return Statistic::GammaA;
  if (s == "phiL" || s == "phi_L_regular") return Statistic::PhiLRegular;
  throw ArgumentError("unknown statistic '" + s + "' (expected phiA, gammaA or phiL)");
}

/// Value of the statistic; absent for phiL on a non-regular graph, which is
/// never counted as forbidden.
inline std::optional<std::size_t> statistic_value(const Graph& g, Statistic s) {
  switch (s) {
    case Statistic::PhiA: return phi_adjacency(g);
    case Statistic::GammaA: return algebraic_corank(g);
    case Statistic::PhiLRegular:
      if (!g.regular_degree()) return std::nullopt;
      return phi_laplacian(g);
  }
  return std::nullopt;
}

struct MiningTask {
  std::size_t max_vertices = 6;  // inclusive
  Statistic statistic = Statistic::PhiA;
  std::size_t k = 0;  // forbidden means statistic >= k + 1
};

struct MinedGraph {
  std::string graph6;  // canonical
  std::size_t order = 0;
  std::size_t value = 0;
};

struct MiningResult {
  MiningTask task;
  std::vector<MinedGraph> minimal_forbidden;  // sorted by (order, graph6)
  std::vector<MinedGraph> all_forbidden;      // same order, minimal or not
  std::map<std::size_t, std::size_t> counts_by_order;

  std::vector<std::string> graph6_list() const {
    std::vector<std::string> out;
    for (const auto& m : minimal_forbidden) out.push_back(m.graph6);
    return out;
  }
};

/// Statistic values memoized by canonical form; safe to share between threads.
class StatisticCache {
public:
  explicit StatisticCache(Statistic s) : stat_(s) {}

  std::optional<std::size_t> get(const Graph& g) {
    const std::string key = canonical_form(g);
    {
      std::lock_guard lock(mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    auto v = statistic_value(g, stat_);
    std::lock_guard lock(mutex_);
    memo_.emplace(key, v);
    return v;
  }

private:
  Statistic stat_;
  std::mutex mutex_;
  std::map<std::string, std::optional<std::size_t>> memo_;
};

namespace detail {

/// Every proper connected induced subgraph has statistic <= k.
inline bool all_proper_subgraphs_allowed(const Graph& g, std::size_t k, StatisticCache& cache) {
  const VertexSet all = g.all_vertices();
  for (VertexSet s = 1; s < all; ++s) {
    if (!g.is_connected_within(s)) continue;
    auto v = cache.get(g.induced(s));
    if (v && *v > k) return false;
  }
  return true;
}

}  // namespace detail

/// Collects every forbidden connected graph up to max_vertices, keeps those
/// containing no smaller forbidden graph, then re-verifies minimality over
/// all proper connected induced subgraphs. Throws InternalError if the
/// re-verification fails.
inline MiningResult mine(const MiningTask& task, std::size_t threads = default_threads()) {
  if (task.max_vertices < 2) throw ArgumentError("max_vertices must be at least 2");
  if (task.max_vertices > 10) throw ArgumentError("mining is supported up to 10 vertices");
  MiningResult res;
  res.task = task;
  StatisticCache cache(task.statistic);
  std::vector<Graph> forbidden_graphs;
  for (std::size_t n = 1; n <= task.max_vertices; ++n) {
    const auto graphs = enumerate_connected(n);
    std::vector<std::optional<std::size_t>> values(graphs.size());
    parallel_for(graphs.size(), threads, [&](std::size_t i) { values[i] = cache.get(graphs[i]); });
    std::vector<MinedGraph> level;
    std::vector<Graph> level_graphs;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (!values[i] || *values[i] <= task.k) continue;
      level.push_back({to_graph6(graphs[i]), n, *values[i]});
      level_graphs.push_back(graphs[i]);
    }
    // minimality against every smaller forbidden graph found so far
    std::vector<char> minimal(level.size(), 1);
    parallel_for(level.size(), threads, [&](std::size_t i) {
      for (const auto& f : forbidden_graphs)
        if (has_induced(level_graphs[i], f)) {
          minimal[i] = 0;
          return;
        }
    });
    for (std::size_t i = 0; i < level.size(); ++i) {
      res.all_forbidden.push_back(level[i]);
      if (minimal[i]) {
        res.minimal_forbidden.push_back(level[i]);
        ++res.counts_by_order[n];
      }
    }
    forbidden_graphs.insert(forbidden_graphs.end(), level_graphs.begin(), level_graphs.end());
  }

  for (std::size_t i = 0; i < res.minimal_forbidden.size(); ++i) {
    const Graph g = parse_graph6(res.minimal_forbidden[i].graph6);
    if (!detail::all_proper_subgraphs_allowed(g, task.k, cache))
      throw InternalError("mined graph " + res.minimal_forbidden[i].graph6 + " has a forbidden proper induced subgraph");
    for (std::size_t j = 0; j < res.minimal_forbidden.size(); ++j) {
      if (i == j || res.minimal_forbidden[j].order > g.order()) continue;
      if (has_induced(g, parse_graph6(res.minimal_forbidden[j].graph6)))
        throw InternalError("mined graph " + res.minimal_forbidden[i].graph6 + " contains " + res.minimal_forbidden[j].graph6);
    }
  }
  return res;
}

}  // namespace chargraph

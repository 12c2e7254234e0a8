#pragma once

#include "canonical.hpp"

#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

namespace chargraph {

/// One canonical representative per isomorphism class of connected graphs on
/// n vertices, sorted by graph6. Built by attaching a new vertex to every
/// nonempty subset of each (n-1)-vertex representative; every connected graph
/// arises this way since it has a vertex whose removal keeps it connected.
inline std::vector<Graph> enumerate_connected(std::size_t n) {
  if (n == 0) return {};
  if (n > 16) throw ArgumentError("enumeration is limited to 16 vertices");
  std::vector<std::string> level{to_graph6(Graph(1))};
  for (std::size_t size = 2; size <= n; ++size) {
    std::unordered_set<std::string> seen;
    for (const auto& code : level) {
      const Graph parent = parse_graph6(code);
      for (VertexSet nbrs = 1; nbrs < (VertexSet{1} << (size - 1)); ++nbrs) {
        Graph g(size);
        for (const auto& [u, v] : parent.edges()) g.add_edge(u, v);
        for (auto u : Graph::members(nbrs)) g.add_edge(u, size - 1);
        seen.insert(canonical_form(g));
      }
    }
    level.assign(seen.begin(), seen.end());
    std::sort(level.begin(), level.end());
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (const auto& code : level) out.push_back(parse_graph6(code));
  return out;
}

}  // namespace chargraph

#include <chargraph/blowup.hpp>
#include <chargraph/canonical.hpp>
#include <chargraph/catalog.hpp>
#include <chargraph/enumerate.hpp>
#include <chargraph/graph6.hpp>
#include <chargraph/induced.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace chargraph;

namespace {

Graph random_graph(std::mt19937& rng, std::size_t n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

Graph random_relabel(std::mt19937& rng, const Graph& g) {
  std::vector<std::size_t> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabeled(perm);
}

// Oracle: smallest upper-triangle bit string over all vertex orders.
std::vector<bool> brute_canonical(const Graph& g) {
  std::vector<std::size_t> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> code;
    for (std::size_t j = 1; j < g.order(); ++j)
      for (std::size_t i = 0; i < j; ++i) code.push_back(g.has_edge(perm[i], perm[j]));
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Oracle: some |H|-subset of G, in some order, reproduces H exactly.
bool brute_has_induced(const Graph& g, const Graph& h) {
  const std::size_t k = h.order();
  for (VertexSet s = 0; s <= g.all_vertices(); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) != k) continue;
    auto verts = Graph::members(s);
    std::sort(verts.begin(), verts.end());
    do {
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i)
        for (std::size_t j = i + 1; j < k && ok; ++j) ok = g.has_edge(verts[i], verts[j]) == h.has_edge(i, j);
      if (ok) return true;
    } while (std::next_permutation(verts.begin(), verts.end()));
    if (s == g.all_vertices()) break;
  }
  return false;
}

std::set<std::pair<std::size_t, std::size_t>> edge_set(const Graph& g) {
  auto e = g.edges();
  return {e.begin(), e.end()};
}

}  // namespace

TEST(Graph6, WorkedExamples) {
  const Graph d = parse_graph6("C^");
  EXPECT_EQ(d.order(), 4u);
  EXPECT_EQ(d.size(), 5u);
  EXPECT_FALSE(d.has_edge(0, 1));
  EXPECT_TRUE(is_isomorphic(d, diamond_graph()));
  EXPECT_EQ(parse_graph6("@").order(), 1u);
  EXPECT_EQ(edge_set(parse_graph6("Edo_")), (std::set<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 3}, {0, 4}, {1, 4}, {2, 3}, {2, 5}}));
  EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(to_graph6(Graph(0)), "?");
}

TEST(Graph6, Errors) {
  auto offset = [](std::string_view s) -> std::ptrdiff_t {
    try {
      parse_graph6(s);
    } catch (const ParseError& e) {
      return static_cast<std::ptrdiff_t>(e.offset());
    }
    return -1;
  };
  EXPECT_EQ(offset(""), 0);
  EXPECT_EQ(offset(" "), 0);
  EXPECT_EQ(offset("~"), 0);
  EXPECT_EQ(offset("C"), 1);      // too short
  EXPECT_EQ(offset("C^^"), 2);    // too long
  EXPECT_EQ(offset("D\x20?"), 1); // byte below 63
  EXPECT_EQ(offset("B@"), 1);     // n = 3 uses 3 bits, low 3 bits must be zero
  EXPECT_EQ(offset("Bx"), 1);
  EXPECT_EQ(offset("B_"), -1);
  EXPECT_EQ(offset("Bw"), -1);
}

TEST(Graph6, RoundTrip) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 600; ++trial) {
    const Graph g = random_graph(rng, trial % 40, 0.3 + 0.4 * (trial % 3) / 2.0);
    const std::string s = to_graph6(g);
    const Graph back = parse_graph6(s);
    ASSERT_EQ(edge_set(back), edge_set(g));
    ASSERT_EQ(back.order(), g.order());
    ASSERT_EQ(to_graph6(back), s);
  }
  const Graph big = complete_graph(62);
  EXPECT_EQ(parse_graph6(to_graph6(big)).size(), 62u * 61 / 2);
  EXPECT_THROW(to_graph6(Graph(63)), ArgumentError);
}

TEST(Matrices, Examples) {
  const IntMatrix a = adjacency_matrix(diamond_graph());
  EXPECT_EQ(a, (IntMatrix{{0, 0, 1, 1}, {0, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}}));
  EXPECT_EQ(adjacency_matrix(Graph(1)), (IntMatrix{{0}}));
  EXPECT_EQ(laplacian_matrix(Graph(1)), (IntMatrix{{0}}));
  const IntMatrix l = laplacian_matrix(complete_graph(3));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(l(i, 0) + l(i, 1) + l(i, 2), 0);
  EXPECT_EQ(l(1, 1), 2);
}

TEST(Induced, Examples) {
  EXPECT_TRUE(is_isomorphic(induced_subgraph(diamond_graph(), {0, 1, 2}), path_graph(3)));
  EXPECT_EQ(edge_set(induced_subgraph(petersen_graph(), std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9})),
            edge_set(petersen_graph()));
  EXPECT_TRUE(is_isomorphic(induced_subgraph(complete_graph(5), {4, 0, 2, 1}), complete_graph(4)));
  EXPECT_THROW(induced_subgraph(paw_graph(), {0, 7}), ArgumentError);
  EXPECT_TRUE(has_induced(paw_graph(), path_graph(3)));
  EXPECT_FALSE(has_induced(complete_graph(4), paw_graph()));
  EXPECT_FALSE(has_induced(complete_minus_edge(5), cycle_graph(4)));
  EXPECT_FALSE(brute_has_induced(complete_minus_edge(5), cycle_graph(4)));
  EXPECT_TRUE(has_induced(petersen_graph(), cycle_graph(5)));
  EXPECT_FALSE(has_induced(petersen_graph(), cycle_graph(4)));
}

TEST(Induced, AgreesWithExhaustiveSearch) {
  std::mt19937 rng(808);
  const std::vector<Graph> patterns{path_graph(3), path_graph(4), cycle_graph(4), paw_graph(), diamond_graph(),
                                    claw_graph(), cycle_graph(5), house_graph(), complete_graph(4), family_f()[0].graph};
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = random_graph(rng, 4 + trial % 5, 0.25 + 0.5 * (trial % 4) / 3.0);
    for (const auto& h : patterns) {
      if (h.order() > g.order()) continue;
      auto e = find_induced(g, h);
      ASSERT_EQ(e.has_value(), brute_has_induced(g, h)) << to_graph6(g) << " / " << to_graph6(h);
      if (e) ASSERT_TRUE(is_induced_embedding(g, h, *e));
    }
  }
}

TEST(Canonical, Examples) {
  EXPECT_EQ(canonical_form(Graph(3, {{0, 1}, {1, 2}})), canonical_form(Graph(3, {{1, 0}, {0, 2}})));
  EXPECT_NE(canonical_form(complete_graph(3)), canonical_form(path_graph(3)));
  std::set<std::string> forms;
  for (const auto& g : smith4_forbidden_graphs()) forms.insert(canonical_form(g));
  EXPECT_EQ(forms.size(), 43u);
}

TEST(Canonical, RelabelingInvariance) {
  std::mt19937 rng(1234);
  std::vector<Graph> graphs{petersen_graph(), triangular_prism(), cycle_graph(7), blowup(cycle_graph(4), {-2, 3, -2, 1})};
  for (const auto& f : family_f()) graphs.push_back(f.graph);
  for (int i = 0; i < 12; ++i) graphs.push_back(random_graph(rng, 6 + i % 11));
  for (const auto& g : graphs) {
    const std::string c = canonical_form(g);
    for (int r = 0; r < 100; ++r) ASSERT_EQ(canonical_form(random_relabel(rng, g)), c) << to_graph6(g);
    ASSERT_TRUE(is_isomorphic(canonical_graph(g), g));
  }
}

TEST(Canonical, SeparatesIsomorphismClassesLikeBruteForce) {
  // all labeled graphs on 5 vertices: the two classifications must coincide
  std::map<std::string, std::vector<bool>> by_form;
  std::set<std::vector<bool>> brute_classes;
  for (unsigned mask = 0; mask < (1u << 10); ++mask) {
    Graph g(5);
    std::size_t bit = 0;
    for (std::size_t j = 1; j < 5; ++j)
      for (std::size_t i = 0; i < j; ++i, ++bit)
        if ((mask >> bit) & 1u) g.add_edge(i, j);
    const auto b = brute_canonical(g);
    auto [it, fresh] = by_form.emplace(canonical_form(g), b);
    ASSERT_EQ(it->second, b);
    brute_classes.insert(b);
  }
  EXPECT_EQ(by_form.size(), 34u);
  EXPECT_EQ(brute_classes.size(), 34u);
}

TEST(Blowup, WorkedExamples) {
  const Graph s = blowup(star_graph(4), {2, 1, -2, -2});
  EXPECT_EQ(s.order(), 7u);
  EXPECT_FALSE(s.has_edge(0, 1));  // apex class is a stable pair
  EXPECT_TRUE(s.has_edge(3, 4));
  EXPECT_TRUE(s.has_edge(0, 6));
  EXPECT_FALSE(s.has_edge(2, 3));
  EXPECT_EQ(edge_set(blowup(petersen_graph(), std::vector<int>(10, 1))), edge_set(petersen_graph()));
  const Graph c = blowup(cycle_graph(4), {-4, -4, -4, -4});
  EXPECT_EQ(c.order(), 16u);
  // class-major layout: classes 0 and 2 are opposite on the 4-cycle
  EXPECT_TRUE(c.has_edge(0, 3));
  EXPECT_TRUE(c.has_edge(0, 4));
  EXPECT_FALSE(c.has_edge(0, 8));
  EXPECT_EQ(c.size(), 4u * 6 + 4u * 16);
  EXPECT_THROW(blowup(path_graph(2), {1, 0}), ArgumentError);
  EXPECT_THROW(blowup(path_graph(2), {1}), ArgumentError);
}

TEST(TwinQuotient, Examples) {
  const auto q = twin_quotient(blowup(cycle_graph(4), {-2, -2, -2, -2}));
  ASSERT_TRUE(q.spec);
  EXPECT_TRUE(is_isomorphic(q.underlying, cycle_graph(4)));
  EXPECT_EQ(q.spec->d, (std::vector<int>{-2, -2, -2, -2}));
  const auto k = twin_quotient(complete_graph(6));
  EXPECT_EQ(k.underlying.order(), 1u);
  EXPECT_EQ(k.spec->d, std::vector<int>{-6});
  const auto c5 = twin_quotient(cycle_graph(5));
  EXPECT_EQ(c5.spec->d, std::vector<int>(5, 1));
  const auto kab = quotient_by(complete_multipartite({2, 3}), TwinKind::False);
  EXPECT_EQ(kab.d, (std::vector<int>{2, 3}));
}

TEST(TwinQuotient, RoundTripOverTwinFreeUnderlyings) {
  std::mt19937 rng(2718);
  std::uniform_int_distribution<int> dist(-3, 3);
  const std::vector<Graph> bases{cycle_graph(5), petersen_graph(), path_graph(4), path_graph(5), house_graph(), family_f()[2].graph};
  for (const auto& base : bases) {
    ASSERT_EQ(twin_quotient(base).underlying.order(), base.order());
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> d(base.order());
      for (auto& x : d)
        do x = dist(rng);
        while (x == 0);
      if (std::accumulate(d.begin(), d.end(), 0, [](int s, int x) { return s + std::abs(x); }) > 30) continue;
      const Graph g = random_relabel(rng, blowup(base, d));
      const auto q = twin_quotient(g);
      ASSERT_TRUE(q.spec);
      ASSERT_TRUE(is_isomorphic(blowup(*q.spec), g));
      ASSERT_TRUE(is_isomorphic(q.underlying, base));
    }
  }
}

TEST(Catalog, FamilyFMatchesJoinForms) {
  EXPECT_EQ(family_f().size(), 14u);
  for (const auto& [name, g] : family_f_join_forms()) {
    auto it = std::find_if(family_f().begin(), family_f().end(), [&](const NamedGraph& f) { return f.name == name; });
    ASSERT_NE(it, family_f().end()) << name;
    EXPECT_TRUE(is_isomorphic(it->graph, g)) << name;
  }
  std::set<std::string> forms;
  for (const auto& f : family_f()) {
    EXPECT_TRUE(f.graph.is_connected()) << f.name;
    forms.insert(canonical_form(f.graph));
  }
  EXPECT_EQ(forms.size(), 14u);
}

TEST(Catalog, Lookup) {
  EXPECT_TRUE(is_isomorphic(*lookup_graph("K_{2,3}"), complete_multipartite({2, 3})));
  EXPECT_TRUE(is_isomorphic(*lookup_graph("K3,3"), complete_multipartite({3, 3})));
  EXPECT_EQ(lookup_graph("K5-e")->size(), 9u);
  EXPECT_EQ(lookup_graph("C7")->size(), 7u);
  EXPECT_EQ(lookup_graph("S5")->order(), 5u);
  EXPECT_TRUE(is_isomorphic(*lookup_graph("P5"), path_graph(5)));
  EXPECT_TRUE(is_isomorphic(*lookup_graph("prism"), *lookup_graph("K3xK2")));
  EXPECT_TRUE(is_isomorphic(*lookup_graph("petersen"), petersen_graph()));
  EXPECT_EQ(to_graph6(*lookup_graph("S4forb01")), "Edo_");
  EXPECT_FALSE(lookup_graph("C2"));
  EXPECT_FALSE(lookup_graph("nonsense"));
  EXPECT_FALSE(lookup_graph("K0"));
  const auto near = near_catalog_names("petre");
  EXPECT_NE(std::find(near.begin(), near.end(), "petersen"), near.end());
}

TEST(Connectivity, Basics) {
  EXPECT_TRUE(is_connected(petersen_graph()));
  EXPECT_FALSE(is_connected(disjoint_union(complete_graph(2), complete_graph(1))));
  EXPECT_EQ(is_regular(petersen_graph()), 3u);
  EXPECT_FALSE(is_regular(paw_graph()));
  EXPECT_EQ(is_regular(Graph(1)), 0u);
}

TEST(Enumerate, MatchesBruteForceUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<std::vector<bool>> classes;
    const std::size_t pairs = n * (n - 1) / 2;
    for (unsigned long mask = 0; mask < (1ul << pairs); ++mask) {
      Graph g(n);
      std::size_t bit = 0;
      for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++bit)
          if ((mask >> bit) & 1u) g.add_edge(i, j);
      if (g.is_connected()) classes.insert(brute_canonical(g));
    }
    const auto listed = enumerate_connected(n);
    std::set<std::vector<bool>> got;
    for (const auto& g : listed) {
      ASSERT_TRUE(g.is_connected());
      got.insert(brute_canonical(g));
    }
    EXPECT_EQ(listed.size(), classes.size()) << n;
    EXPECT_EQ(got, classes) << n;
  }
}

TEST(Enumerate, FrozenCounts) {
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto gs = enumerate_connected(n);
    EXPECT_EQ(gs.size(), expected[n - 1]);
    std::vector<std::string> codes;
    for (const auto& g : gs) codes.push_back(to_graph6(g));
    EXPECT_TRUE(std::is_sorted(codes.begin(), codes.end()));
  }
}

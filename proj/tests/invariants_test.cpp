#include <gtest/gtest.h>

#include <random>

#include "graphdelta/constructions.hpp"
#include "graphdelta/enumeration.hpp"
#include "graphdelta/error.hpp"
#include "graphdelta/invariants.hpp"
#include "support.hpp"

namespace graphdelta {
namespace {

Graph apex_over_two_squares() { return join(complete(1), disjoint_union(cycle(4), cycle(4))); }

TEST(Connectivity, IsConnected) {
  EXPECT_TRUE(is_connected(cycle(6)));
  EXPECT_FALSE(is_connected(Graph::empty(2)));
  EXPECT_FALSE(is_connected(disjoint_union(complete(3), complete(3))));
  EXPECT_TRUE(is_connected(Graph::empty(1)));
}

TEST(Distance, Examples) {
  EXPECT_EQ(distance(path(5), 0, 4), 4);
  EXPECT_EQ(distance(complete(4), 1, 3), 1);
  EXPECT_EQ(distance(cycle(5), 2, 2), 0);
  EXPECT_FALSE(distance(Graph::empty(2), 0, 1).has_value());
}

TEST(Diameter, Examples) {
  EXPECT_EQ(diameter(cycle(8)), 4);
  EXPECT_EQ(diameter(complete_bipartite(3, 5)), 2);
  EXPECT_EQ(diameter(path(8)), 7);
  EXPECT_EQ(diameter(complete(5)), 1);
  EXPECT_THROW(diameter(Graph::empty(1)), Error);
  try {
    diameter(Graph::empty(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotConnected);
  }
}

TEST(FreeVertex, Examples) {
  EXPECT_TRUE(is_free_vertex(path(4), 0));
  EXPECT_FALSE(is_free_vertex(path(4), 1));
  for (int v = 0; v < 5; ++v) EXPECT_FALSE(is_free_vertex(cycle(5), v));
  for (int v = 0; v < 6; ++v) EXPECT_TRUE(is_free_vertex(complete(6), v));
  EXPECT_EQ(free_count(complete_bipartite(1, 3)), 3);
  for (int n = 4; n <= 12; ++n) EXPECT_EQ(free_count(cycle(n)), 0);
  EXPECT_EQ(free_count(complete_bipartite(2, 6)), 0);
  EXPECT_TRUE(is_free_vertex(Graph::empty(1), 0));
}

TEST(LocalConnectivity, Examples) {
  EXPECT_EQ(local_connectivity(cycle(6), 0, 3), 2);
  EXPECT_EQ(local_connectivity(complete_bipartite(1, 4), 1, 2), 1);

  const Graph k24 = complete_bipartite(2, 4);
  const int oracle = testing::disjoint_paths_exhaustive(k24, 0, 1);
  ASSERT_EQ(oracle, 4);
  EXPECT_EQ(local_connectivity(k24, 0, 1), oracle);
}

TEST(LocalConnectivity, Errors) {
  try {
    local_connectivity(cycle(5), 0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::AdjacentPair);
  }
  try {
    local_connectivity(cycle(5), 2, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SamePair);
  }
}

TEST(VertexConnectivity, Examples) {
  EXPECT_EQ(vertex_connectivity(cycle(9)), 2);
  EXPECT_EQ(vertex_connectivity(complete_bipartite(4, 4)), 4);
  EXPECT_EQ(vertex_connectivity(complete(5)), 4);
  EXPECT_EQ(vertex_connectivity(apex_over_two_squares()), 1);
  EXPECT_EQ(vertex_connectivity(path(2)), 1);
  EXPECT_THROW(vertex_connectivity(Graph::empty(2)), Error);
}

TEST(Analyze, Examples) {
  const AnalysisReport p8 = analyze(path(8));
  EXPECT_EQ(p8.delta, (DeltaTriple{2, 7, 1}));
  EXPECT_EQ(p8.phi, 10);
  EXPECT_EQ(p8.free_set, (std::vector<VertexId>{0, 7}));
  EXPECT_EQ(analyze(cycle(8)).delta, (DeltaTriple{0, 4, 2}));
  EXPECT_EQ(analyze(cycle(8)).phi, 6);
  EXPECT_EQ(analyze(complete_bipartite(2, 6)).delta, (DeltaTriple{0, 2, 2}));
  EXPECT_EQ(analyze(apex_over_two_squares()).delta, (DeltaTriple{0, 2, 1}));

  const AnalysisReport k4 = analyze(complete(4));
  EXPECT_TRUE(k4.complete);
  EXPECT_EQ(k4.delta, (DeltaTriple{4, 1, 3}));
  EXPECT_EQ(k4.free_set.size(), 4U);
  EXPECT_THROW(analyze(disjoint_union(path(2), path(2))), Error);
  EXPECT_EQ(to_string(DeltaTriple{1, 2, 3}), "(1,2,3)");
}

// Random connected graphs of assorted density.
std::vector<Graph> connected_sample(std::uint64_t seed, int count, int max_n) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = 2 + static_cast<int>(rng() % (max_n - 1));
    const double p = 0.15 + static_cast<double>(rng() % 80) / 100.0;
    Graph g = testing::random_graph(rng, n, p);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

TEST(InvariantProperty, FreeVertexImplementationsAgree) {
  for (const Graph& g : connected_sample(1, 400, 14)) {
    for (int v = 0; v < g.order(); ++v) {
      EXPECT_EQ(is_free_vertex(g, v), is_free_vertex_pairwise(g, v));
      if (g.degree(v) <= 1) EXPECT_TRUE(is_free_vertex(g, v));
    }
    EXPECT_EQ(free_count(g), testing::naive_free_count(g));
    EXPECT_EQ(set_size(free_vertices(g)), free_count(g));
  }
}

TEST(InvariantProperty, DiameterMatchesFloydWarshall) {
  for (const Graph& g : connected_sample(2, 400, 20)) {
    EXPECT_EQ(diameter(g), testing::floyd_diameter(g));
    EXPECT_EQ(diameter(g) == 1, g.is_complete());
  }
}

TEST(InvariantProperty, KappaBoundsAndOracle) {
  for (const Graph& g : connected_sample(3, 300, 10)) {
    const int k = vertex_connectivity(g);
    EXPECT_LE(k, g.min_degree());
    EXPECT_GE(k, 1);
    EXPECT_EQ(k, brute_force_kappa(g)) << to_string(analyze(g).delta);
  }
}

TEST(InvariantProperty, InequalityOnRandomGraphs) {
  for (const Graph& g : connected_sample(4, 600, 24)) {
    if (g.is_complete()) continue;
    const DeltaTriple t = delta(g);
    EXPECT_LE(t.phi(), g.order() + 2);
    EXPECT_GE(t.phi(), 3);
    EXPECT_GE(t.d, 2);
  }
}

TEST(InvariantProperty, LocalConnectivityMatchesPathSearch) {
  for (const Graph& g : connected_sample(5, 150, 7)) {
    for (int u = 0; u < g.order(); ++u) {
      for (int v = u + 1; v < g.order(); ++v) {
        if (g.has_edge(u, v)) continue;
        EXPECT_EQ(local_connectivity(g, u, v), testing::disjoint_paths_exhaustive(g, u, v));
      }
    }
  }
}

}  // namespace
}  // namespace graphdelta

#include <gtest/gtest.h>

#include "neutralize/baseline.hpp"
#include "neutralize/families.hpp"
#include "oracles/brute_force.hpp"
#include "test_support.hpp"

namespace neutralize {
namespace {

using testing::path_graph;

Weight cycle_weight(const Graph& g, const std::vector<EdgeId>& cycle) {
  Weight total = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    total += g.weight(cycle[i]);
    EXPECT_EQ(g.dst(cycle[i]), g.src(cycle[(i + 1) % cycle.size()])) << "witness not closed";
  }
  return total;
}

TEST(BellmanFordTest, Examples) {
  EXPECT_EQ(bellman_ford(path_graph({5}), 0), (DistanceArray{0, 5}));
  EXPECT_EQ(bellman_ford(path_graph({-1, 1}), 0), (DistanceArray{0, -1, 0}));
  EXPECT_EQ(bellman_ford(path_graph({-1, 1}), 1), (DistanceArray{std::nullopt, 0, 1}));
}

TEST(BellmanFordTest, ReachableNegativeCycleHasWitness) {
  std::vector<Edge> edges{{0, 1, 1}, {1, 2, -3}, {2, 3, 1}, {3, 1, 1}, {3, 4, 0}};
  Graph g(5, edges);
  try {
    bellman_ford(g, 0);
    FAIL() << "expected NegativeCycleError";
  } catch (const NegativeCycleError& e) {
    EXPECT_LT(cycle_weight(g, e.witness()), 0);
  }
  // Unreachable from vertex 4, so no error there.
  EXPECT_EQ(bellman_ford(g, 4), (DistanceArray{std::nullopt, std::nullopt, std::nullopt,
                                               std::nullopt, 0}));
}

TEST(BellmanFordTest, SelfLoop) {
  std::vector<Edge> edges{{0, 0, -1}};
  EXPECT_THROW(bellman_ford(Graph(1, edges), 0), NegativeCycleError);
}

TEST(BellmanFordTest, SourceOutOfRange) {
  EXPECT_THROW(bellman_ford(path_graph({1}), 2), RangeError);
}

TEST(DijkstraTest, Triangle) {
  std::vector<Edge> edges{{0, 1, 2}, {1, 2, 3}, {0, 2, 10}};
  Graph g(3, edges);
  const DistanceArray expected{0, 2, 5};
  EXPECT_EQ(dijkstra(g, 0), expected);
  EXPECT_TRUE(testing::same_distances(oracle::distances(g, 0), expected));
}

TEST(DijkstraTest, EmptyGraph) {
  EXPECT_EQ(dijkstra(Graph(3, {}), 0), (DistanceArray{0, std::nullopt, std::nullopt}));
}

TEST(DijkstraTest, RejectsNegativeWeight) {
  EXPECT_THROW(dijkstra(path_graph({3, -1}), 0), PreconditionError);
}

TEST(DijkstraTest, AgreesWithBellmanFordOnNonNegativeGraphs) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 60));
    const std::size_t m = static_cast<std::size_t>(rng.uniform(0, Weight(std::min<std::size_t>(
                                                                     5 * n, n * (n - 1)))));
    Graph g = gen_random_graph(n, m, 20, rng.next(), 0);
    const VertexId s = static_cast<VertexId>(rng.uniform(0, Weight(n - 1)));
    EXPECT_EQ(dijkstra(g, s), bellman_ford(g, s));
  }
}

TEST(JohnsonPotentialTest, Examples) {
  EXPECT_EQ(johnson_potential(path_graph({3, 0, 8})), Potential::zero(4));
  EXPECT_EQ(johnson_potential(path_graph({-1, 1})), Potential({0, -1, 0}));
  EXPECT_EQ(oracle::johnson(path_graph({-1, 1})), (std::vector<Weight>{0, -1, 0}));
}

TEST(JohnsonPotentialTest, NegativeCycleAnywhere) {
  std::vector<Edge> edges{{1, 2, -1}, {2, 1, 0}};
  try {
    johnson_potential(Graph(3, edges));
    FAIL();
  } catch (const NegativeCycleError& e) {
    EXPECT_EQ(e.witness().size(), 2u);
  }
}

TEST(JohnsonPotentialTest, MatchesBruteForceAndNeutralizes) {
  Rng rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 7));
    const std::size_t m = static_cast<std::size_t>(rng.uniform(0, Weight(n * (n - 1))));
    Graph g = gen_random_graph(n, m, 4, rng.next(), 6);
    const Potential phi = johnson_potential(g);
    EXPECT_EQ(phi.values, oracle::johnson(g));
    EXPECT_TRUE(is_neutralizing(g, phi));
    for (Weight v : phi.values) EXPECT_LE(v, 0);
  }
}

TEST(BellmanFordTest, MatchesBruteForce) {
  Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 7));
    const std::size_t m = static_cast<std::size_t>(rng.uniform(0, Weight(n * (n - 1))));
    Graph g = gen_random_graph(n, m, 4, rng.next(), 6);
    const VertexId s = static_cast<VertexId>(rng.uniform(0, Weight(n - 1)));
    EXPECT_TRUE(testing::same_distances(bellman_ford(g, s), oracle::distances(g, s)));
  }
}

}  // namespace
}  // namespace neutralize

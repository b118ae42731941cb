#include <gtest/gtest.h>

#include "neutralize/elmasry.hpp"
#include "neutralize/families.hpp"
#include "neutralize/snakes.hpp"
#include "test_support.hpp"

namespace neutralize {
namespace {

using testing::path_graph;

TEST(MinSnakeLengthTest, GnStartsAtOne) {
  for (unsigned n : {1u, 2u, 7u, 20u}) EXPECT_EQ(min_snake_length(gen_gn(n).graph), 1u);
}

TEST(MinSnakeLengthTest, NoNegativeEdge) {
  EXPECT_EQ(min_snake_length(path_graph({1, 0, 3})), std::nullopt);
}

TEST(MinSnakeLengthTest, CountsZeroTail) {
  EXPECT_EQ(min_snake_length(path_graph({0, 0, -1})), 3u);
  EXPECT_EQ(min_snake_length(path_graph({0, -1, 0, -1})), 2u);
  EXPECT_EQ(min_snake_length(path_graph({5, 0, -1})), 2u);
}

TEST(MinSnakeLengthTest, ZeroCycleRejected) {
  std::vector<Edge> edges{{0, 1, 0}, {1, 0, 0}, {1, 2, -1}};
  EXPECT_THROW(min_snake_length(Graph(3, edges)), ZeroCycleError);
  EXPECT_THROW(enumerate_snakes(Graph(3, edges)), ZeroCycleError);
}

TEST(MinSnakeLengthTest, G20StaysAtTwo) {
  const auto trace = run_to_fixpoint(gen_gn(20).graph);
  ASSERT_GE(trace.iterations.size(), 18u);
  for (std::size_t j = 0; j < 18; ++j) {
    EXPECT_EQ(trace.iterations[j].min_snake_length_after, 2u) << "after iteration " << j + 1;
  }
}

TEST(EnumerateSnakesTest, G1HasTwoLengthOneSnakes) {
  const auto gn = gen_gn(1);
  const auto out = enumerate_snakes(gn.graph);
  EXPECT_FALSE(out.truncated);
  ASSERT_EQ(out.snakes.size(), 2u);
  EXPECT_EQ(out.snakes[0], (Snake{{}, 0}));  // x_0 → x_1
  EXPECT_EQ(out.snakes[1], (Snake{{}, 2}));  // y_0 → y_1
}

TEST(EnumerateSnakesTest, Paths) {
  auto one = enumerate_snakes(path_graph({0, 0, -1}));
  ASSERT_EQ(one.snakes.size(), 1u);
  EXPECT_EQ(one.snakes[0], (Snake{{0, 1}, 2}));
  EXPECT_EQ(one.snakes[0].length(), 3u);

  auto two = enumerate_snakes(path_graph({0, -1, 0, -1}));
  ASSERT_EQ(two.snakes.size(), 2u);
  EXPECT_EQ(two.snakes[0], (Snake{{0}, 1}));
  EXPECT_EQ(two.snakes[1], (Snake{{2}, 3}));
}

TEST(EnumerateSnakesTest, ConvergingChainsAreTruncated) {
  // Ladder of k diamonds of zero edges: 2^k tails into the head.
  const std::size_t k = 12;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    const VertexId a = 3 * i, b = 3 * i + 1, c = 3 * i + 2, next = 3 * (i + 1);
    edges.push_back({a, b, 0});
    edges.push_back({a, c, 0});
    edges.push_back({b, next, 0});
    edges.push_back({c, next, 0});
  }
  const VertexId last = 3 * k;
  edges.push_back({last, last + 1, -1});
  Graph g(last + 2, edges);
  EXPECT_EQ(enumerate_snakes(g).snakes.size(), std::size_t{1} << k);
  const auto capped = enumerate_snakes(g, 100);
  EXPECT_TRUE(capped.truncated);
  EXPECT_EQ(capped.snakes.size(), 100u);
}

TEST(SnakeProperty, EnumerationAgreesWithMinimum) {
  Rng rng(41);
  int with_negative = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 14));
    const Graph g = testing::random_dag(rng, n, 35, -2, 2);
    const auto min_len = min_snake_length(g);
    const auto all = enumerate_snakes(g);
    ASSERT_FALSE(all.truncated);
    if (g.negative_edge_count() == 0) {
      EXPECT_FALSE(min_len.has_value());
      EXPECT_TRUE(all.snakes.empty());
      continue;
    }
    ++with_negative;
    ASSERT_TRUE(min_len.has_value());
    EXPECT_GE(*min_len, 1u);

    bool some_head_without_zero_in = false;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (g.weight(e) >= 0) continue;
      bool zero_in = false;
      for (EdgeId f : g.in_edges(g.src(e))) zero_in |= g.weight(f) == 0;
      some_head_without_zero_in |= !zero_in;
    }
    EXPECT_EQ(*min_len == 1, some_head_without_zero_in);

    std::size_t shortest = SIZE_MAX;
    for (const Snake& s : all.snakes) {
      shortest = std::min(shortest, s.length());
      EXPECT_LT(g.weight(s.head), 0);
      VertexId at = s.tail.empty() ? g.src(s.head) : g.src(s.tail.front());
      for (EdgeId f : g.in_edges(at)) EXPECT_NE(g.weight(f), 0) << "tail is not inclusion-maximal";
      for (EdgeId t : s.tail) {
        EXPECT_EQ(g.weight(t), 0);
        EXPECT_EQ(g.src(t), at);
        at = g.dst(t);
      }
      EXPECT_EQ(at, g.src(s.head));
    }
    EXPECT_EQ(shortest, *min_len);
  }
  EXPECT_GT(with_negative, 100);
}

}  // namespace
}  // namespace neutralize

#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "gds/centrality.hpp"
#include "gds/generators.hpp"
#include "oracles.hpp"

namespace gds {
namespace {

Graph build(std::initializer_list<EdgeRow> r) {
  std::vector<EdgeRow> v(r);
  return from_edge_list(v);
}

Graph path3() { return build({{"a", "b", 1}, {"b", "c", 1}}); }
Graph star3() { return build({{"c", "x", 1}, {"c", "y", 1}, {"c", "z", 1}}); }
Graph cycle(int n) {
  std::vector<Edge> e;
  for (NodeId i = 0; i < NodeId(n); ++i) e.push_back({i, NodeId((i + 1) % n), 1.0});
  return Graph::from_edges(numbered_names(n), e);
}

TEST(PageRank, TriangleIsUniform) {
  const auto pr = pagerank(cycle(3));
  for (double x : pr.scores) EXPECT_NEAR(x, 1.0 / 3.0, 1e-12);
}

TEST(PageRank, SingleEdgeIsHalf) {
  const auto pr = pagerank(build({{"a", "b", 1}}));
  EXPECT_NEAR(pr[0], 0.5, 1e-12);
  EXPECT_NEAR(pr[1], 0.5, 1e-12);
}

TEST(PageRank, PathMatchesDenseOracle) {
  const auto g = path3();
  const auto pr = pagerank(g, {0.85, 20, 0.0});
  EXPECT_EQ(pr.iterations, 20);
  const auto expected = oracle::dense_pagerank(g, 0.85, 20);
  for (NodeId u = 0; u < 3; ++u) EXPECT_NEAR(pr[u], expected[u], 1e-9);
  // Frozen from a numpy run of the same 20 iterations (not yet converged;
  // the fixed point is 18/37).
  EXPECT_NEAR(pr[1], 0.48055034, 1e-8);
  EXPECT_NEAR(pr[0], 0.25972483, 1e-8);
}

TEST(PageRank, IsolatedNodesKeepMassAndFloor) {
  std::vector<Edge> e = {{0, 1, 1}, {1, 2, 1}};
  const auto g = Graph::from_edges(numbered_names(5), e);
  const auto pr = pagerank(g);
  EXPECT_NEAR(std::accumulate(pr.scores.begin(), pr.scores.end(), 0.0), 1.0, 1e-9);
  for (double x : pr.scores) EXPECT_GE(x, 0.15 / 5 - 1e-15);
  const auto expected = oracle::dense_pagerank(g, 0.85, 20);
  for (NodeId u = 0; u < 5; ++u) EXPECT_NEAR(pr[u], expected[u], 1e-12);
}

TEST(PageRank, ToleranceStopsEarly) {
  PageRankConfig cfg;
  cfg.max_iterations = 1000;
  cfg.tolerance = 1e-10;
  const auto pr = pagerank(erdos_renyi(40, 0.2, 2), cfg);
  EXPECT_LT(pr.iterations, 1000);
}

TEST(PageRank, Errors) {
  EXPECT_THROW(pagerank(Graph{}), DomainError);
  PageRankConfig bad;
  bad.damping = 1.0;
  EXPECT_THROW(pagerank(path3(), bad), DomainError);
}

TEST(PageRank, WeightedVariantOnView) {
  // a-b heavy, b-c light: weighted walk from b prefers a.
  const auto g = build({{"a", "b", 9}, {"b", "c", 1}});
  std::vector<NodeId> all = {0, 1, 2};
  PageRankConfig cfg;
  cfg.use_weights = true;
  const auto weighted = pagerank(project(g, all, true), cfg);
  EXPECT_GT(weighted[0], weighted[2]);
  const auto unit = pagerank(project(g, all, false), cfg);
  EXPECT_NEAR(unit[0], unit[2], 1e-12);
}

TEST(Betweenness, PathAndStar) {
  const auto p = betweenness(path3());
  EXPECT_DOUBLE_EQ(p[1], 1.0);
  EXPECT_DOUBLE_EQ(p[0], 0.0);
  EXPECT_DOUBLE_EQ(p[2], 0.0);
  const auto g = star3();
  const auto s = betweenness(g);
  EXPECT_DOUBLE_EQ(s[*g.find("c")], 3.0);
  EXPECT_DOUBLE_EQ(s[*g.find("x")], 0.0);
}

TEST(Betweenness, RandomGraphsMatchPairCounting) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = erdos_renyi(20, 0.15, seed);
    const auto bc = betweenness(g);
    const auto expected = oracle::pair_count_betweenness(g);
    for (NodeId u = 0; u < g.node_count(); ++u) EXPECT_NEAR(bc[u], expected[u], 1e-9) << "seed " << seed;
  }
}

TEST(Betweenness, NormalizedVariant) {
  const auto g = star3();
  const auto s = betweenness(g, true);
  EXPECT_DOUBLE_EQ(s[*g.find("c")], 1.0);
}

TEST(Centrality, VertexTransitiveGraphsAreConstant) {
  for (const auto& g : {cycle(7), erdos_renyi(6, 1.0, 0)}) {
    const auto pr = pagerank(g);
    const auto bc = betweenness(g);
    for (NodeId u = 1; u < g.node_count(); ++u) {
      EXPECT_NEAR(pr[u], pr[0], 1e-12);
      EXPECT_NEAR(bc[u], bc[0], 1e-12);
    }
  }
}

TEST(Centrality, LeavesHaveZeroBetweenness) {
  const auto g = random_connected(30, 0.05, 5, 12);
  const auto bc = betweenness(g);
  for (NodeId u = 0; u < g.node_count(); ++u)
    if (g.degree(u) == 1) EXPECT_EQ(bc[u], 0.0);
}

TEST(Centrality, WeightScalingKeepsRanking) {
  const auto g = random_connected(25, 0.1, 7, 4);
  auto edges = g.edges();
  for (auto& e : edges) e.weight *= 3.5;
  const auto scaled = Graph::from_edges(g.names(), edges);
  EXPECT_EQ(top_k(g, pagerank(g), 25), top_k(scaled, pagerank(scaled), 25));
  EXPECT_EQ(top_k(g, betweenness(g), 25), top_k(scaled, betweenness(scaled), 25));
}

TEST(TopK, OrderAndTies) {
  const auto g = build({{"a", "b", 1}, {"c", "d", 1}});
  ScoreMap s{{1.0, 2.0, 0.5, 0.5}};
  const auto top = top_k(g, s, 1);
  ASSERT_EQ(top.size(), 1u);
  EXPECT_EQ(top[0].node, "b");
  ScoreMap flat{{1.0, 1.0, 1.0, 1.0}};
  const auto two = top_k(g, flat, 2);
  EXPECT_EQ(two[0].node, "a");
  EXPECT_EQ(two[1].node, "b");
  EXPECT_EQ(top_k(g, s, 10).size(), 4u);
  EXPECT_THROW(top_k(g, s, 0), DomainError);
}

TEST(TopK, FullSortMatchesComparisonSort) {
  const auto g = erdos_renyi(60, 0.05, 1);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> small(0, 9);
  ScoreMap s;
  for (NodeId u = 0; u < g.node_count(); ++u) s.scores.push_back(small(rng));
  std::vector<std::pair<double, std::string>> ref;
  for (NodeId u = 0; u < g.node_count(); ++u) ref.emplace_back(-s[u], g.name(u));
  std::sort(ref.begin(), ref.end());
  const auto got = top_k(g, s, g.node_count());
  ASSERT_EQ(got.size(), ref.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    EXPECT_EQ(got[i].node, ref[i].second);
    EXPECT_EQ(got[i].score, -ref[i].first);
  }
}

}  // namespace
}  // namespace gds

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "gds/generators.hpp"
#include "gds/traversal.hpp"
#include "oracles.hpp"

namespace gds {
namespace {

Graph path(int n, double w = 1.0) {
  std::vector<Edge> e;
  for (NodeId i = 0; i + 1 < NodeId(n); ++i) e.push_back({i, i + 1, w});
  return Graph::from_edges(numbered_names(n), e);
}

TEST(Bfs, DepthLimitOnPath) {
  const std::vector<EdgeRow> r = {{"a", "b", 1}, {"b", "c", 1}, {"c", "d", 1}, {"d", "e", 1}};
  const auto g = from_edge_list(r);
  BfsTermination t;
  t.max_depth = 2;
  const auto res = bfs(g, *g.find("a"), t);
  std::vector<std::string> names;
  for (auto u : res.order) names.push_back(g.name(u));
  EXPECT_EQ(names, (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(res.terminated_by, BfsStop::depth_limit);
  EXPECT_EQ(to_string(res.terminated_by), "depth_limit");
}

TEST(Bfs, ExhaustsWithoutLimits) {
  const auto res = bfs(path(5), 2);
  EXPECT_EQ(res.order, (std::vector<NodeId>{2, 1, 3, 0, 4}));
  EXPECT_EQ(res.depth, (std::vector<std::size_t>{0, 1, 1, 2, 2}));
  EXPECT_EQ(res.terminated_by, BfsStop::exhausted);
}

TEST(Bfs, StopsAtTarget) {
  BfsTermination t;
  t.targets = {3};
  const auto res = bfs(path(6), 0, t);
  EXPECT_EQ(res.order.back(), 3u);
  EXPECT_EQ(res.order.size(), 4u);
  EXPECT_EQ(res.terminated_by, BfsStop::target_hit);
  t.targets = {0};
  EXPECT_EQ(bfs(path(6), 0, t).order.size(), 1u);
}

TEST(Bfs, CostBudget) {
  BfsTermination t;
  t.max_cost = 5.0;
  const auto res = bfs(path(10, 2.0), 0, t);
  EXPECT_EQ(res.order.size(), 3u);
  EXPECT_DOUBLE_EQ(res.cost, 4.0);
  EXPECT_EQ(res.terminated_by, BfsStop::cost_budget);
  t.max_cost = -1.0;
  EXPECT_THROW(bfs(path(3), 0, t), DomainError);
}

TEST(Bfs, InvalidStart) { EXPECT_THROW(bfs(path(3), 3), DomainError); }

TEST(Bfs, DepthsMatchHopDistances) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = erdos_renyi(40, 0.06, seed);
    const auto hops = oracle::all_pairs_hops(g);
    const auto res = bfs(g, 0);
    std::set<NodeId> seen(res.order.begin(), res.order.end());
    EXPECT_EQ(seen.size(), res.order.size());
    for (std::size_t i = 0; i < res.order.size(); ++i) {
      EXPECT_EQ(static_cast<long long>(res.depth[i]), hops[0][res.order[i]]);
      if (i > 0) {
        EXPECT_LE(res.depth[i - 1], res.depth[i]);
      }
    }
    std::size_t reachable = 0;
    for (auto d : hops[0]) reachable += d != oracle::kInf;
    EXPECT_EQ(res.order.size(), reachable);

    BfsTermination t;
    t.max_depth = 2;
    const auto limited = bfs(g, 0, t);
    std::size_t within = 0;
    for (auto d : hops[0]) within += d <= 2;
    EXPECT_EQ(limited.order.size(), within);
    for (auto d : limited.depth) EXPECT_LE(d, 2u);
  }
}

TEST(Prim, Triangle) {
  std::vector<Edge> e = {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}};
  const auto t = prim_mst(Graph::from_edges(numbered_names(3), e), 0);
  EXPECT_DOUBLE_EQ(t.total_weight, 3.0);
  ASSERT_EQ(t.edges.size(), 2u);
}

TEST(Prim, TreeReturnsAllEdges) {
  const auto g = path(8, 2.5);
  const auto t = prim_mst(g, 4);
  EXPECT_EQ(t.edges.size(), 7u);
  EXPECT_DOUBLE_EQ(t.total_weight, 17.5);
}

TEST(Prim, MatchesKruskal) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = random_connected(30, 0.1, 10, seed);
    const auto t = prim_mst(g, 0);
    EXPECT_NEAR(t.total_weight, oracle::kruskal_weight(g, 0), 1e-9) << "seed " << seed;
    EXPECT_EQ(t.edges.size(), g.node_count() - 1);
    std::set<NodeId> reached = {0};
    for (const auto& e : t.edges) {
      EXPECT_TRUE(reached.contains(e.u));
      EXPECT_TRUE(reached.insert(e.v).second);
      EXPECT_EQ(*g.edge_weight(e.u, e.v), e.weight);
    }
  }
}

TEST(Prim, SpansOnlyTheStartComponent) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = erdos_renyi(40, 0.04, seed);
    const auto comp = oracle::components(g);
    const auto size = std::count(comp.begin(), comp.end(), comp[5]);
    const auto t = prim_mst(g, 5);
    EXPECT_EQ(static_cast<long>(t.edges.size()), size - 1);
    EXPECT_NEAR(t.total_weight, oracle::kruskal_weight(g, 5), 1e-9);
  }
}

TEST(Prim, WeightScalingScalesTotal) {
  const auto g = random_connected(25, 0.2, 9, 6);
  auto edges = g.edges();
  for (auto& e : edges) e.weight *= 4.0;
  const auto scaled = Graph::from_edges(g.names(), edges);
  const auto a = prim_mst(g, 0), b = prim_mst(scaled, 0);
  EXPECT_DOUBLE_EQ(b.total_weight, 4.0 * a.total_weight);
  ASSERT_EQ(a.edges.size(), b.edges.size());
  for (std::size_t i = 0; i < a.edges.size(); ++i) EXPECT_EQ(a.edges[i].v, b.edges[i].v);
}

}  // namespace
}  // namespace gds

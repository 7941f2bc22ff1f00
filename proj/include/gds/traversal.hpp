#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <set>
#include <string_view>
#include <tuple>
#include <vector>

#include "gds/errors.hpp"
#include "gds/graph.hpp"

namespace gds {

struct BfsTermination {
  std::set<NodeId> targets;
  std::optional<std::size_t> max_depth;
  // Budget on the summed weight of tree edges used to reach visited nodes.
  std::optional<double> max_cost;
};

enum class BfsStop { exhausted, target_hit, depth_limit, cost_budget };

inline std::string_view to_string(BfsStop s) {
  switch (s) {
    case BfsStop::exhausted: return "exhausted";
    case BfsStop::target_hit: return "target_hit";
    case BfsStop::depth_limit: return "depth_limit";
    case BfsStop::cost_budget: return "cost_budget";
  }
  return "unknown";
}

struct BfsResult {
  std::vector<NodeId> order;
  std::vector<std::size_t> depth;  // parallel to `order`
  BfsStop terminated_by = BfsStop::exhausted;
  double cost = 0.0;
};

/// Queue-based breadth-first search from `start`.
///
/// A node counts as visited when it is dequeued. Before visiting, the
/// traversal stops if the node lies deeper than max_depth or if its tree
/// edge would push the spent cost past max_cost. It also stops right after
/// visiting a target. Neighbours are enqueued in ascending id order.
template <GraphLike G>
BfsResult bfs(const G& g, NodeId start, const BfsTermination& term = {}) {
  check_node(g, start);
  if (term.max_cost && *term.max_cost < 0.0) throw DomainError("bfs: max_cost must be non-negative");

  struct Entry {
    NodeId node;
    std::size_t depth;
    double edge_weight;
  };
  BfsResult r;
  std::vector<char> discovered(g.node_count(), 0);
  std::queue<Entry> queue;
  queue.push({start, 0, 0.0});
  discovered[start] = 1;

  while (!queue.empty()) {
    const Entry e = queue.front();
    queue.pop();
    if (term.max_depth && e.depth > *term.max_depth) {
      r.terminated_by = BfsStop::depth_limit;
      return r;
    }
    if (term.max_cost && r.cost + e.edge_weight > *term.max_cost) {
      r.terminated_by = BfsStop::cost_budget;
      return r;
    }
    r.cost += e.edge_weight;
    r.order.push_back(e.node);
    r.depth.push_back(e.depth);
    if (term.targets.contains(e.node)) {
      r.terminated_by = BfsStop::target_hit;
      return r;
    }
    for (const auto& nb : g.neighbors(e.node)) {
      if (!discovered[nb.id]) {
        discovered[nb.id] = 1;
        queue.push({nb.id, e.depth + 1, nb.weight});
      }
    }
  }
  r.terminated_by = BfsStop::exhausted;
  return r;
}

struct SpanningTree {
  std::vector<Edge> edges;  // (tree node, newly reached node, weight), in insertion order
  double total_weight = 0.0;
};

/// Prim's algorithm over the component of `start`. Candidate edges are
/// ordered by (weight, smaller endpoint, larger endpoint), which makes the
/// tree unique even with equal weights.
template <GraphLike G>
SpanningTree prim_mst(const G& g, NodeId start) {
  check_node(g, start);
  using Key = std::tuple<double, NodeId, NodeId, NodeId>;  // weight, lo, hi, target
  std::priority_queue<Key, std::vector<Key>, std::greater<>> heap;
  std::vector<char> in_tree(g.node_count(), 0);

  auto grow = [&](NodeId u) {
    in_tree[u] = 1;
    for (const auto& nb : g.neighbors(u)) {
      if (!in_tree[nb.id]) heap.emplace(nb.weight, std::min(u, nb.id), std::max(u, nb.id), nb.id);
    }
  };

  SpanningTree t;
  grow(start);
  while (!heap.empty()) {
    const auto [w, lo, hi, target] = heap.top();
    heap.pop();
    if (in_tree[target]) continue;
    const NodeId from = target == lo ? hi : lo;
    t.edges.push_back({from, target, w});
    t.total_weight += w;
    grow(target);
  }
  return t;
}

}  // namespace gds

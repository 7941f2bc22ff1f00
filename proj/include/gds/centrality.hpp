#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "gds/errors.hpp"
#include "gds/graph.hpp"

namespace gds {

struct PageRankConfig {
  double damping = 0.85;
  int max_iterations = 20;
  // 0 runs exactly max_iterations; > 0 stops once the L1 change drops to it.
  double tolerance = 0.0;
  // Transition probabilities proportional to edge weight instead of uniform.
  bool use_weights = false;
};

struct ScoreMap {
  std::vector<double> scores;
  int iterations = 0;

  std::size_t size() const noexcept { return scores.size(); }
  double operator[](NodeId u) const noexcept { return scores[u]; }
};

/// Power-iteration PageRank on the undirected graph, each edge read as two
/// arcs. Mass held by isolated nodes is spread uniformly every iteration.
template <GraphLike G>
ScoreMap pagerank(const G& g, const PageRankConfig& cfg = {}) {
  const std::size_t n = g.node_count();
  if (n == 0) throw DomainError("pagerank: empty graph");
  if (!(cfg.damping > 0.0 && cfg.damping < 1.0)) throw DomainError("pagerank: damping must be in (0,1)");
  if (cfg.max_iterations < 1) throw DomainError("pagerank: max_iterations must be positive");
  if (cfg.tolerance < 0.0) throw DomainError("pagerank: tolerance must be non-negative");

  const double d = cfg.damping;
  const double inv_n = 1.0 / static_cast<double>(n);

  std::vector<double> out_weight(n, 0.0);
  for (NodeId u = 0; u < n; ++u) {
    if (cfg.use_weights) {
      for (const auto& nb : g.neighbors(u)) out_weight[u] += nb.weight;
    } else {
      out_weight[u] = static_cast<double>(g.degree(u));
    }
  }

  ScoreMap result;
  auto& rank = result.scores;
  rank.assign(n, inv_n);
  std::vector<double> next(n);
  for (int it = 0; it < cfg.max_iterations; ++it) {
    double dangling = 0.0;
    for (NodeId u = 0; u < n; ++u) {
      if (out_weight[u] == 0.0) dangling += rank[u];
    }
    const double base = (1.0 - d) * inv_n + d * dangling * inv_n;
    for (NodeId u = 0; u < n; ++u) {
      double acc = 0.0;
      for (const auto& nb : g.neighbors(u)) {
        const double share = cfg.use_weights ? nb.weight : 1.0;
        acc += rank[nb.id] * share / out_weight[nb.id];
      }
      next[u] = base + d * acc;
    }
    double change = 0.0;
    for (NodeId u = 0; u < n; ++u) change += std::abs(next[u] - rank[u]);
    rank.swap(next);
    result.iterations = it + 1;
    if (cfg.tolerance > 0.0 && change <= cfg.tolerance) break;
  }
  return result;
}

/// Brandes betweenness over unweighted shortest paths. Each unordered pair
/// {s, t} is counted once and endpoints get no credit. Scores are raw; pass
/// `normalized` to divide by (N-1)(N-2)/2.
template <GraphLike G>
ScoreMap betweenness(const G& g, bool normalized = false) {
  const std::size_t n = g.node_count();
  ScoreMap result;
  auto& bc = result.scores;
  bc.assign(n, 0.0);

  std::vector<NodeId> stack;
  stack.reserve(n);
  std::vector<std::vector<NodeId>> preds(n);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<long long> dist(n);
  std::deque<NodeId> queue;

  for (NodeId s = 0; s < n; ++s) {
    stack.clear();
    for (NodeId v = 0; v < n; ++v) {
      preds[v].clear();
      sigma[v] = 0.0;
      delta[v] = 0.0;
      dist[v] = -1;
    }
    sigma[s] = 1.0;
    dist[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      const NodeId v = queue.front();
      queue.pop_front();
      stack.push_back(v);
      for (const auto& nb : g.neighbors(v)) {
        const NodeId w = nb.id;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }
    while (!stack.empty()) {
      const NodeId w = stack.back();
      stack.pop_back();
      for (NodeId v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) bc[w] += delta[w];
    }
  }

  for (auto& x : bc) x /= 2.0;
  if (normalized && n > 2) {
    const double pairs = static_cast<double>(n - 1) * static_cast<double>(n - 2) / 2.0;
    for (auto& x : bc) x /= pairs;
  }
  return result;
}

struct RankedNode {
  std::string node;
  double score;

  friend bool operator==(const RankedNode&, const RankedNode&) = default;
};

/// The k highest scores, descending; equal scores ordered by node name.
template <GraphLike G>
std::vector<RankedNode> top_k(const G& g, const ScoreMap& s, std::size_t k) {
  if (k < 1) throw DomainError("top_k: k must be at least 1");
  if (s.size() != g.node_count()) throw DomainError("top_k: score map does not match graph");
  std::vector<NodeId> ids(s.size());
  for (NodeId u = 0; u < ids.size(); ++u) ids[u] = u;
  auto before = [&](NodeId a, NodeId b) {
    if (s[a] != s[b]) return s[a] > s[b];
    return g.name(a) < g.name(b);
  };
  const std::size_t take = std::min(k, ids.size());
  std::partial_sort(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(take), ids.end(), before);
  std::vector<RankedNode> out;
  out.reserve(take);
  for (std::size_t i = 0; i < take; ++i) out.push_back({std::string(g.name(ids[i])), s[ids[i]]});
  return out;
}

}  // namespace gds

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gds/errors.hpp"
#include "gds/graph.hpp"

namespace gds {

/// Per-node community labels, canonical: 0..community_count-1 numbered in
/// order of first appearance by node id.
struct CommunityAssignment {
  std::vector<std::uint32_t> labels;
  std::size_t community_count = 0;
  // Sweeps (label propagation) or aggregation levels (Louvain) performed.
  int iterations = 0;
  bool converged = true;

  bool same(NodeId u, NodeId v) const noexcept { return labels[u] == labels[v]; }

  // Node ids per community, in label order.
  std::vector<std::vector<NodeId>> members() const {
    std::vector<std::vector<NodeId>> out(community_count);
    for (NodeId u = 0; u < labels.size(); ++u) out[labels[u]].push_back(u);
    return out;
  }
};

template <class Label>
CommunityAssignment canonicalize(const std::vector<Label>& raw) {
  CommunityAssignment a;
  a.labels.resize(raw.size());
  std::map<Label, std::uint32_t> seen;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto [it, inserted] = seen.emplace(raw[i], static_cast<std::uint32_t>(seen.size()));
    a.labels[i] = it->second;
  }
  a.community_count = seen.size();
  return a;
}

struct LpConfig {
  int max_iterations = 100;
  std::uint64_t seed = 0;
};

/// Asynchronous label propagation.
///
/// Every sweep visits the nodes in a freshly shuffled order. A node keeps
/// its label if it is already one of the most frequent labels among its
/// neighbours; otherwise it takes one of those modal labels, chosen by a
/// seeded draw. Stops after the first sweep that changes nothing.
template <GraphLike G>
CommunityAssignment label_propagation(const G& g, const LpConfig& cfg = {}) {
  if (cfg.max_iterations < 1) throw DomainError("label_propagation: max_iterations must be positive");
  const std::size_t n = g.node_count();
  std::vector<std::uint32_t> label(n);
  std::iota(label.begin(), label.end(), 0u);
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});

  std::mt19937_64 rng(cfg.seed);
  std::vector<std::uint32_t> count(n, 0);
  std::vector<std::uint32_t> touched;
  std::vector<std::uint32_t> modal;

  int sweeps = 0;
  bool converged = false;
  while (sweeps < cfg.max_iterations) {
    ++sweeps;
    std::shuffle(order.begin(), order.end(), rng);
    bool changed = false;
    for (NodeId u : order) {
      if (g.degree(u) == 0) continue;
      touched.clear();
      std::uint32_t best = 0;
      for (const auto& nb : g.neighbors(u)) {
        const auto l = label[nb.id];
        if (count[l]++ == 0) touched.push_back(l);
        best = std::max(best, count[l]);
      }
      modal.clear();
      for (auto l : touched) {
        if (count[l] == best) modal.push_back(l);
      }
      const bool keep = count[label[u]] == best;
      for (auto l : touched) count[l] = 0;
      if (keep) continue;
      std::sort(modal.begin(), modal.end());
      std::uniform_int_distribution<std::size_t> pick(0, modal.size() - 1);
      label[u] = modal[pick(rng)];
      changed = true;
    }
    if (!changed) {
      converged = true;
      break;
    }
  }
  auto a = canonicalize(label);
  a.iterations = sweeps;
  a.converged = converged;
  return a;
}

/// Weighted modularity at resolution 1.
template <GraphLike G>
double modularity(const G& g, const CommunityAssignment& a) {
  const std::size_t n = g.node_count();
  if (a.labels.size() != n) throw DomainError("modularity: assignment does not cover the graph");
  double two_m = 0.0;
  std::vector<double> inside(a.community_count, 0.0);
  std::vector<double> total(a.community_count, 0.0);
  for (NodeId u = 0; u < n; ++u) {
    const auto c = a.labels[u];
    if (c >= a.community_count) throw DomainError("modularity: label out of range");
    for (const auto& nb : g.neighbors(u)) {
      two_m += nb.weight;
      total[c] += nb.weight;
      if (a.labels[nb.id] == c) inside[c] += nb.weight;
    }
  }
  if (two_m == 0.0) throw DomainError("modularity: graph has no edges");
  double q = 0.0;
  for (std::size_t c = 0; c < a.community_count; ++c) {
    const double frac = total[c] / two_m;
    q += inside[c] / two_m - frac * frac;
  }
  return q;
}

namespace detail {

// Weighted multigraph used between Louvain levels. `loop[i]` holds the
// weight internal to super-node i, counted from both endpoints.
struct LouvainLevel {
  std::vector<std::vector<std::pair<std::uint32_t, double>>> adj;
  std::vector<double> loop;
};

// One local-moving phase. Returns true if any node changed community.
inline bool louvain_local_moves(const LouvainLevel& lv, double two_m, std::mt19937_64& rng,
                                std::vector<std::uint32_t>& comm) {
  const std::size_t n = lv.adj.size();
  std::vector<double> strength(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    strength[i] = lv.loop[i];
    for (const auto& [j, w] : lv.adj[i]) strength[i] += w;
  }
  comm.resize(n);
  std::iota(comm.begin(), comm.end(), 0u);
  std::vector<double> total = strength;

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<double> link(n, 0.0);
  std::vector<char> seen(n, 0);
  std::vector<std::uint32_t> touched;
  constexpr double kEps = 1e-12;
  bool any = false;
  for (bool moved = true; moved;) {
    moved = false;
    for (auto i : order) {
      const auto own = comm[i];
      touched.clear();
      touched.push_back(own);
      seen[own] = 1;
      for (const auto& [j, w] : lv.adj[i]) {
        const auto c = comm[j];
        if (!seen[c]) {
          seen[c] = 1;
          touched.push_back(c);
        }
        link[c] += w;
      }
      total[own] -= strength[i];
      const double k = strength[i];
      auto gain = [&](std::uint32_t c) { return link[c] - total[c] * k / two_m; };
      std::uint32_t best = own;
      double best_gain = gain(own);
      for (auto c : touched) {
        const double gc = gain(c);
        if (gc > best_gain + kEps) {
          best_gain = gc;
          best = c;
        }
      }
      total[best] += k;
      comm[i] = best;
      for (auto c : touched) {
        link[c] = 0.0;
        seen[c] = 0;
      }
      if (best != own) {
        moved = true;
        any = true;
      }
    }
  }
  return any;
}

}  // namespace detail

/// Louvain modularity maximisation: local moves followed by aggregation,
/// repeated until a level moves no node. Returns the final level only.
template <GraphLike G>
CommunityAssignment louvain(const G& g, std::uint64_t seed = 0) {
  const std::size_t n = g.node_count();
  if (g.edge_count() == 0) throw DomainError("louvain: graph has no edges");

  detail::LouvainLevel level;
  level.adj.resize(n);
  level.loop.assign(n, 0.0);
  double two_m = 0.0;
  for (NodeId u = 0; u < n; ++u) {
    for (const auto& nb : g.neighbors(u)) {
      level.adj[u].emplace_back(nb.id, nb.weight);
      two_m += nb.weight;
    }
  }

  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> node_comm(n);
  std::iota(node_comm.begin(), node_comm.end(), 0u);
  int levels = 0;
  std::vector<std::uint32_t> comm;
  while (true) {
    ++levels;
    if (!detail::louvain_local_moves(level, two_m, rng, comm)) break;

    // Renumber communities densely in order of first appearance.
    std::vector<std::uint32_t> dense(comm.size(), UINT32_MAX);
    std::uint32_t k = 0;
    for (auto& c : comm) {
      if (dense[c] == UINT32_MAX) dense[c] = k++;
      c = dense[c];
    }
    for (auto& c : node_comm) c = comm[c];

    detail::LouvainLevel next;
    next.adj.resize(k);
    next.loop.assign(k, 0.0);
    std::vector<std::map<std::uint32_t, double>> acc(k);
    for (std::size_t i = 0; i < level.adj.size(); ++i) {
      const auto ci = comm[i];
      next.loop[ci] += level.loop[i];
      for (const auto& [j, w] : level.adj[i]) {
        const auto cj = comm[j];
        if (ci == cj) {
          next.loop[ci] += w;
        } else {
          acc[ci][cj] += w;
        }
      }
    }
    for (std::uint32_t c = 0; c < k; ++c) next.adj[c].assign(acc[c].begin(), acc[c].end());
    level = std::move(next);
  }

  auto a = canonicalize(node_comm);
  a.iterations = levels;
  if (modularity(g, a) < 0.0) {
    // Never worse than putting every node in one community.
    a = canonicalize(std::vector<std::uint32_t>(n, 0));
    a.iterations = levels;
  }
  return a;
}

}  // namespace gds

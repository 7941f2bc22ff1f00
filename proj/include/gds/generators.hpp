#pragma once

// Seeded random graph families used by the tests, the acceptance suite and
// the `generate` CLI command.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gds/graph.hpp"

namespace gds {

inline std::vector<std::string> numbered_names(std::size_t n, std::string_view prefix = "n") {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return names;
}

/// G(n, p) with unit weights.
inline Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v, 1.0});
    }
  }
  return Graph::from_edges(numbered_names(n), edges);
}

/// G(n, m): exactly m distinct edges drawn uniformly, unit weights.
inline Graph random_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<NodeId> draw(0, static_cast<NodeId>(n - 1));
  std::vector<Edge> edges;
  std::vector<std::uint64_t> seen;
  m = std::min(m, n * (n - 1) / 2);
  while (edges.size() < m) {
    NodeId a = draw(rng), b = draw(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    const auto key = (std::uint64_t{a} << 32) | b;
    auto it = std::lower_bound(seen.begin(), seen.end(), key);
    if (it != seen.end() && *it == key) continue;
    seen.insert(it, key);
    edges.push_back({a, b, 1.0});
  }
  return Graph::from_edges(numbered_names(n), edges);
}

/// Connected graph: a random recursive tree plus extra edges with
/// probability `extra_p`, weights drawn uniformly from 1..max_weight.
inline Graph random_connected(std::size_t n, double extra_p, int max_weight, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(1, max_weight);
  std::bernoulli_distribution coin(extra_p);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<Edge> edges;
  for (NodeId v = 1; v < n; ++v) {
    std::uniform_int_distribution<NodeId> parent(0, v - 1);
    const NodeId u = parent(rng);
    adj[u][v] = adj[v][u] = 1;
    edges.push_back({u, v, static_cast<double>(weight(rng))});
  }
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (!adj[u][v] && coin(rng)) edges.push_back({u, v, static_cast<double>(weight(rng))});
    }
  }
  return Graph::from_edges(numbered_names(n), edges);
}

struct PlantedPartition {
  Graph graph;
  std::vector<std::uint32_t> block;  // planted block per node
};

/// Stochastic block model with equal blocks: p_in inside a block, p_out
/// across. Node i belongs to block i / block_size.
inline PlantedPartition planted_partition(std::size_t blocks, std::size_t block_size, double p_in, double p_out,
                                          std::uint64_t seed) {
  const std::size_t n = blocks * block_size;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  PlantedPartition pp;
  pp.block.resize(n);
  for (std::size_t i = 0; i < n; ++i) pp.block[i] = static_cast<std::uint32_t>(i / block_size);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      const double p = pp.block[u] == pp.block[v] ? p_in : p_out;
      if (unit(rng) < p) edges.push_back({u, v, 1.0});
    }
  }
  pp.graph = Graph::from_edges(numbered_names(n), edges);
  return pp;
}

/// Synthetic character co-occurrence network in the Source,Target,weight
/// layout: `n` characters spread over houses, heavy-tailed popularity,
/// integer co-occurrence weights. A few rows are repeated (reversed) and a
/// few self-loops are added so ingestion has something to clean up.
inline std::vector<EdgeRow> character_network(std::size_t n, std::size_t target_edges, std::uint64_t seed) {
  static constexpr std::array<std::string_view, 12> kHouses = {
      "Stark", "Lannister", "Targaryen", "Baratheon", "Greyjoy", "Tyrell",
      "Martell", "Tully", "Arryn", "Bolton", "Frey", "Mormont"};
  std::mt19937_64 rng(seed);
  std::vector<std::string> names;
  std::vector<std::size_t> house(n);
  std::vector<double> pop(n);
  std::discrete_distribution<std::size_t> pick_house({18, 16, 10, 12, 8, 8, 7, 6, 5, 4, 4, 2});
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<int> per_house(kHouses.size(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    house[i] = pick_house(rng);
    names.push_back(std::string(kHouses[house[i]]) + "_" + std::to_string(++per_house[house[i]]));
    pop[i] = std::pow(1.0 - unit(rng), -1.0 / 1.8);  // Pareto, alpha 1.8
  }
  auto prob = [&](std::size_t u, std::size_t v, double scale) {
    return std::min(1.0, scale * pop[u] * pop[v] * (house[u] == house[v] ? 6.0 : 1.0));
  };
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = (lo + hi) / 2.0;
    double expected = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) expected += prob(u, v, mid);
    }
    (expected < static_cast<double>(target_edges) ? lo : hi) = mid;
  }
  std::geometric_distribution<int> extra(0.25);
  std::vector<EdgeRow> rows;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (unit(rng) < prob(u, v, hi)) {
        rows.push_back({names[u], names[v], static_cast<double>(3 + extra(rng))});
      }
    }
  }
  std::shuffle(rows.begin(), rows.end(), rng);
  const std::size_t dups = rows.size() / 50;
  for (std::size_t i = 0; i < dups; ++i) {
    const auto& r = rows[i];
    rows.push_back({r.target, r.source, r.weight + 1.0});
  }
  for (std::size_t i = 0; i < 5; ++i) rows.push_back({names[i], names[i], 1.0});
  return rows;
}

}  // namespace gds

#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gds/errors.hpp"

namespace gds {

using NodeId = std::uint32_t;

struct Neighbor {
  NodeId id;
  double weight;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

// Canonical undirected edge, u < v.
struct Edge {
  NodeId u;
  NodeId v;
  double weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// One row of a Source,Target,weight edge list.
struct EdgeRow {
  std::string source;
  std::string target;
  double weight = 1.0;
};

struct IngestStats {
  std::size_t rows = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t duplicates_resolved = 0;
  std::size_t self_loops_dropped = 0;
};

/// Immutable undirected weighted graph in compressed adjacency form.
///
/// Node names are interned to dense ids 0..N-1. Every adjacency list is
/// sorted by neighbour id, symmetric, and free of self-loops and duplicates.
class Graph {
public:
  Graph() : offsets_{0} {}

  /// Builds a graph over `names` from canonical or non-canonical edges.
  /// Throws DomainError on out-of-range ids, self-loops, duplicate pairs,
  /// duplicate names, or non-positive weights.
  static Graph from_edges(std::vector<std::string> names,
                          std::span<const Edge> edges) {
    Graph g;
    const auto n = names.size();
    g.index_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!g.index_.emplace(names[i], static_cast<NodeId>(i)).second) {
        throw DomainError("duplicate node name '" + names[i] + "'");
      }
    }
    g.names_ = std::move(names);

    std::vector<std::size_t> deg(n, 0);
    for (const auto& e : edges) {
      if (e.u >= n || e.v >= n) throw DomainError("edge endpoint out of range");
      if (e.u == e.v) throw DomainError("self-loop edge");
      if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
        throw DomainError("edge weight must be positive and finite");
      }
      ++deg[e.u];
      ++deg[e.v];
    }
    g.offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + deg[i];
    g.adjacency_.resize(g.offsets_[n]);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& e : edges) {
      g.adjacency_[fill[e.u]++] = {e.v, e.weight};
      g.adjacency_[fill[e.v]++] = {e.u, e.weight};
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]);
      auto last = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]);
      std::sort(first, last, [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
      if (std::adjacent_find(first, last, [](const Neighbor& a, const Neighbor& b) {
            return a.id == b.id;
          }) != last) {
        throw DomainError("duplicate edge at node '" + g.names_[i] + "'");
      }
    }
    g.edge_count_ = edges.size();
    return g;
  }

  std::size_t node_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Neighbor> neighbors(NodeId u) const noexcept {
    return {adjacency_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
  }
  std::size_t degree(NodeId u) const noexcept { return offsets_[u + 1] - offsets_[u]; }

  const std::string& name(NodeId u) const noexcept { return names_[u]; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<NodeId> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool has_edge(NodeId u, NodeId v) const noexcept { return edge_weight(u, v).has_value(); }

  std::optional<double> edge_weight(NodeId u, NodeId v) const noexcept {
    auto nb = neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v,
                               [](const Neighbor& a, NodeId id) { return a.id < id; });
    if (it == nb.end() || it->id != v) return std::nullopt;
    return it->weight;
  }

  /// All edges as (u < v), ascending by (u, v).
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < node_count(); ++u) {
      for (const auto& nb : neighbors(u)) {
        if (u < nb.id) out.push_back({u, nb.id, nb.weight});
      }
    }
    return out;
  }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Builds a graph from raw rows. Names are interned in first-appearance
/// order, self-loops are dropped, a repeated pair (in either orientation)
/// takes the weight of its last row. Throws IngestError on a non-finite or
/// non-positive weight.
inline Graph from_edge_list(std::span<const EdgeRow> rows, IngestStats* stats = nullptr) {
  std::vector<std::string> names;
  std::unordered_map<std::string, NodeId> index;
  auto intern = [&](const std::string& s) {
    auto [it, inserted] = index.emplace(s, static_cast<NodeId>(names.size()));
    if (inserted) names.push_back(s);
    return it->second;
  };

  IngestStats st;
  std::vector<Edge> edges;
  std::unordered_map<std::uint64_t, std::size_t> slot;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (!std::isfinite(r.weight)) throw IngestError(i + 1, "weight is not finite");
    if (r.weight <= 0.0) throw IngestError(i + 1, "weight must be positive");
    if (r.source.empty() || r.target.empty()) throw IngestError(i + 1, "empty node name");
    NodeId a = intern(r.source);
    NodeId b = intern(r.target);
    ++st.rows;
    if (a == b) {
      ++st.self_loops_dropped;
      continue;
    }
    if (a > b) std::swap(a, b);
    const auto key = (static_cast<std::uint64_t>(a) << 32) | b;
    auto [it, inserted] = slot.emplace(key, edges.size());
    if (inserted) {
      edges.push_back({a, b, r.weight});
    } else {
      edges[it->second].weight = r.weight;
      ++st.duplicates_resolved;
    }
  }
  st.nodes = names.size();
  st.edges = edges.size();
  if (stats) *stats = st;
  return Graph::from_edges(std::move(names), edges);
}

/// Induced subgraph over a node mask, with its own dense local ids.
///
/// Local ids follow ascending base ids, so iteration order is the base
/// order restricted to the mask. With `weighted == false` every edge
/// reports weight 1.
class GraphView {
public:
  template <class Range>
  GraphView(const Graph& base, const Range& mask, bool weighted)
      : base_(&base), weighted_(weighted) {
    std::vector<char> in(base.node_count(), 0);
    for (auto id : mask) {
      if (static_cast<std::size_t>(id) >= base.node_count()) {
        throw DomainError("mask contains invalid node id " + std::to_string(id));
      }
      in[id] = 1;
    }
    local_.assign(base.node_count(), kAbsent);
    for (NodeId u = 0; u < base.node_count(); ++u) {
      if (in[u]) {
        local_[u] = static_cast<NodeId>(base_ids_.size());
        base_ids_.push_back(u);
      }
    }
    offsets_.assign(base_ids_.size() + 1, 0);
    for (std::size_t i = 0; i < base_ids_.size(); ++i) {
      for (const auto& nb : base.neighbors(base_ids_[i])) {
        if (local_[nb.id] != kAbsent) {
          adjacency_.push_back({local_[nb.id], weighted ? nb.weight : 1.0});
        }
      }
      offsets_[i + 1] = adjacency_.size();
    }
    edge_count_ = adjacency_.size() / 2;
  }

  std::size_t node_count() const noexcept { return base_ids_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::span<const Neighbor> neighbors(NodeId u) const noexcept {
    return {adjacency_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
  }
  std::size_t degree(NodeId u) const noexcept { return offsets_[u + 1] - offsets_[u]; }
  const std::string& name(NodeId u) const noexcept { return base_->name(base_ids_[u]); }

  bool weighted() const noexcept { return weighted_; }
  const Graph& base() const noexcept { return *base_; }
  NodeId base_id(NodeId local) const noexcept { return base_ids_[local]; }
  std::optional<NodeId> local_id(NodeId base_id) const noexcept {
    if (base_id >= local_.size() || local_[base_id] == kAbsent) return std::nullopt;
    return local_[base_id];
  }

private:
  static constexpr NodeId kAbsent = static_cast<NodeId>(-1);

  const Graph* base_;
  bool weighted_;
  std::vector<NodeId> base_ids_;
  std::vector<NodeId> local_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
  std::size_t edge_count_ = 0;
};

template <class Range>
GraphView project(const Graph& g, const Range& node_mask, bool weighted) {
  return GraphView(g, node_mask, weighted);
}

// Anything the algorithms can run on: Graph and GraphView.
template <class G>
concept GraphLike = requires(const G& g, NodeId u) {
  { g.node_count() } -> std::convertible_to<std::size_t>;
  { g.edge_count() } -> std::convertible_to<std::size_t>;
  { g.neighbors(u) } -> std::convertible_to<std::span<const Neighbor>>;
  { g.degree(u) } -> std::convertible_to<std::size_t>;
  { g.name(u) } -> std::convertible_to<std::string_view>;
};

template <GraphLike G>
void check_node(const G& g, NodeId u) {
  if (u >= g.node_count()) {
    throw DomainError("invalid node id " + std::to_string(u) + " (graph has " +
                      std::to_string(g.node_count()) + " nodes)");
  }
}

template <GraphLike G>
std::size_t degree(const G& g, NodeId u) {
  check_node(g, u);
  return g.degree(u);
}

template <GraphLike G>
std::span<const Neighbor> neighbors(const G& g, NodeId u) {
  check_node(g, u);
  return g.neighbors(u);
}

}  // namespace gds

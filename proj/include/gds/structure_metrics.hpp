#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "gds/community.hpp"
#include "gds/errors.hpp"
#include "gds/format.hpp"
#include "gds/graph.hpp"

namespace gds {

namespace detail {

template <GraphLike G>
void check_pair(const G& g, NodeId u, NodeId v) {
  check_node(g, u);
  check_node(g, v);
  if (u == v) throw DomainError("pair endpoints must be distinct (got " + std::to_string(u) + " twice)");
}

inline std::size_t sorted_intersection(std::span<const Neighbor> a, std::span<const Neighbor> b) {
  std::size_t i = 0, j = 0, k = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].id < b[j].id) {
      ++i;
    } else if (b[j].id < a[i].id) {
      ++j;
    } else {
      ++k, ++i, ++j;
    }
  }
  return k;
}

}  // namespace detail

template <GraphLike G>
std::size_t common_neighbors(const G& g, NodeId u, NodeId v) {
  detail::check_pair(g, u, v);
  return detail::sorted_intersection(g.neighbors(u), g.neighbors(v));
}

template <GraphLike G>
std::size_t preferential_attachment(const G& g, NodeId u, NodeId v) {
  detail::check_pair(g, u, v);
  return g.degree(u) * g.degree(v);
}

/// Triangles through each node. Each triangle u < v < w is found once by
/// intersecting the higher-id parts of the sorted adjacency lists.
template <GraphLike G>
std::vector<std::size_t> triangles_per_node(const G& g) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> tri(n, 0);
  auto above = [](std::span<const Neighbor> nb, NodeId x) {
    auto it = std::upper_bound(nb.begin(), nb.end(), x,
                               [](NodeId id, const Neighbor& a) { return id < a.id; });
    return nb.subspan(static_cast<std::size_t>(it - nb.begin()));
  };
  for (NodeId u = 0; u < n; ++u) {
    const auto nu = above(g.neighbors(u), u);
    for (const auto& v : nu) {
      const auto nv = above(g.neighbors(v.id), v.id);
      const auto tail = above(nu, v.id);
      std::size_t i = 0, j = 0;
      while (i < tail.size() && j < nv.size()) {
        if (tail[i].id < nv[j].id) {
          ++i;
        } else if (nv[j].id < tail[i].id) {
          ++j;
        } else {
          ++tri[u];
          ++tri[v.id];
          ++tri[tail[i].id];
          ++i, ++j;
        }
      }
    }
  }
  return tri;
}

/// triangles(u) / C(deg(u), 2), or 0 when deg(u) < 2.
template <GraphLike G>
std::vector<double> local_clustering(const G& g, std::span<const std::size_t> triangles) {
  std::vector<double> cc(g.node_count(), 0.0);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const auto d = static_cast<double>(g.degree(u));
    if (d >= 2) cc[u] = static_cast<double>(triangles[u]) / (d * (d - 1) / 2.0);
  }
  return cc;
}

template <GraphLike G>
std::vector<double> local_clustering(const G& g) {
  const auto tri = triangles_per_node(g);
  return local_clustering(g, std::span<const std::size_t>(tri));
}

struct PairMetricRow {
  NodeId u = 0;
  NodeId v = 0;
  std::size_t common_neighbors = 0;
  std::size_t pref_attachment = 0;
  std::size_t deg_min = 0;
  std::size_t deg_max = 0;
  std::size_t tri_min = 0;
  std::size_t tri_max = 0;
  double cc_min = 0.0;
  double cc_max = 0.0;
  bool same_louvain = false;
  bool same_lp = false;

  friend bool operator==(const PairMetricRow&, const PairMetricRow&) = default;
};

// Column order of the feature matrix and of the CSV export.
inline constexpr std::array<std::string_view, 10> kPairFeatureNames = {
    "common_neighbors", "pref_attachment", "deg_min", "deg_max", "tri_min",
    "tri_max",          "cc_min",          "cc_max",  "same_louvain", "same_lp"};

inline std::array<double, 10> feature_values(const PairMetricRow& r) {
  return {static_cast<double>(r.common_neighbors), static_cast<double>(r.pref_attachment),
          static_cast<double>(r.deg_min),          static_cast<double>(r.deg_max),
          static_cast<double>(r.tri_min),          static_cast<double>(r.tri_max),
          r.cc_min,                                r.cc_max,
          r.same_louvain ? 1.0 : 0.0,              r.same_lp ? 1.0 : 0.0};
}

/// One feature row per pair, in input order. Per-node quantities are
/// reduced over the two endpoints with min/max, so rows do not depend on
/// pair orientation.
template <GraphLike G>
std::vector<PairMetricRow> pair_features(const G& g, std::span<const std::pair<NodeId, NodeId>> pairs,
                                         const CommunityAssignment& louvain_a,
                                         const CommunityAssignment& lp_a) {
  if (louvain_a.labels.size() != g.node_count() || lp_a.labels.size() != g.node_count()) {
    throw DomainError("pair_features: community assignment does not cover the graph");
  }
  const auto tri = triangles_per_node(g);
  const auto cc = local_clustering(g, std::span<const std::size_t>(tri));
  std::vector<PairMetricRow> rows;
  rows.reserve(pairs.size());
  for (const auto& [u, v] : pairs) {
    detail::check_pair(g, u, v);
    PairMetricRow r;
    r.u = u;
    r.v = v;
    r.common_neighbors = detail::sorted_intersection(g.neighbors(u), g.neighbors(v));
    r.pref_attachment = g.degree(u) * g.degree(v);
    std::tie(r.deg_min, r.deg_max) = std::minmax(g.degree(u), g.degree(v));
    std::tie(r.tri_min, r.tri_max) = std::minmax(tri[u], tri[v]);
    std::tie(r.cc_min, r.cc_max) = std::minmax(cc[u], cc[v]);
    r.same_louvain = louvain_a.same(u, v);
    r.same_lp = lp_a.same(u, v);
    rows.push_back(r);
  }
  return rows;
}

/// CSV with a `u,v,<ten feature names>` header; u and v are node names.
template <GraphLike G>
void write_feature_csv(std::ostream& out, const G& g, std::span<const PairMetricRow> rows) {
  out << "u,v";
  for (auto name : kPairFeatureNames) out << ',' << name;
  out << '\n';
  for (const auto& r : rows) {
    out << g.name(r.u) << ',' << g.name(r.v) << ',' << r.common_neighbors << ',' << r.pref_attachment
        << ',' << r.deg_min << ',' << r.deg_max << ',' << r.tri_min << ',' << r.tri_max << ','
        << format_real(r.cc_min) << ',' << format_real(r.cc_max) << ',' << int(r.same_louvain) << ',' << int(r.same_lp) << '\n';
  }
}

}  // namespace gds

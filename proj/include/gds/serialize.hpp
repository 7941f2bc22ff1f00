#pragma once

// JSON and text renderings of results. Keys keep insertion order so that
// output is byte-stable across runs.

#include <cstdint>
#include <iomanip>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gds/bench.hpp"
#include "gds/centrality.hpp"
#include "gds/community.hpp"
#include "gds/evaluation.hpp"
#include "gds/graph.hpp"
#include "gds/traversal.hpp"

namespace gds {

using Json = nlohmann::ordered_json;

inline Json to_json(const IngestStats& s) {
  return Json{{"rows", s.rows},
              {"nodes", s.nodes},
              {"edges", s.edges},
              {"duplicates_resolved", s.duplicates_resolved},
              {"self_loops_dropped", s.self_loops_dropped}};
}

inline Json to_json(const PageRankConfig& c) {
  return Json{{"damping", c.damping},
              {"max_iterations", c.max_iterations},
              {"tolerance", c.tolerance},
              {"use_weights", c.use_weights}};
}

inline Json to_json(std::span<const RankedNode> ranked) {
  Json out = Json::array();
  for (const auto& r : ranked) out.push_back(Json{{"node", r.node}, {"score", r.score}});
  return out;
}

/// {algorithm, config, scores} with scores sorted descending; `limit`
/// truncates the list (0 keeps every node).
template <GraphLike G>
Json scores_to_json(const G& g, std::string_view algorithm, const Json& config, const ScoreMap& s,
                    std::size_t limit = 0) {
  const auto ranked = top_k(g, s, limit == 0 ? std::max<std::size_t>(1, s.size()) : limit);
  return Json{{"algorithm", algorithm}, {"config", config}, {"scores", to_json(std::span<const RankedNode>(ranked))}};
}

template <GraphLike G>
Json community_to_json(const G& g, std::string_view algorithm, std::uint64_t seed, const CommunityAssignment& a) {
  Json members = Json::array();
  for (const auto& group : a.members()) {
    Json names = Json::array();
    for (auto u : group) names.push_back(g.name(u));
    members.push_back(std::move(names));
  }
  return Json{{"algorithm", algorithm},
              {"seed", seed},
              {"community_count", a.community_count},
              {"iterations", a.iterations},
              {"converged", a.converged},
              {"members", std::move(members)}};
}

template <GraphLike G>
Json bfs_to_json(const G& g, NodeId start, const BfsResult& r) {
  Json order = Json::array();
  for (auto u : r.order) order.push_back(g.name(u));
  return Json{{"start", g.name(start)},
              {"order", std::move(order)},
              {"depths", r.depth},
              {"terminated_by", to_string(r.terminated_by)}};
}

template <GraphLike G>
Json mst_to_json(const G& g, NodeId start, const SpanningTree& t) {
  Json edges = Json::array();
  for (const auto& e : t.edges) edges.push_back(Json::array({g.name(e.u), g.name(e.v), e.weight}));
  return Json{{"start", g.name(start)}, {"edges", std::move(edges)}, {"total_weight", t.total_weight}};
}

inline Json to_json(const EvalReport& r) {
  Json importances = Json::array();
  for (const auto& [name, value] : r.importances) importances.push_back(Json{{"feature", name}, {"importance", value}});
  const auto& c = r.confusion;
  return Json{{"model", r.model},
              {"accuracy", r.accuracy},
              {"precision", r.precision},
              {"recall", r.recall},
              {"auc", r.auc},
              {"threshold", r.threshold},
              {"test_size", c.total()},
              {"confusion",
               {{"true_positive", c.true_positive},
                {"false_positive", c.false_positive},
                {"true_negative", c.true_negative},
                {"false_negative", c.false_negative}}},
              {"importances", std::move(importances)}};
}

/// Assessment table: model, accuracy, precision, recall, AUC.
inline void render_eval_table(std::ostream& out, std::span<const EvalReport> reports) {
  const auto flags = out.flags();
  out << std::left << std::setw(20) << "model" << std::right << std::setw(10) << "accuracy" << std::setw(11)
      << "precision" << std::setw(9) << "recall" << std::setw(9) << "AUC" << '\n';
  for (const auto& r : reports) {
    out << std::left << std::setw(20) << r.model << std::right << std::fixed << std::setprecision(4) << std::setw(10)
        << r.accuracy << std::setw(11) << r.precision << std::setw(9) << r.recall << std::setw(9) << r.auc << '\n';
    out.flags(flags);
  }
}

inline Json to_json(const BenchReport& r) {
  return Json{{"algorithm", r.algorithm},
              {"label", r.label},
              {"repetitions", r.repetitions},
              {"first_run_seconds", r.first_run_seconds},
              {"subsequent_mean_seconds", r.subsequent_mean_seconds},
              {"subsequent_std_seconds", r.subsequent_std_seconds},
              {"min_seconds", r.min_seconds},
              {"max_seconds", r.max_seconds},
              {"load_seconds", r.load_seconds},
              {"checksum", r.checksum},
              {"checksum_stable", r.checksum_stable},
              {"environment", r.environment}};
}

inline Json to_json(const std::vector<BenchSummaryRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"label", r.label},
                       {"repetitions", r.repetitions},
                       {"first_run_seconds", r.first_run_seconds},
                       {"subsequent_mean_seconds", r.subsequent_mean_seconds},
                       {"subsequent_std_seconds", r.subsequent_std_seconds},
                       {"first_to_mean_ratio", r.first_to_mean_ratio}});
  }
  return out;
}

}  // namespace gds

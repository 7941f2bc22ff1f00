#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "gds/community.hpp"
#include "gds/errors.hpp"
#include "gds/evaluation.hpp"
#include "gds/forest.hpp"
#include "gds/format.hpp"
#include "gds/graph.hpp"
#include "gds/structure_metrics.hpp"

namespace gds {

using NodePair = std::pair<NodeId, NodeId>;

struct LabeledPair {
  NodeId u;
  NodeId v;
  bool positive;

  friend bool operator==(const LabeledPair&, const LabeledPair&) = default;
};

enum class SplitRole { train, test };

struct LabeledPairSet {
  std::vector<LabeledPair> pairs;
  SplitRole role = SplitRole::train;

  std::size_t positives() const {
    return static_cast<std::size_t>(std::count_if(pairs.begin(), pairs.end(), [](const auto& p) { return p.positive; }));
  }
  std::size_t negatives() const { return pairs.size() - positives(); }

  std::vector<NodePair> endpoints() const {
    std::vector<NodePair> out;
    out.reserve(pairs.size());
    for (const auto& p : pairs) out.emplace_back(p.u, p.v);
    return out;
  }
  std::vector<int> labels() const {
    std::vector<int> out;
    out.reserve(pairs.size());
    for (const auto& p : pairs) out.push_back(p.positive ? 1 : 0);
    return out;
  }
};

struct SplitConfig {
  double train_fraction = 0.6;
  std::uint64_t seed = 0;
};

struct EdgeSplit {
  Graph train_graph;  // same nodes as the source, train positives only
  LabeledPairSet train;
  LabeledPairSet test;
};

inline NodePair ordered_pair(NodeId a, NodeId b) { return a < b ? NodePair{a, b} : NodePair{b, a}; }

/// Draws `count` distinct unordered non-adjacent pairs of `g`, uniformly
/// without replacement, skipping anything in `exclude`. Pairs come back
/// with u < v.
inline std::vector<NodePair> sample_negatives(const Graph& g, std::size_t count, std::uint64_t seed,
                                              const std::set<NodePair>& exclude = {}) {
  const std::size_t n = g.node_count();
  const std::size_t all_pairs = n < 2 ? 0 : n * (n - 1) / 2;
  std::size_t excluded = 0;
  for (const auto& [a, b] : exclude) {
    if (a != b && a < n && b < n && a < b && !g.has_edge(a, b)) ++excluded;
  }
  const std::size_t available = all_pairs - g.edge_count() - excluded;
  if (count > available) {
    throw DomainError("sample_negatives: requested " + std::to_string(count) + " non-edges but only " +
                      std::to_string(available) + " are available");
  }

  std::mt19937_64 rng(seed);
  std::vector<NodePair> out;
  out.reserve(count);
  if (count == 0) return out;

  if (2 * count <= available) {
    std::set<NodePair> taken;
    std::uniform_int_distribution<NodeId> draw(0, static_cast<NodeId>(n - 1));
    while (out.size() < count) {
      const NodeId a = draw(rng);
      const NodeId b = draw(rng);
      if (a == b) continue;
      const auto p = ordered_pair(a, b);
      if (g.has_edge(p.first, p.second) || exclude.contains(p) || !taken.insert(p).second) continue;
      out.push_back(p);
    }
    return out;
  }

  std::vector<NodePair> pool;
  pool.reserve(available);
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      if (!g.has_edge(a, b) && !exclude.contains({a, b})) pool.emplace_back(a, b);
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
    out.push_back(pool[i]);
  }
  return out;
}

/// Shuffles the edges and sends the first `train_fraction` of them to the
/// train role, the rest to test. Each role gets as many sampled non-edges
/// as it has positives, disjoint across roles. Features must be computed
/// on `train_graph` so that test edges never leak into them.
inline EdgeSplit split_edges(const Graph& g, const SplitConfig& cfg = {}) {
  if (!(cfg.train_fraction > 0.0 && cfg.train_fraction < 1.0)) {
    throw DomainError("split_edges: train_fraction must be in (0,1)");
  }
  if (g.edge_count() < 10) throw DomainError("split_edges: need at least 10 edges");

  auto edges = g.edges();
  std::mt19937_64 rng(cfg.seed);
  std::shuffle(edges.begin(), edges.end(), rng);
  const auto e = static_cast<long long>(edges.size());
  const auto n_train = static_cast<std::size_t>(
      std::clamp(std::llround(cfg.train_fraction * static_cast<double>(e)), 1LL, e - 1));

  EdgeSplit s;
  s.train.role = SplitRole::train;
  s.test.role = SplitRole::test;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    (i < n_train ? s.train : s.test).pairs.push_back({edges[i].u, edges[i].v, true});
  }
  s.train_graph = Graph::from_edges(g.names(), std::span<const Edge>(edges.data(), n_train));

  const auto train_neg = sample_negatives(g, n_train, derive_seed(cfg.seed, 1));
  const std::set<NodePair> used(train_neg.begin(), train_neg.end());
  const auto test_neg = sample_negatives(g, edges.size() - n_train, derive_seed(cfg.seed, 2), used);
  for (const auto& [a, b] : train_neg) s.train.pairs.push_back({a, b, false});
  for (const auto& [a, b] : test_neg) s.test.pairs.push_back({a, b, false});
  return s;
}

/// Column indices into kPairFeatureNames for a list of feature names.
inline std::vector<std::size_t> feature_columns(std::span<const std::string> names) {
  if (names.empty()) throw DomainError("feature subset is empty");
  std::vector<std::size_t> cols;
  for (const auto& name : names) {
    auto it = std::find(kPairFeatureNames.begin(), kPairFeatureNames.end(), name);
    if (it == kPairFeatureNames.end()) throw DomainError("unknown feature '" + name + "'");
    const auto c = static_cast<std::size_t>(it - kPairFeatureNames.begin());
    if (std::find(cols.begin(), cols.end(), c) != cols.end()) throw DomainError("feature '" + name + "' listed twice");
    cols.push_back(c);
  }
  return cols;
}

inline std::vector<std::string> all_features() { return {kPairFeatureNames.begin(), kPairFeatureNames.end()}; }

inline Matrix feature_matrix(std::span<const PairMetricRow> rows, std::span<const std::size_t> columns) {
  Matrix m(rows.size(), columns.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto values = feature_values(rows[r]);
    for (std::size_t c = 0; c < columns.size(); ++c) m(r, c) = values[columns[c]];
  }
  return m;
}

struct PipelineConfig {
  std::string model_name = "model";
  std::vector<std::string> features = all_features();
  SplitConfig split;
  ForestConfig forest;
  LpConfig label_propagation;
  std::uint64_t louvain_seed = 0;
  double threshold = 0.5;
};

/// Reads an INI pipeline description:
///
///   [model]       name, features (comma separated), threshold
///   [split]       train_fraction, seed
///   [forest]      n_trees, max_depth, min_samples_split, features_per_split (sqrt|all), seed, bootstrap
///   [community]   louvain_seed, lp_seed, lp_max_iterations
///
/// Missing keys keep their defaults; unknown keys are rejected.
inline PipelineConfig parse_pipeline_config(std::istream& in) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw DomainError(std::string("pipeline config: ") + e.what());
  }

  const std::set<std::string> known = {
      "model.name",         "model.features",         "model.threshold",          "split.train_fraction",
      "split.seed",         "forest.n_trees",         "forest.max_depth",         "forest.min_samples_split",
      "forest.features_per_split", "forest.seed",     "forest.bootstrap",         "community.louvain_seed",
      "community.lp_seed",  "community.lp_max_iterations"};
  for (const auto& [section, body] : tree) {
    if (body.empty()) throw DomainError("pipeline config: key '" + section + "' outside a section");
    for (const auto& [key, value] : body) {
      if (!known.contains(section + "." + key)) {
        throw DomainError("pipeline config: unknown key '" + section + "." + key + "'");
      }
    }
  }

  PipelineConfig c;
  // Overwrites `out` only when the key is present; bad values throw.
  auto read = [&tree](const char* path, auto& out) {
    if (tree.get_child_optional(path)) out = tree.get<std::remove_reference_t<decltype(out)>>(path);
  };
  try {
    read("model.name", c.model_name);
    if (auto f = tree.get_optional<std::string>("model.features")) {
      c.features.clear();
      std::string_view rest = *f;
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        auto item = std::string(detail::trim(rest.substr(0, comma)));
        if (!item.empty()) c.features.push_back(item);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
    }
    read("model.threshold", c.threshold);
    read("split.train_fraction", c.split.train_fraction);
    read("split.seed", c.split.seed);
    read("forest.n_trees", c.forest.n_trees);
    read("forest.max_depth", c.forest.max_depth);
    read("forest.min_samples_split", c.forest.min_samples_split);
    read("forest.seed", c.forest.seed);
    read("forest.bootstrap", c.forest.bootstrap);
    std::string sampling = "sqrt";
    read("forest.features_per_split", sampling);
    if (sampling == "sqrt") {
      c.forest.features_per_split = FeatureSampling::sqrt;
    } else if (sampling == "all") {
      c.forest.features_per_split = FeatureSampling::all;
    } else {
      throw DomainError("pipeline config: features_per_split must be 'sqrt' or 'all'");
    }
    read("community.louvain_seed", c.louvain_seed);
    read("community.lp_seed", c.label_propagation.seed);
    read("community.lp_max_iterations", c.label_propagation.max_iterations);
  } catch (const pt::ptree_bad_data& e) {
    throw DomainError(std::string("pipeline config: ") + e.what());
  }
  feature_columns(c.features);
  return c;
}

inline PipelineConfig load_pipeline_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  return parse_pipeline_config(in);
}

struct PipelineRun {
  EvalReport report;
  ForestModel model;
  std::vector<LabeledPair> test_pairs;
  std::vector<double> test_scores;  // parallel to test_pairs
  std::size_t train_size = 0;
};

/// split -> communities on the train graph -> pair features on the train
/// graph -> forest -> scores on the test pairs -> assessment.
inline PipelineRun run_pipeline_detailed(const Graph& g, const PipelineConfig& cfg) {
  const auto columns = feature_columns(cfg.features);
  auto split = split_edges(g, cfg.split);
  const auto& tg = split.train_graph;
  const auto lp = label_propagation(tg, cfg.label_propagation);
  const auto lv = louvain(tg, cfg.louvain_seed);

  const auto train_pairs = split.train.endpoints();
  const auto test_pairs = split.test.endpoints();
  const auto train_rows = pair_features(tg, std::span<const NodePair>(train_pairs), lv, lp);
  const auto test_rows = pair_features(tg, std::span<const NodePair>(test_pairs), lv, lp);
  const auto train_labels = split.train.labels();
  const auto test_labels = split.test.labels();

  PipelineRun run;
  run.model = train_forest(feature_matrix(train_rows, columns), train_labels, cfg.forest, cfg.features);
  run.test_scores = predict(run.model, feature_matrix(test_rows, columns));
  run.report = evaluate(run.test_scores, test_labels, cfg.threshold);
  run.report.model = cfg.model_name;
  for (std::size_t i = 0; i < cfg.features.size(); ++i) {
    run.report.importances.emplace_back(cfg.features[i], run.model.importances[i]);
  }
  run.test_pairs = std::move(split.test.pairs);
  run.train_size = split.train.pairs.size();
  return run;
}

inline EvalReport run_pipeline(const Graph& g, std::vector<std::string> feature_subset, const SplitConfig& split_cfg,
                               const ForestConfig& forest_cfg) {
  PipelineConfig cfg;
  cfg.features = std::move(feature_subset);
  cfg.split = split_cfg;
  cfg.forest = forest_cfg;
  return run_pipeline_detailed(g, cfg).report;
}

}  // namespace gds

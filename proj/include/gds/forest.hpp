#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gds/errors.hpp"

namespace gds {

/// Dense row-major feature matrix.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const noexcept { return cols_ == 0 ? 0 : data_.size() / cols_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

  void push_row(std::span<const double> values) {
    if (cols_ == 0 && data_.empty()) cols_ = values.size();
    if (values.size() != cols_) throw DomainError("matrix row has wrong arity");
    data_.insert(data_.end(), values.begin(), values.end());
  }

private:
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

enum class FeatureSampling { sqrt, all };

struct ForestConfig {
  int n_trees = 100;
  int max_depth = 8;
  int min_samples_split = 2;
  FeatureSampling features_per_split = FeatureSampling::sqrt;
  std::uint64_t seed = 0;
  bool bootstrap = true;
};

struct TreeNode {
  static constexpr int kLeaf = -1;

  int feature = kLeaf;
  double threshold = 0.0;  // x[feature] <= threshold goes left
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  double value = 0.0;  // fraction of positive training samples reaching the node
  std::size_t samples = 0;

  bool is_leaf() const noexcept { return feature == kLeaf; }
};

struct DecisionTree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root

  double predict(std::span<const double> x) const {
    std::uint32_t i = 0;
    while (!nodes[i].is_leaf()) {
      const auto& n = nodes[i];
      i = x[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left : n.right;
    }
    return nodes[i].value;
  }
};

struct ForestModel {
  std::vector<DecisionTree> trees;
  std::vector<std::string> feature_names;
  std::vector<double> importances;

  std::size_t feature_count() const noexcept { return feature_names.size(); }
};

// splitmix64 finaliser; gives every tree an independent stream.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline double gini(double positives, double total) {
  if (total <= 0.0) return 0.0;
  const double p = positives / total;
  return 2.0 * p * (1.0 - p);
}

struct SplitChoice {
  int feature = TreeNode::kLeaf;
  double threshold = 0.0;
  double weighted_impurity = 0.0;  // n_left * gini_left + n_right * gini_right
  std::size_t left_count = 0;
};

namespace detail {

class TreeBuilder {
public:
  TreeBuilder(const Matrix& x, std::span<const int> y, const ForestConfig& cfg, std::uint64_t seed,
              std::vector<double>& importance)
      : x_(x), y_(y), cfg_(cfg), rng_(seed), importance_(importance) {
    const auto f = x.cols();
    mtry_ = cfg.features_per_split == FeatureSampling::all
                ? f
                : std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(f)))));
    feature_order_.resize(f);
    std::iota(feature_order_.begin(), feature_order_.end(), std::size_t{0});
  }

  DecisionTree build() {
    std::vector<std::size_t> sample(x_.rows());
    if (cfg_.bootstrap) {
      std::uniform_int_distribution<std::size_t> draw(0, x_.rows() - 1);
      for (auto& s : sample) s = draw(rng_);
    } else {
      std::iota(sample.begin(), sample.end(), std::size_t{0});
    }
    total_ = static_cast<double>(sample.size());
    grow(sample, 0);
    return std::move(tree_);
  }

private:
  std::uint32_t grow(std::vector<std::size_t>& sample, int depth) {
    const auto id = static_cast<std::uint32_t>(tree_.nodes.size());
    tree_.nodes.emplace_back();
    const double n = static_cast<double>(sample.size());
    double pos = 0.0;
    for (auto s : sample) pos += y_[s];
    tree_.nodes[id].value = pos / n;
    tree_.nodes[id].samples = sample.size();

    const bool pure = pos == 0.0 || pos == n;
    if (pure || depth >= cfg_.max_depth || sample.size() < static_cast<std::size_t>(cfg_.min_samples_split)) {
      return id;
    }
    const double parent = n * gini(pos, n);
    const auto split = best_split(sample);
    if (split.feature == TreeNode::kLeaf || !(split.weighted_impurity < parent - 1e-12)) return id;

    importance_[static_cast<std::size_t>(split.feature)] += (parent - split.weighted_impurity) / total_;

    std::vector<std::size_t> left, right;
    left.reserve(split.left_count);
    right.reserve(sample.size() - split.left_count);
    for (auto s : sample) {
      (x_(s, static_cast<std::size_t>(split.feature)) <= split.threshold ? left : right).push_back(s);
    }
    sample.clear();
    sample.shrink_to_fit();
    const auto l = grow(left, depth + 1);
    const auto r = grow(right, depth + 1);
    auto& node = tree_.nodes[id];
    node.feature = split.feature;
    node.threshold = split.threshold;
    node.left = l;
    node.right = r;
    return id;
  }

  SplitChoice best_split(const std::vector<std::size_t>& sample) {
    std::shuffle(feature_order_.begin(), feature_order_.end(), rng_);
    SplitChoice best;
    std::size_t evaluated = 0;
    std::vector<std::pair<double, int>> column(sample.size());
    double total_pos = 0.0;
    for (auto s : sample) total_pos += y_[s];
    const double n = static_cast<double>(sample.size());

    for (auto f : feature_order_) {
      if (evaluated == mtry_) break;
      for (std::size_t i = 0; i < sample.size(); ++i) column[i] = {x_(sample[i], f), y_[sample[i]]};
      std::sort(column.begin(), column.end());
      if (column.front().first == column.back().first) continue;  // constant here
      ++evaluated;
      double left_pos = 0.0;
      for (std::size_t i = 0; i + 1 < column.size(); ++i) {
        left_pos += column[i].second;
        if (column[i].first == column[i + 1].first) continue;
        const double nl = static_cast<double>(i + 1);
        const double nr = n - nl;
        const double imp = nl * gini(left_pos, nl) + nr * gini(total_pos - left_pos, nr);
        const int fi = static_cast<int>(f);
        const bool better = best.feature == TreeNode::kLeaf || imp < best.weighted_impurity ||
                            (imp == best.weighted_impurity && fi < best.feature);
        if (better) {
          double mid = column[i].first + (column[i + 1].first - column[i].first) / 2.0;
          if (!(mid < column[i + 1].first)) mid = column[i].first;
          best = {fi, mid, imp, i + 1};
        }
      }
    }
    return best;
  }

  const Matrix& x_;
  std::span<const int> y_;
  const ForestConfig& cfg_;
  std::mt19937_64 rng_;
  std::vector<double>& importance_;
  std::size_t mtry_ = 1;
  std::vector<std::size_t> feature_order_;
  double total_ = 1.0;
  DecisionTree tree_;
};

}  // namespace detail

/// Random forest of CART trees on binary labels (0/1).
///
/// Each tree is grown on its own bootstrap sample with greedy Gini splits
/// over a random subset of features per node. Importances are the mean
/// decrease in impurity per tree, averaged and normalised to sum to 1 (all
/// zero if no tree ever splits).
inline ForestModel train_forest(const Matrix& features, std::span<const int> labels, const ForestConfig& cfg = {},
                                std::vector<std::string> feature_names = {}) {
  if (cfg.n_trees < 1 || cfg.max_depth < 1 || cfg.min_samples_split < 1) {
    throw DomainError("train_forest: tree parameters must be positive");
  }
  if (features.rows() < 2) throw DomainError("train_forest: need at least 2 rows");
  if (labels.size() != features.rows()) throw DomainError("train_forest: label count does not match rows");
  std::size_t pos = 0;
  for (int y : labels) {
    if (y != 0 && y != 1) throw DomainError("train_forest: labels must be 0 or 1");
    pos += static_cast<std::size_t>(y);
  }
  if (pos == 0 || pos == labels.size()) throw DomainError("train_forest: both classes must be present");

  const auto f = features.cols();
  if (feature_names.empty()) {
    for (std::size_t i = 0; i < f; ++i) feature_names.push_back("f" + std::to_string(i));
  }
  if (feature_names.size() != f) throw DomainError("train_forest: feature name count does not match columns");

  ForestModel model;
  model.feature_names = std::move(feature_names);
  model.importances.assign(f, 0.0);
  std::vector<double> tree_importance(f);
  for (int t = 0; t < cfg.n_trees; ++t) {
    std::fill(tree_importance.begin(), tree_importance.end(), 0.0);
    detail::TreeBuilder builder(features, labels, cfg, derive_seed(cfg.seed, static_cast<std::uint64_t>(t)),
                                tree_importance);
    model.trees.push_back(builder.build());
    const double sum = std::accumulate(tree_importance.begin(), tree_importance.end(), 0.0);
    if (sum > 0.0) {
      for (std::size_t i = 0; i < f; ++i) model.importances[i] += tree_importance[i] / sum;
    }
  }
  const double sum = std::accumulate(model.importances.begin(), model.importances.end(), 0.0);
  if (sum > 0.0) {
    for (auto& v : model.importances) v /= sum;
  }
  return model;
}

/// Mean positive-class probability over the trees, one value per row.
inline std::vector<double> predict(const ForestModel& model, const Matrix& features) {
  if (features.rows() > 0 && features.cols() != model.feature_count()) {
    throw DomainError("predict: expected " + std::to_string(model.feature_count()) + " features, got " +
                      std::to_string(features.cols()));
  }
  if (model.trees.empty()) throw DomainError("predict: model has no trees");
  std::vector<double> out(features.rows(), 0.0);
  for (std::size_t r = 0; r < features.rows(); ++r) {
    const auto x = features.row(r);
    double acc = 0.0;
    for (const auto& t : model.trees) acc += t.predict(x);
    out[r] = acc / static_cast<double>(model.trees.size());
  }
  return out;
}

}  // namespace gds

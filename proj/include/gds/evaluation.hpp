#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gds/errors.hpp"

namespace gds {

struct Confusion {
  std::size_t true_positive = 0;
  std::size_t false_positive = 0;
  std::size_t true_negative = 0;
  std::size_t false_negative = 0;

  std::size_t total() const noexcept { return true_positive + false_positive + true_negative + false_negative; }
};

struct EvalReport {
  std::string model;
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double auc = 0.0;
  double threshold = 0.5;
  Confusion confusion;
  std::vector<std::pair<std::string, double>> importances;
};

/// Area under the ROC curve as the Mann-Whitney statistic: the fraction of
/// (positive, negative) pairs where the positive scores higher, ties 1/2.
inline double roc_auc(std::span<const double> scores, std::span<const int> labels) {
  if (scores.size() != labels.size()) throw DomainError("roc_auc: scores and labels differ in length");
  const std::size_t n = scores.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  double positives = 0.0;
  double rank_sum = 0.0;  // sum of 1-based average ranks of the positives
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && scores[idx[j]] == scores[idx[i]]) ++j;
    const double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) {
      if (labels[idx[k]] == 1) {
        positives += 1.0;
        rank_sum += avg_rank;
      }
    }
    i = j;
  }
  const double negatives = static_cast<double>(n) - positives;
  if (positives == 0.0 || negatives == 0.0) throw DomainError("roc_auc: both classes must be present");
  const double u = rank_sum - positives * (positives + 1.0) / 2.0;
  return u / (positives * negatives);
}

/// Thresholded confusion counts (score >= threshold predicts positive) and
/// the derived metrics, plus AUC. Precision is 0 when nothing is predicted
/// positive.
inline EvalReport evaluate(std::span<const double> scores, std::span<const int> labels, double threshold = 0.5) {
  if (scores.size() != labels.size()) throw DomainError("evaluate: scores and labels differ in length");
  EvalReport r;
  r.threshold = threshold;
  auto& c = r.confusion;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const bool predicted = scores[i] >= threshold;
    if (labels[i] == 1) {
      predicted ? ++c.true_positive : ++c.false_negative;
    } else if (labels[i] == 0) {
      predicted ? ++c.false_positive : ++c.true_negative;
    } else {
      throw DomainError("evaluate: labels must be 0 or 1");
    }
  }
  r.auc = roc_auc(scores, labels);
  const auto tp = static_cast<double>(c.true_positive);
  r.accuracy = static_cast<double>(c.true_positive + c.true_negative) / static_cast<double>(c.total());
  r.precision = c.true_positive + c.false_positive == 0 ? 0.0 : tp / static_cast<double>(c.true_positive + c.false_positive);
  r.recall = tp / static_cast<double>(c.true_positive + c.false_negative);
  return r;
}

}  // namespace gds

#include <random>

#include <gtest/gtest.h>

#include "gds/evaluation.hpp"
#include "oracles.hpp"

namespace gds {
namespace {

TEST(RocAuc, PerfectAndConstant) {
  const std::vector<double> s = {0.1, 0.2, 0.8, 0.9};
  const std::vector<int> y = {0, 0, 1, 1};
  EXPECT_EQ(roc_auc(s, y), 1.0);
  const std::vector<int> flipped = {1, 1, 0, 0};
  EXPECT_EQ(roc_auc(s, flipped), 0.0);
  const std::vector<double> flat(4, 0.3);
  EXPECT_EQ(roc_auc(flat, y), 0.5);
}

TEST(RocAuc, SingleClassThrows) {
  const std::vector<double> s = {0.1, 0.2};
  EXPECT_THROW(roc_auc(s, std::vector<int>{1, 1}), DomainError);
  EXPECT_THROW(roc_auc(s, std::vector<int>{1}), DomainError);
}

TEST(RocAuc, MatchesConcordantPairCounting) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> size(2, 500);
    const int n = size(rng);
    std::uniform_int_distribution<int> coarse(0, 20);
    std::bernoulli_distribution coin(0.4);
    std::vector<double> s(n);
    std::vector<int> y(n);
    for (int i = 0; i < n; ++i) s[i] = coarse(rng) / 20.0, y[i] = coin(rng);
    y[0] = 0, y[1] = 1;
    EXPECT_NEAR(roc_auc(s, y), oracle::pair_count_auc(s, y), 1e-12);
  }
}

TEST(Evaluate, ConfusionAndRates) {
  const std::vector<double> s = {0.9, 0.6, 0.4, 0.5, 0.2};
  const std::vector<int> y = {1, 0, 1, 1, 0};
  const auto r = evaluate(s, y, 0.5);
  EXPECT_EQ(r.confusion.true_positive, 2u);
  EXPECT_EQ(r.confusion.false_positive, 1u);
  EXPECT_EQ(r.confusion.false_negative, 1u);
  EXPECT_EQ(r.confusion.true_negative, 1u);
  EXPECT_EQ(r.confusion.total(), 5u);
  EXPECT_DOUBLE_EQ(r.accuracy, 3.0 / 5.0);
  EXPECT_DOUBLE_EQ(r.precision, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(r.recall, 2.0 / 3.0);
}

TEST(Evaluate, NothingPredictedPositive) {
  const std::vector<double> s = {0.1, 0.2};
  const std::vector<int> y = {0, 1};
  const auto r = evaluate(s, y, 0.5);
  EXPECT_EQ(r.precision, 0.0);
  EXPECT_EQ(r.recall, 0.0);
  EXPECT_EQ(r.auc, 1.0);
}

TEST(Evaluate, CountsAreConsistent) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> s(200);
  std::vector<int> y(200);
  for (int i = 0; i < 200; ++i) s[i] = u(rng), y[i] = i % 3 == 0;
  const auto r = evaluate(s, y);
  const auto& c = r.confusion;
  EXPECT_EQ(c.true_positive + c.false_negative, 67u);
  EXPECT_NEAR(r.accuracy, double(c.true_positive + c.true_negative) / 200.0, 1e-15);
  EXPECT_GE(r.auc, 0.0);
  EXPECT_LE(r.auc, 1.0);
}

}  // namespace
}  // namespace gds

#include <cmath>
#include <numeric>
#include <sstream>

#include <gtest/gtest.h>

#include "gds/bench.hpp"
#include "gds/generators.hpp"

namespace gds {
namespace {

TEST(SubsequentStats, TwoRunsHaveZeroSpread) {
  const auto s = subsequent_stats({5.0, 2.0});
  EXPECT_EQ(s.mean, 2.0);
  EXPECT_EQ(s.stddev, 0.0);
  EXPECT_EQ(s.min, 2.0);
  EXPECT_EQ(s.max, 2.0);
}

TEST(SubsequentStats, ExcludesFirstRun) {
  const auto s = subsequent_stats({100.0, 1.0, 3.0});
  EXPECT_DOUBLE_EQ(s.mean, 2.0);
  EXPECT_DOUBLE_EQ(s.stddev, 1.0);
}

TEST(BenchGraph, EveryAlgorithmIsStable) {
  const auto g = random_connected(60, 0.05, 9, 2);
  for (auto algo : kAllAlgorithms) {
    BenchSpec spec;
    spec.algorithm = algo;
    spec.repetitions = 5;
    const auto r = bench_graph(g, spec);
    EXPECT_EQ(r.raw_seconds.size(), 5u);
    EXPECT_TRUE(r.checksum_stable) << to_string(algo);
    EXPECT_EQ(r.checksum, bench_graph(g, spec).checksum);
    EXPECT_EQ(r.first_run_seconds, r.raw_seconds[0]);
    for (double t : r.raw_seconds) EXPECT_GE(t, 0.0);
    EXPECT_LE(r.min_seconds, r.subsequent_mean_seconds);
    EXPECT_GE(r.max_seconds, r.subsequent_mean_seconds);
  }
}

TEST(BenchGraph, Errors) {
  const auto g = random_connected(10, 0.1, 3, 0);
  BenchSpec spec;
  spec.repetitions = 1;
  EXPECT_THROW(bench_graph(g, spec), DomainError);
  spec.repetitions = 2;
  spec.algorithm = Algorithm::bfs;
  spec.start = "nope";
  EXPECT_THROW(bench_graph(g, spec), DomainError);
  EXPECT_FALSE(parse_algorithm("dijkstra").has_value());
  EXPECT_EQ(parse_algorithm("prim_mst"), Algorithm::prim_mst);
}

TEST(BenchGraph, Labels) {
  BenchSpec spec;
  spec.algorithm = Algorithm::bfs;
  spec.bfs.max_depth = 5;
  EXPECT_EQ(bench_label(spec), "bfs[max_depth=5]");
  spec.algorithm = Algorithm::pagerank;
  EXPECT_EQ(bench_label(spec).substr(0, 8), "pagerank");
}

TEST(RawLog, RoundTripRecomputesStats) {
  const auto g = random_connected(80, 0.05, 9, 7);
  BenchSpec spec;
  spec.algorithm = Algorithm::pagerank;
  spec.repetitions = 100;
  const auto r = bench_graph(g, spec);
  std::stringstream log;
  write_raw_log(log, r);
  const auto raw = read_raw_log(log);
  ASSERT_EQ(raw.size(), 100u);
  EXPECT_EQ(raw, r.raw_seconds);
  const auto s = subsequent_stats(raw);
  EXPECT_NEAR(s.mean, r.subsequent_mean_seconds, 1e-9);
  EXPECT_NEAR(s.stddev, r.subsequent_std_seconds, 1e-9);
}

TEST(Summary, SortedByLabel) {
  std::vector<BenchReport> reports(3);
  reports[0].label = "prim_mst";
  reports[1].label = "bfs[max_depth=5]";
  reports[2].label = "betweenness";
  for (auto& r : reports) r.first_run_seconds = 2.0, r.subsequent_mean_seconds = 1.0;
  const auto rows = summarize(reports);
  EXPECT_EQ(rows[0].label, "betweenness");
  EXPECT_EQ(rows[1].label, "bfs[max_depth=5]");
  EXPECT_EQ(rows[2].label, "prim_mst");
  EXPECT_DOUBLE_EQ(rows[0].first_to_mean_ratio, 2.0);
  EXPECT_THROW(summarize({}), DomainError);
  std::ostringstream out;
  render_summary(out, rows);
  EXPECT_NE(out.str().find("prim_mst"), std::string::npos);
}

}  // namespace
}  // namespace gds

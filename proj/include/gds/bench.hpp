#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gds/centrality.hpp"
#include "gds/community.hpp"
#include "gds/csv.hpp"
#include "gds/errors.hpp"
#include "gds/format.hpp"
#include "gds/graph.hpp"
#include "gds/traversal.hpp"

namespace gds {

enum class Algorithm { betweenness, bfs, label_propagation, pagerank, prim_mst };

inline constexpr std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::betweenness: return "betweenness";
    case Algorithm::bfs: return "bfs";
    case Algorithm::label_propagation: return "label_propagation";
    case Algorithm::pagerank: return "pagerank";
    case Algorithm::prim_mst: return "prim_mst";
  }
  return "unknown";
}

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::betweenness, Algorithm::bfs, Algorithm::label_propagation,
                                               Algorithm::pagerank, Algorithm::prim_mst};

inline std::optional<Algorithm> parse_algorithm(std::string_view s) {
  for (auto a : kAllAlgorithms) {
    if (to_string(a) == s) return a;
  }
  return std::nullopt;
}

struct BenchSpec {
  Algorithm algorithm = Algorithm::pagerank;
  int repetitions = 100;
  PageRankConfig pagerank;
  LpConfig label_propagation;
  BfsTermination bfs;
  // Start node for bfs and prim_mst, by name; the first node when unset.
  std::optional<std::string> start;
  std::filesystem::path dataset;
};

struct BenchReport {
  std::string algorithm;
  std::string label;  // algorithm plus variant, e.g. "bfs[max_depth=5]"
  int repetitions = 0;
  double first_run_seconds = 0.0;
  double subsequent_mean_seconds = 0.0;
  double subsequent_std_seconds = 0.0;  // population std over runs 2..n
  double min_seconds = 0.0;             // over runs 2..n
  double max_seconds = 0.0;
  std::vector<double> raw_seconds;  // one entry per repetition, in order
  double load_seconds = 0.0;        // graph build, measured outside the timed loop
  std::uint64_t checksum = 0;
  bool checksum_stable = true;
  std::string environment;
};

/// 64-bit FNV-1a over result values.
class Checksum {
public:
  void add(std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h_ ^= (x >> (8 * i)) & 0xFF;
      h_ *= 0x100000001B3ull;
    }
  }
  void add(double x) { add(std::bit_cast<std::uint64_t>(x)); }
  std::uint64_t value() const noexcept { return h_; }

private:
  std::uint64_t h_ = 0xCBF29CE484222325ull;
};

inline std::string environment_note() {
  std::ostringstream os;
#if defined(__clang__)
  os << "clang " << __clang_major__ << '.' << __clang_minor__;
#elif defined(__GNUC__)
  os << "gcc " << __GNUC__ << '.' << __GNUC_MINOR__;
#else
  os << "unknown compiler";
#endif
#ifdef NDEBUG
  os << ", optimized";
#else
  os << ", debug";
#endif
  os << ", single-threaded, steady_clock";
  return os.str();
}

struct RunStats {
  double mean = 0.0;
  double stddev = 0.0;
  double min = 0.0;
  double max = 0.0;
};

// Population statistics of the runs after the first.
inline RunStats subsequent_stats(const std::vector<double>& raw) {
  RunStats s;
  if (raw.size() < 2) return s;
  const auto first = raw.begin() + 1;
  const double n = static_cast<double>(raw.size() - 1);
  double sum = 0.0;
  for (auto it = first; it != raw.end(); ++it) sum += *it;
  s.mean = sum / n;
  double sq = 0.0;
  for (auto it = first; it != raw.end(); ++it) sq += (*it - s.mean) * (*it - s.mean);
  s.stddev = std::sqrt(sq / n);
  const auto [lo, hi] = std::minmax_element(first, raw.end());
  s.min = *lo;
  s.max = *hi;
  return s;
}

namespace detail {

inline std::uint64_t run_once(const Graph& g, const BenchSpec& spec, NodeId start) {
  Checksum c;
  switch (spec.algorithm) {
    case Algorithm::pagerank:
      for (double x : pagerank(g, spec.pagerank).scores) c.add(x);
      break;
    case Algorithm::betweenness:
      for (double x : betweenness(g).scores) c.add(x);
      break;
    case Algorithm::label_propagation:
      for (auto l : label_propagation(g, spec.label_propagation).labels) c.add(std::uint64_t{l});
      break;
    case Algorithm::bfs: {
      const auto r = bfs(g, start, spec.bfs);
      for (auto u : r.order) c.add(std::uint64_t{u});
      c.add(static_cast<std::uint64_t>(r.terminated_by));
      break;
    }
    case Algorithm::prim_mst: {
      const auto t = prim_mst(g, start);
      for (const auto& e : t.edges) {
        c.add(std::uint64_t{e.u});
        c.add(std::uint64_t{e.v});
      }
      c.add(t.total_weight);
      break;
    }
  }
  return c.value();
}

}  // namespace detail

inline std::string bench_label(const BenchSpec& spec) {
  std::string label(to_string(spec.algorithm));
  if (spec.algorithm == Algorithm::bfs && spec.bfs.max_depth) {
    label += "[max_depth=" + std::to_string(*spec.bfs.max_depth) + "]";
  }
  return label;
}

/// Times `spec.repetitions` invocations of the algorithm on an already
/// built graph. The first run is reported on its own; the rest feed the
/// steady-state statistics. Each result is folded into a checksum after its
/// timer stops, so the work cannot be optimised away.
inline BenchReport bench_graph(const Graph& g, const BenchSpec& spec) {
  if (spec.repetitions < 2) throw DomainError("bench: repetitions must be at least 2");
  if (g.node_count() == 0) throw DomainError("bench: empty graph");
  NodeId start = 0;
  if (spec.start) {
    auto id = g.find(*spec.start);
    if (!id) throw DomainError("bench: unknown start node '" + *spec.start + "'");
    start = *id;
  }

  BenchReport r;
  r.algorithm = std::string(to_string(spec.algorithm));
  r.label = bench_label(spec);
  r.repetitions = spec.repetitions;
  r.environment = environment_note();
  r.raw_seconds.reserve(static_cast<std::size_t>(spec.repetitions));
  using clock = std::chrono::steady_clock;
  for (int i = 0; i < spec.repetitions; ++i) {
    const auto t0 = clock::now();
    const auto sum = detail::run_once(g, spec, start);
    const auto t1 = clock::now();
    r.raw_seconds.push_back(std::chrono::duration<double>(t1 - t0).count());
    if (i == 0) {
      r.checksum = sum;
    } else if (sum != r.checksum) {
      r.checksum_stable = false;
    }
  }
  r.first_run_seconds = r.raw_seconds.front();
  const auto s = subsequent_stats(r.raw_seconds);
  r.subsequent_mean_seconds = s.mean;
  r.subsequent_std_seconds = s.stddev;
  r.min_seconds = s.min;
  r.max_seconds = s.max;
  return r;
}

/// Loads `spec.dataset` (untimed by the loop), then benchmarks.
inline BenchReport run_bench(const BenchSpec& spec) {
  const auto t0 = std::chrono::steady_clock::now();
  const Graph g = load_edge_csv(spec.dataset);
  const auto t1 = std::chrono::steady_clock::now();
  auto r = bench_graph(g, spec);
  r.load_seconds = std::chrono::duration<double>(t1 - t0).count();
  return r;
}

// `<iteration>,<seconds>` per line, iterations 1-based.
inline void write_raw_log(std::ostream& out, const BenchReport& r) {
  for (std::size_t i = 0; i < r.raw_seconds.size(); ++i) {
    out << (i + 1) << ',' << format_real(r.raw_seconds[i]) << '\n';
  }
}

inline std::vector<double> read_raw_log(std::istream& in) {
  std::vector<double> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw DomainError("raw log: malformed line '" + line + "'");
    out.push_back(std::stod(line.substr(comma + 1)));
  }
  return out;
}

struct BenchSummaryRow {
  std::string label;
  int repetitions = 0;
  double first_run_seconds = 0.0;
  double subsequent_mean_seconds = 0.0;
  double subsequent_std_seconds = 0.0;
  double first_to_mean_ratio = 0.0;
};

/// One row per report, sorted by label.
inline std::vector<BenchSummaryRow> summarize(const std::vector<BenchReport>& reports) {
  if (reports.empty()) throw DomainError("summarize: no reports");
  std::vector<BenchSummaryRow> rows;
  for (const auto& r : reports) {
    const double ratio = r.subsequent_mean_seconds > 0.0 ? r.first_run_seconds / r.subsequent_mean_seconds : 0.0;
    rows.push_back({r.label, r.repetitions, r.first_run_seconds, r.subsequent_mean_seconds,
                    r.subsequent_std_seconds, ratio});
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.label < b.label; });
  return rows;
}

inline void render_summary(std::ostream& out, const std::vector<BenchSummaryRow>& rows) {
  out << std::left << std::setw(24) << "algorithm" << std::right << std::setw(6) << "reps" << std::setw(14)
      << "first (s)" << std::setw(14) << "mean (s)" << std::setw(14) << "std (s)" << std::setw(10) << "first/mean"
      << '\n';
  const auto flags = out.flags();
  for (const auto& r : rows) {
    out << std::left << std::setw(24) << r.label << std::right << std::setw(6) << r.repetitions << std::scientific
        << std::setprecision(4) << std::setw(14) << r.first_run_seconds << std::setw(14) << r.subsequent_mean_seconds
        << std::setw(14) << r.subsequent_std_seconds << std::fixed << std::setprecision(2) << std::setw(10)
        << r.first_to_mean_ratio << '\n';
    out.flags(flags);
  }
}

}  // namespace gds

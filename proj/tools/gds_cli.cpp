// gds: batch command line over Source,Target,weight edge lists.
//
//   gds ingest   --input FILE [--validate-only] [--out FILE]
//   gds query    --input FILE --preset Q1|Q2|Q3|Q4 [--k N] [--seed S] [--max-depth D]
//   gds predict  --input FILE --config FILE [--out DIR]
//   gds bench    --input FILE --algorithm NAME|all [--repetitions N] --out DIR
//   gds generate --kind character|planted|gnm --out FILE [--seed S] ...
//
// JSON goes to stdout, diagnostics to stderr. Exit status is 0 only on success.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gds/gds.hpp"

namespace fs = std::filesystem;

namespace {

struct Common {
  std::string input;
  std::string format = "json";
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--input", c.input, "Edge list CSV (Source,Target,weight)")->required();
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "table"}));
}

void emit(const gds::Json& j) { std::cout << j.dump(2) << '\n'; }

void write_file(const fs::path& path, const std::string& body) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << body;
}

// ---------------------------------------------------------------- ingest

int cmd_ingest(const Common& c, bool validate_only, const std::string& out) {
  gds::IngestStats stats;
  const auto g = gds::load_edge_csv(c.input, &stats);
  if (!validate_only && !out.empty()) {
    std::ostringstream os;
    gds::write_edge_csv(os, g);
    write_file(out, os.str());
  }
  if (c.format == "table") {
    std::cout << "rows                 " << stats.rows << '\n'
              << "nodes                " << stats.nodes << '\n'
              << "edges                " << stats.edges << '\n'
              << "duplicates resolved  " << stats.duplicates_resolved << '\n'
              << "self-loops dropped   " << stats.self_loops_dropped << '\n'
              << "errors               0\n";
    return 0;
  }
  auto j = gds::to_json(stats);
  j["errors"] = 0;
  emit(j);
  return 0;
}

// ----------------------------------------------------------------- query

struct QueryOptions {
  std::string preset;
  std::optional<std::size_t> k;
  std::uint64_t seed = 0;
  std::size_t max_depth = 5;
};

const std::map<std::string, std::string> kQuestions = {
    {"Q1", "Which are the houses that challenge the thrones and how influential are they?"},
    {"Q2", "Which are the most popular characters?"},
    {"Q3", "Which are the houses that challenge the thrones?"},
    {"Q4", "Who are the leading characters?"},
};

void print_ranked(const std::string& title, const std::vector<gds::RankedNode>& ranked) {
  std::cout << title << '\n';
  for (const auto& r : ranked) std::cout << "  " << std::left << std::setw(28) << r.node << r.score << '\n';
}

int cmd_query(const Common& c, const QueryOptions& q) {
  const auto g = gds::load_edge_csv(c.input);
  if (g.node_count() == 0) throw gds::DomainError("query: graph is empty");
  gds::Json out{{"preset", q.preset}, {"question", kQuestions.at(q.preset)}};
  const bool table = c.format == "table";

  if (q.preset == "Q1" || q.preset == "Q2") {
    const std::size_t k = q.k.value_or(1);
    const gds::PageRankConfig pr_cfg;
    const auto pr = gds::pagerank(g, pr_cfg);
    const auto bc = gds::betweenness(g);
    out["k"] = k;
    out["pagerank"] = gds::scores_to_json(g, "pagerank", gds::to_json(pr_cfg), pr, k);
    out["betweenness"] = gds::scores_to_json(g, "betweenness", gds::Json{{"normalized", false}}, bc, k);
    if (table) {
      std::cout << q.preset << ": " << kQuestions.at(q.preset) << '\n';
      print_ranked("pagerank", gds::top_k(g, pr, k));
      print_ranked("betweenness", gds::top_k(g, bc, k));
      return 0;
    }
  } else if (q.preset == "Q3") {
    gds::LpConfig lp_cfg;
    lp_cfg.seed = q.seed;
    const auto lp = gds::label_propagation(g, lp_cfg);
    out["label_propagation"] = gds::community_to_json(g, "label_propagation", q.seed, lp);
    if (g.edge_count() > 0) {
      const auto lv = gds::louvain(g, q.seed);
      out["louvain"] = gds::community_to_json(g, "louvain", q.seed, lv);
      out["louvain"]["modularity"] = gds::modularity(g, lv);
    } else {
      out["louvain"] = nullptr;
    }
    if (table) {
      std::cout << q.preset << ": " << kQuestions.at(q.preset) << '\n'
                << "label_propagation communities  " << lp.community_count << '\n';
      if (g.edge_count() > 0) std::cout << "louvain communities            " << out["louvain"]["community_count"] << '\n';
      return 0;
    }
  } else {
    // Leading characters: start at the top PageRank node, take its BFS reach
    // within max_depth, and rank reached nodes by their degree in the MST.
    const std::size_t k = q.k.value_or(10);
    const auto pr = gds::pagerank(g);
    const auto start = *g.find(gds::top_k(g, pr, 1).front().node);
    gds::BfsTermination term;
    term.max_depth = q.max_depth;
    const auto reach = gds::bfs(g, start, term);
    const auto tree = gds::prim_mst(g, start);
    std::vector<std::size_t> tree_degree(g.node_count(), 0);
    for (const auto& e : tree.edges) {
      ++tree_degree[e.u];
      ++tree_degree[e.v];
    }
    gds::ScoreMap membership;
    membership.scores.assign(g.node_count(), -1.0);
    for (auto u : reach.order) membership.scores[u] = static_cast<double>(tree_degree[u]);
    const auto leading = gds::top_k(g, membership, std::min(k, reach.order.size()));

    gds::Json lead = gds::Json::array();
    for (const auto& r : leading) {
      const auto id = *g.find(r.node);
      const auto pos = std::find(reach.order.begin(), reach.order.end(), id) - reach.order.begin();
      lead.push_back({{"node", r.node}, {"mst_degree", tree_degree[id]}, {"depth", reach.depth[static_cast<std::size_t>(pos)]}});
    }
    out["k"] = k;
    out["max_depth"] = q.max_depth;
    out["bfs"] = gds::bfs_to_json(g, start, reach);
    out["mst"] = gds::mst_to_json(g, start, tree);
    out["leading"] = std::move(lead);
    if (table) {
      std::cout << q.preset << ": " << kQuestions.at(q.preset) << '\n'
                << "start " << g.name(start) << ", reached " << reach.order.size() << " nodes within depth "
                << q.max_depth << ", MST weight " << tree.total_weight << '\n';
      for (const auto& r : leading) std::cout << "  " << std::left << std::setw(28) << r.node << r.score << '\n';
      return 0;
    }
  }
  emit(out);
  return 0;
}

// --------------------------------------------------------------- predict

int cmd_predict(const Common& c, const std::string& config, const std::string& out_dir) {
  const auto cfg = gds::load_pipeline_config(config);
  const auto g = gds::load_edge_csv(c.input);
  const auto run = gds::run_pipeline_detailed(g, cfg);
  auto j = gds::to_json(run.report);
  j["train_size"] = run.train_size;

  if (!out_dir.empty()) {
    std::ostringstream scores;
    scores << "u,v,label,score\n";
    for (std::size_t i = 0; i < run.test_pairs.size(); ++i) {
      const auto& p = run.test_pairs[i];
      scores << g.name(p.u) << ',' << g.name(p.v) << ',' << (p.positive ? 1 : 0) << ','
             << gds::format_real(run.test_scores[i]) << '\n';
    }
    write_file(fs::path(out_dir) / "scores.csv", scores.str());
    write_file(fs::path(out_dir) / "report.json", j.dump(2) + "\n");
  }
  if (c.format == "table") {
    gds::render_eval_table(std::cout, std::span<const gds::EvalReport>(&run.report, 1));
    std::cout << "\nfeature importances\n";
    for (const auto& [name, value] : run.report.importances) {
      std::cout << "  " << std::left << std::setw(20) << name << std::fixed << std::setprecision(4) << value << '\n';
    }
    return 0;
  }
  emit(j);
  return 0;
}

// ----------------------------------------------------------------- bench

struct BenchOptions {
  std::vector<std::string> algorithms;
  int repetitions = 100;
  std::optional<std::size_t> max_depth;
  std::uint64_t seed = 0;
  std::optional<std::string> start;
  std::string out;
};

std::string file_stem(const gds::BenchSpec& s) {
  std::string stem(gds::to_string(s.algorithm));
  if (s.bfs.max_depth) stem += "_depth" + std::to_string(*s.bfs.max_depth);
  return stem;
}

int cmd_bench(const Common& c, const BenchOptions& b) {
  std::vector<gds::BenchSpec> specs;
  auto make = [&](gds::Algorithm a, std::optional<std::size_t> depth) {
    gds::BenchSpec s;
    s.algorithm = a;
    s.repetitions = b.repetitions;
    s.label_propagation.seed = b.seed;
    s.bfs.max_depth = depth;
    s.start = b.start;
    s.dataset = c.input;
    specs.push_back(s);
  };
  for (const auto& name : b.algorithms) {
    if (name == "all") {
      for (auto a : gds::kAllAlgorithms) make(a, std::nullopt);
      make(gds::Algorithm::bfs, b.max_depth.value_or(5));
      continue;
    }
    const auto a = gds::parse_algorithm(name);
    if (!a) throw CLI::ValidationError("--algorithm", "unknown algorithm '" + name + "'");
    make(*a, *a == gds::Algorithm::bfs ? b.max_depth : std::nullopt);
  }

  // Load once, outside every timed loop.
  const auto t0 = std::chrono::steady_clock::now();
  const auto g = gds::load_edge_csv(c.input);
  const double load = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::vector<gds::BenchReport> reports;
  gds::Json runs = gds::Json::array();
  const fs::path dir(b.out);
  for (const auto& s : specs) {
    auto r = gds::bench_graph(g, s);
    r.load_seconds = load;
    const auto stem = file_stem(s);
    std::ostringstream raw;
    gds::write_raw_log(raw, r);
    write_file(dir / (stem + ".raw.log"), raw.str());
    write_file(dir / (stem + ".report.json"), gds::to_json(r).dump(2) + "\n");
    runs.push_back({{"label", r.label},
                    {"repetitions", r.repetitions},
                    {"checksum", r.checksum},
                    {"checksum_stable", r.checksum_stable},
                    {"report", stem + ".report.json"},
                    {"raw_log", stem + ".raw.log"}});
    reports.push_back(std::move(r));
  }
  const auto rows = gds::summarize(reports);
  write_file(dir / "summary.json", gds::to_json(rows).dump(2) + "\n");
  std::ostringstream text;
  gds::render_summary(text, rows);
  write_file(dir / "summary.txt", text.str());

  if (c.format == "table") {
    std::cout << text.str();
    return 0;
  }
  emit(gds::Json{{"dataset", fs::path(c.input).filename().string()}, {"runs", std::move(runs)}});
  return 0;
}

// -------------------------------------------------------------- generate

struct GenerateOptions {
  std::string kind = "character";
  std::string out;
  std::uint64_t seed = 0;
  std::size_t nodes = 800;
  std::size_t edges = 3000;
  std::size_t blocks = 2;
  std::size_t block_size = 100;
  double p_in = 0.2;
  double p_out = 0.01;
};

int cmd_generate(const GenerateOptions& o) {
  std::ostringstream os;
  if (o.kind == "character") {
    const auto rows = gds::character_network(o.nodes, o.edges, o.seed);
    os << gds::kEdgeListHeader << '\n';
    for (const auto& r : rows) os << r.source << ',' << r.target << ',' << gds::format_real(r.weight) << '\n';
  } else if (o.kind == "planted") {
    gds::write_edge_csv(os, gds::planted_partition(o.blocks, o.block_size, o.p_in, o.p_out, o.seed).graph);
  } else {
    gds::write_edge_csv(os, gds::random_gnm(o.nodes, o.edges, o.seed));
  }
  write_file(o.out, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph data science engine: ingestion, query presets, link prediction, benchmarking"};
  app.require_subcommand(1);

  Common common;

  auto* ingest = app.add_subcommand("ingest", "Validate an edge list and report counts");
  add_common(ingest, common);
  bool validate_only = false;
  std::string ingest_out;
  ingest->add_flag("--validate-only", validate_only, "Only validate; never write output");
  ingest->add_option("--out", ingest_out, "Write the cleaned, deduplicated edge list here");

  auto* query = app.add_subcommand("query", "Run a query preset (Q1-Q4)");
  add_common(query, common);
  QueryOptions qo;
  query->add_option("--preset", qo.preset, "Q1|Q2: centrality, Q3: communities, Q4: BFS + MST")
      ->required()
      ->check(CLI::IsMember({"Q1", "Q2", "Q3", "Q4"}));
  query->add_option("--k", qo.k, "Result count (default 1 for Q1/Q2, 10 for Q4)")->check(CLI::PositiveNumber);
  query->add_option("--seed", qo.seed, "Seed for community detection");
  query->add_option("--max-depth", qo.max_depth, "BFS depth bound for Q4");

  auto* predict = app.add_subcommand("predict", "Run the link-prediction pipeline");
  add_common(predict, common);
  std::string config, predict_out;
  predict->add_option("--config", config, "Pipeline INI file")->required()->check(CLI::ExistingFile);
  predict->add_option("--out", predict_out, "Directory for report.json and scores.csv");

  auto* bench = app.add_subcommand("bench", "Time algorithms: first run vs. steady state");
  add_common(bench, common);
  BenchOptions bo;
  bench->add_option("--algorithm", bo.algorithms, "pagerank|betweenness|label_propagation|bfs|prim_mst|all")
      ->required();
  bench->add_option("--repetitions", bo.repetitions, "Timed runs per algorithm")->check(CLI::Range(2, 1000000));
  bench->add_option("--max-depth", bo.max_depth, "Depth bound for bfs");
  bench->add_option("--seed", bo.seed, "Seed for label propagation");
  bench->add_option("--start", bo.start, "Start node name for bfs and prim_mst");
  bench->add_option("--out", bo.out, "Output directory for reports and raw logs")->required();

  auto* generate = app.add_subcommand("generate", "Write a synthetic edge list");
  GenerateOptions go;
  generate->add_option("--kind", go.kind)->check(CLI::IsMember({"character", "planted", "gnm"}));
  generate->add_option("--out", go.out)->required();
  generate->add_option("--seed", go.seed);
  generate->add_option("--nodes", go.nodes);
  generate->add_option("--edges", go.edges);
  generate->add_option("--blocks", go.blocks);
  generate->add_option("--block-size", go.block_size);
  generate->add_option("--p-in", go.p_in);
  generate->add_option("--p-out", go.p_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*ingest) return cmd_ingest(common, validate_only, ingest_out);
    if (*query) return cmd_query(common, qo);
    if (*predict) return cmd_predict(common, config, predict_out);
    if (*bench) return cmd_bench(common, bo);
    if (*generate) return cmd_generate(go);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

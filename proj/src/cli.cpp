#include "semicore/cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "semicore/convert.hpp"
#include "semicore/decompose.hpp"
#include "semicore/disk_graph.hpp"
#include "semicore/error.hpp"
#include "semicore/maintain.hpp"
#include "semicore/reports.hpp"
#include "semicore/trace.hpp"
#include "semicore/verify.hpp"

namespace semicore {

namespace fs = std::filesystem;

namespace {

struct Config {
  std::string input;
  std::string graph_dir;
  std::string out;
  std::string algo = "semicore-star";
  std::string insert_algo = "star";
  std::string cores_path;
  std::string report_path;
  std::string trace_path;
  std::string ops_path;
  uint64_t block_size = 4096;
  uint64_t buffer_capacity = UpdateBuffer::kDefaultCapacity;
  uint64_t seed = 42;
  bool no_flush = false;
};

std::string check_block_size(const std::string& s) {
  uint64_t b = 0;
  try {
    std::size_t pos = 0;
    b = std::stoull(s, &pos);
    if (pos != s.size()) return "block size must be an integer";
  } catch (const std::exception&) {
    return "block size must be an integer";
  }
  if (b < 64 || (b & (b - 1)) != 0) return "block size must be a power of two >= 64";
  return {};
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::storage, "cannot create " + path);
  out << content;
  if (!out) throw Error(Errc::storage, "write failure on " + path);
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty())
    std::cout << content;
  else
    write_text_file(path, content);
}

DiskGraph open_graph(const Config& cfg) {
  DiskGraph::Options opts;
  opts.block_size = cfg.block_size;
  opts.buffer_capacity = cfg.buffer_capacity;
  return DiskGraph::open(cfg.graph_dir, opts);
}

DecompResult run_algo(DiskGraph& g, const std::string& algo, const RunHooks& hooks) {
  if (algo == "semicore") return semi_core(g, hooks);
  if (algo == "semicore-plus") return semi_core_plus(g, hooks);
  if (algo == "semicore-star") return semi_core_star(g, hooks);
  if (algo == "imcore") return im_core(g, hooks);
  throw Error(Errc::argument, "unknown algorithm " + algo);
}

int do_convert(const Config& cfg) {
  std::ifstream in(cfg.input, std::ios::binary);
  if (!in) throw Error(Errc::storage, "cannot open " + cfg.input);
  ConvertSummary s = build_from_edge_list(in, cfg.out);
  std::cout << "n=" << s.n << " m=" << s.m << " skipped_self_loops=" << s.skipped_self_loops
            << " skipped_duplicates=" << s.skipped_duplicates << "\n";
  if (s.skipped_self_loops || s.skipped_duplicates)
    std::cerr << "warning: skipped " << s.skipped_self_loops << " self-loops and "
              << s.skipped_duplicates << " duplicate edges\n";
  return 0;
}

int do_decompose(const Config& cfg) {
  DiskGraph g = open_graph(cfg);
  TraceTable table;
  RunHooks hooks;
  if (!cfg.trace_path.empty()) hooks.trace = &table;
  DecompResult res = run_algo(g, cfg.algo, hooks);
  if (!cfg.cores_path.empty()) {
    std::ostringstream out;
    write_cores_tsv(out, res.state.core);
    write_text_file(cfg.cores_path, out.str());
  }
  if (!cfg.trace_path.empty()) {
    std::ostringstream out;
    table.write_tsv(out);
    write_text_file(cfg.trace_path, out.str());
  }
  emit(cfg.report_path, run_report_json(res.report));
  return 0;
}

int do_update(const Config& cfg) {
  DiskGraph g = open_graph(cfg);
  DecompResult base = semi_core_star(g);
  std::ifstream in(cfg.ops_path, std::ios::binary);
  if (!in) throw Error(Errc::storage, "cannot open " + cfg.ops_path);
  std::vector<EdgeOp> ops = parse_ops(in);
  InsertAlgo algo = cfg.insert_algo == "star" ? InsertAlgo::Star : InsertAlgo::TwoPhase;
  std::vector<MaintainReport> reports = apply_stream(g, base.state, ops, algo);
  if (!cfg.no_flush) g.flush();
  if (!cfg.cores_path.empty()) {
    std::ostringstream out;
    write_cores_tsv(out, base.state.core);
    write_text_file(cfg.cores_path, out.str());
  }
  emit(cfg.report_path, maintain_reports_json(reports));
  return 0;
}

int do_verify(const Config& cfg) {
  DiskGraph g = open_graph(cfg);
  uint64_t n = g.node_count();
  EdgeList edges;
  std::vector<NodeId> nbrs;
  for (uint64_t v = 0; v < n; ++v) {
    g.neighbors_into(static_cast<NodeId>(v), nbrs);
    for (NodeId u : nbrs)
      if (u > v) edges.push_back({static_cast<NodeId>(v), u});
  }
  std::vector<uint32_t> expected = brute_force_core(n, edges);

  std::vector<uint32_t> got;
  if (!cfg.cores_path.empty()) {
    std::ifstream in(cfg.cores_path, std::ios::binary);
    if (!in) throw Error(Errc::storage, "cannot open " + cfg.cores_path);
    got = read_cores_tsv(in);
    if (got.size() != n) {
      std::cerr << "verify: cores file has " << got.size() << " nodes, graph has " << n << "\n";
      return 1;
    }
  } else {
    got = semi_core_star(g).state.core;
  }

  auto diff = compare_cores(got, expected);
  if (!diff.empty()) {
    std::cerr << "verify: " << diff.size() << " mismatches\n";
    for (std::size_t i = 0; i < std::min<std::size_t>(diff.size(), 10); ++i)
      std::cerr << "  node " << diff[i].node << ": got " << diff[i].a << ", expected "
                << diff[i].b << "\n";
    return 1;
  }
  uint32_t k_max = 0;
  for (uint32_t c : expected) k_max = std::max(k_max, c);
  std::cout << "verify: OK, n=" << n << " k_max=" << k_max << "\n";
  return 0;
}

int do_bench(const Config& cfg) {
  struct BenchGraph {
    std::string name;
    uint64_t n;
    EdgeList edges;
  };
  std::vector<BenchGraph> graphs;
  graphs.push_back({"g9", 9, sample_graph_g9()});
  graphs.push_back(
      {"er-n200-d8", 200, gen_random_graph(GraphKind::ErdosRenyi, 200, 8.0 / 199.0, cfg.seed)});
  graphs.push_back(
      {"er-n1000-d10", 1000,
       gen_random_graph(GraphKind::ErdosRenyi, 1000, 10.0 / 999.0, cfg.seed + 1)});
  graphs.push_back(
      {"pa-n1000-k4", 1000, gen_random_graph(GraphKind::Preferential, 1000, 4, cfg.seed + 2)});

  std::ostringstream out;
  out << "graph\talgorithm\tn\tm\tk_max\titerations\tnode_computations\tread_ios\twrite_ios"
         "\telapsed_seconds\n";
  fs::path work = fs::temp_directory_path() /
                  ("semicore-bench-" + std::to_string(::getpid()) + "-" +
                   std::to_string(cfg.seed));
  for (const auto& bg : graphs) {
    fs::path dir = work / bg.name;
    build_from_edges(bg.n, bg.edges, dir);
    for (const char* algo : {"semicore", "semicore-plus", "semicore-star", "imcore"}) {
      DiskGraph g = DiskGraph::open(dir, {cfg.block_size, cfg.buffer_capacity});
      DecompResult res = run_algo(g, algo, {});
      char line[256];
      std::snprintf(line, sizeof(line), "%s\t%s\t%lu\t%lu\t%u\t%lu\t%lu\t%lu\t%lu\t%.6f\n",
                    bg.name.c_str(), algo, static_cast<unsigned long>(bg.n),
                    static_cast<unsigned long>(bg.edges.size()), res.report.k_max,
                    static_cast<unsigned long>(res.report.iterations),
                    static_cast<unsigned long>(res.report.node_computations),
                    static_cast<unsigned long>(res.report.read_ios),
                    static_cast<unsigned long>(res.report.write_ios),
                    res.report.elapsed_seconds);
      out << line;
    }
  }
  std::error_code ec;
  fs::remove_all(work, ec);
  emit(cfg.out, out.str());
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  Config cfg;
  CLI::App app{"semi-external k-core decomposition and maintenance"};
  app.require_subcommand(1);

  auto add_block_size = [&](CLI::App* sub) {
    sub->add_option("--block-size", cfg.block_size, "I/O accounting block size")
        ->check(CLI::Validator(check_block_size, "POW2"));
    sub->add_option("--buffer-capacity", cfg.buffer_capacity,
                    "update buffer flush threshold (directed entries)");
  };

  CLI::App* convert = app.add_subcommand("convert", "edge list text -> graph directory");
  convert->add_option("--input", cfg.input, "edge list file, 'u v' per line")->required();
  convert->add_option("--out", cfg.out, "output graph directory")->required();

  CLI::App* decompose = app.add_subcommand("decompose", "run a core decomposition");
  decompose->add_option("--graph", cfg.graph_dir, "graph directory")->required();
  decompose->add_option("--algo", cfg.algo, "semicore|semicore-plus|semicore-star|imcore")
      ->check(CLI::IsMember({"semicore", "semicore-plus", "semicore-star", "imcore"}));
  decompose->add_option("--cores", cfg.cores_path, "write cores.tsv here");
  decompose->add_option("--report", cfg.report_path, "write run report JSON here");
  decompose->add_option("--trace", cfg.trace_path, "write per-iteration trace TSV here");
  add_block_size(decompose);

  CLI::App* update = app.add_subcommand("update", "apply edge updates incrementally");
  update->add_option("--graph", cfg.graph_dir, "graph directory")->required();
  update->add_option("--ops", cfg.ops_path, "ops file, '+ u v' / '- u v' per line")->required();
  update->add_option("--insert-algo", cfg.insert_algo, "two-phase|star")
      ->check(CLI::IsMember({"two-phase", "star"}));
  update->add_option("--cores", cfg.cores_path, "write final cores.tsv here");
  update->add_option("--report", cfg.report_path, "write per-op report JSON array here");
  update->add_flag("--no-flush", cfg.no_flush, "leave updates in the buffer");
  add_block_size(update);

  CLI::App* verify = app.add_subcommand("verify", "check cores against brute force");
  verify->add_option("--graph", cfg.graph_dir, "graph directory")->required();
  verify->add_option("--cores", cfg.cores_path, "cores.tsv to check (default: run semicore-star)");
  add_block_size(verify);

  CLI::App* bench = app.add_subcommand("bench", "algorithm x graph matrix, TSV summary");
  bench->add_option("--out", cfg.out, "output TSV path (default stdout)");
  bench->add_option("--seed", cfg.seed, "generator seed");
  add_block_size(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (convert->parsed()) return do_convert(cfg);
    if (decompose->parsed()) return do_decompose(cfg);
    if (update->parsed()) return do_update(cfg);
    if (verify->parsed()) return do_verify(cfg);
    if (bench->parsed()) return do_bench(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace semicore

#include <doctest.h>

#include <random>

#include "semicore/decompose.hpp"
#include "semicore/verify.hpp"
#include "test_util.hpp"

using namespace semicore;
using semicore::testing::TempDir;
using semicore::testing::graph_from_edges;

namespace {

const std::vector<uint32_t> kG9Cores{3, 3, 3, 3, 2, 2, 2, 2, 1};
const std::vector<NodeId> kAllNine{0, 1, 2, 3, 4, 5, 6, 7, 8};

struct StrictDecreaseSink : TraceSink {
  bool ok = true;
  void on_node_computed(uint64_t iteration, NodeId, uint32_t before, uint32_t after) override {
    if (iteration >= 2 && after >= before) ok = false;
  }
};

std::vector<uint32_t> recomputed_cnt(DiskGraph& g, const std::vector<uint32_t>& core) {
  std::vector<uint32_t> cnt(core.size(), 0);
  std::vector<NodeId> nbrs;
  for (NodeId v = 0; v < core.size(); ++v) {
    g.neighbors_into(v, nbrs);
    for (NodeId u : nbrs)
      if (core[u] >= core[v]) ++cnt[v];
  }
  return cnt;
}

}  // namespace

TEST_CASE("semicore reproduces the G9 iteration table") {
  TempDir dir;
  DiskGraph g = graph_from_edges(dir, 9, sample_graph_g9());
  TraceTable trace;
  DecompResult res = semi_core(g, {.trace = &trace});

  CHECK(res.state.core == kG9Cores);
  CHECK(res.report.iterations == 4);
  CHECK(res.report.node_computations == 36);
  CHECK(res.report.k_max == 3);

  REQUIRE(trace.iterations() == 4);
  CHECK(trace.row(0) == std::vector<uint32_t>{3, 3, 4, 6, 3, 5, 3, 2, 1});
  CHECK(trace.row(1) == std::vector<uint32_t>{3, 3, 3, 3, 3, 3, 2, 2, 1});
  CHECK(trace.row(2) == std::vector<uint32_t>{3, 3, 3, 3, 3, 2, 2, 2, 1});
  CHECK(trace.row(3) == std::vector<uint32_t>{3, 3, 3, 3, 2, 2, 2, 2, 1});
  CHECK(trace.row(4) == std::vector<uint32_t>{3, 3, 3, 3, 2, 2, 2, 2, 1});
  for (std::size_t i = 1; i <= 4; ++i) CHECK(trace.recomputed(i) == kAllNine);
}

TEST_CASE("semicore-plus recomputes only triggered nodes") {
  TempDir dir;
  DiskGraph g = graph_from_edges(dir, 9, sample_graph_g9());
  TraceTable trace;
  DecompResult res = semi_core_plus(g, {.trace = &trace});

  CHECK(res.state.core == kG9Cores);
  CHECK(res.report.iterations == 4);
  CHECK(res.report.node_computations == 23);

  REQUIRE(trace.iterations() == 4);
  CHECK(trace.recomputed(1) == kAllNine);
  CHECK(trace.recomputed(2) == kAllNine);
  CHECK(trace.recomputed(3) == std::vector<NodeId>{3, 4, 5});
  CHECK(trace.recomputed(4) == std::vector<NodeId>{2, 3});
  CHECK(trace.total_recomputed() == 23);
}

TEST_CASE("semicore-star recomputes only nodes guaranteed to change") {
  TempDir dir;
  DiskGraph g = graph_from_edges(dir, 9, sample_graph_g9());
  TraceTable trace;
  DecompResult res = semi_core_star(g, {.trace = &trace});

  CHECK(res.state.core == kG9Cores);
  CHECK(res.report.iterations == 3);
  CHECK(res.report.node_computations == 11);

  REQUIRE(trace.iterations() == 3);
  CHECK(trace.recomputed(1) == kAllNine);
  CHECK(trace.recomputed(2) == std::vector<NodeId>{5});
  CHECK(trace.recomputed(3) == std::vector<NodeId>{4});

  // the converged cnt sequence satisfies its defining equation
  REQUIRE(res.state.cnt_valid);
  auto want = recomputed_cnt(g, res.state.core);
  for (NodeId v = 0; v < 9; ++v) CHECK(res.state.cnt[v] == static_cast<int32_t>(want[v]));
  CHECK(res.state.cnt == std::vector<int32_t>{3, 3, 3, 3, 3, 4, 3, 2, 1});
}

TEST_CASE("triangle converges in one pass") {
  TempDir dir;
  DiskGraph g = graph_from_edges(dir, 3, {{0, 1}, {1, 2}, {0, 2}});
  DecompResult res = semi_core(g);
  CHECK(res.state.core == std::vector<uint32_t>{2, 2, 2});
  CHECK(res.report.iterations == 1);
}

TEST_CASE("empty graph decomposes vacuously") {
  TempDir dir;
  DiskGraph g = graph_from_edges(dir, 0, {});
  for (auto* fn : {semi_core, semi_core_plus, semi_core_star, im_core}) {
    DiskGraph h = DiskGraph::open(dir.path() / "graph");
    DecompResult res = fn(h, {});
    CHECK(res.state.core.empty());
    CHECK(res.report.iterations == 1);
    CHECK(res.report.k_max == 0);
  }
  (void)g;
}

TEST_CASE("edgeless graph: plus computes every node once") {
  TempDir dir;
  DiskGraph g = graph_from_edges(dir, 2, {{0, 1}});
  g.apply_edge_update(EdgeUpdateKind::Delete, 0, 1);
  g.flush();
  DecompResult res = semi_core_plus(g);
  CHECK(res.state.core == std::vector<uint32_t>{0, 0});
  CHECK(res.report.iterations == 1);
  CHECK(res.report.node_computations == 2);
  // star skips degree-0 nodes outright
  DecompResult star = semi_core_star(g);
  CHECK(star.state.core == std::vector<uint32_t>{0, 0});
  CHECK(star.report.node_computations == 0);
}

TEST_CASE("star graph K_1,5") {
  // Bounds collapse in the first pass: the center drops 5 -> 1, the leaves
  // confirm 1; no deferred work remains, so the loop exits after pass 1.
  TempDir dir;
  EdgeList star{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}};
  DiskGraph g = graph_from_edges(dir, 6, star);
  TraceTable trace;
  DecompResult res = semi_core_star(g, {.trace = &trace});
  CHECK(res.state.core == std::vector<uint32_t>{1, 1, 1, 1, 1, 1});
  CHECK(trace.recomputed(1).size() == 6);
  CHECK(res.report.node_computations == 6);
  CHECK(res.report.iterations == 1);
}

TEST_CASE("imcore matches the pinned examples") {
  TempDir dir;
  DiskGraph g9 = graph_from_edges(dir, 9, sample_graph_g9());
  CHECK(im_core(g9).state.core == kG9Cores);

  TempDir dir2;
  DiskGraph k4 = graph_from_edges(dir2, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(im_core(k4).state.core == std::vector<uint32_t>{3, 3, 3, 3});

  TempDir dir3;
  DiskGraph path3 = graph_from_edges(dir3, 3, {{0, 1}, {1, 2}});
  CHECK(im_core(path3).state.core == std::vector<uint32_t>{1, 1, 1});
}

TEST_CASE("all algorithms agree with brute force on random graphs") {
  for (uint64_t seed = 1; seed <= 12; ++seed) {
    uint64_t n = 10 + (seed * 17) % 150;
    double avg_deg = 2.0 + static_cast<double>(seed % 9) * 2.0;
    EdgeList edges =
        seed % 3 == 0
            ? gen_random_graph(GraphKind::Preferential, n, 1.0 + static_cast<double>(seed % 4),
                               seed)
            : gen_random_graph(GraphKind::ErdosRenyi, n, std::min(1.0, avg_deg / double(n - 1)),
                               seed);
    std::vector<uint32_t> oracle = brute_force_core(n, edges);

    TempDir dir;
    graph_from_edges(dir, n, edges);
    StrictDecreaseSink strict;
    for (auto* fn : {semi_core, semi_core_plus, semi_core_star, im_core}) {
      DiskGraph g = DiskGraph::open(dir.path() / "graph");
      RunHooks hooks;
      if (fn == semi_core_star) hooks.trace = &strict;
      DecompResult res = fn(g, hooks);
      CHECK(compare_cores(res.state.core, oracle).empty());
      CHECK(res.report.write_ios == 0);
      CHECK(res.report.iterations <= n + 1);
    }
    CHECK(strict.ok);
    CHECK(locality_fixpoint_holds(n, edges, oracle));
  }
}

TEST_CASE("work ordering: star <= plus <= basic") {
  TempDir dir;
  graph_from_edges(dir, 9, sample_graph_g9());
  DiskGraph g1 = DiskGraph::open(dir.path() / "graph");
  DiskGraph g2 = DiskGraph::open(dir.path() / "graph");
  DiskGraph g3 = DiskGraph::open(dir.path() / "graph");
  uint64_t basic = semi_core(g1).report.node_computations;
  uint64_t plus = semi_core_plus(g2).report.node_computations;
  uint64_t star = semi_core_star(g3).report.node_computations;
  CHECK(star == 11);
  CHECK(plus == 23);
  CHECK(basic == 36);

  for (uint64_t seed = 50; seed < 56; ++seed) {
    EdgeList edges = gen_random_graph(GraphKind::ErdosRenyi, 80, 0.08, seed);
    TempDir d;
    graph_from_edges(d, 80, edges);
    DiskGraph a = DiskGraph::open(d.path() / "graph");
    DiskGraph b = DiskGraph::open(d.path() / "graph");
    DiskGraph c = DiskGraph::open(d.path() / "graph");
    uint64_t nb = semi_core(a).report.node_computations;
    uint64_t np = semi_core_plus(b).report.node_computations;
    uint64_t ns = semi_core_star(c).report.node_computations;
    CHECK(ns <= np);
    CHECK(np <= nb);
  }
}

TEST_CASE("per-node bounds descend monotonically and stay above the truth") {
  EdgeList edges = gen_random_graph(GraphKind::ErdosRenyi, 60, 0.1, 23);
  std::vector<uint32_t> oracle = brute_force_core(60, edges);
  TempDir dir;
  DiskGraph g = graph_from_edges(dir, 60, edges);
  TraceTable trace;
  semi_core_plus(g, {.trace = &trace});
  for (std::size_t i = 1; i <= trace.iterations(); ++i) {
    const auto& prev = trace.row(i - 1);
    const auto& row = trace.row(i);
    for (std::size_t v = 0; v < row.size(); ++v) {
      CHECK(row[v] <= prev[v]);
      CHECK(row[v] >= oracle[v]);
    }
  }
}

TEST_CASE("full-scan cost: one table pass per iteration") {
  // With B=64, G9's node table is 108 bytes (2 blocks) and its edge table
  // 120 bytes (2 blocks); semicore scans both once per iteration, so the
  // per-node charges must collapse to 4 blocks per pass.
  TempDir dir;
  DiskGraph::Options opts;
  opts.block_size = 64;
  DiskGraph g = graph_from_edges(dir, 9, sample_graph_g9(), opts);
  DecompResult res = semi_core(g);
  CHECK(res.report.iterations == 4);
  CHECK(res.report.read_ios == 4 * 4);
  CHECK(g.io_report().bytes_read == 4 * (108 + 120));
  CHECK(res.report.write_ios == 0);
}

TEST_CASE("star reads less than basic on the same graph") {
  TempDir dir;
  graph_from_edges(dir, 100, gen_random_graph(GraphKind::ErdosRenyi, 100, 0.08, 12));
  DiskGraph::Options opts;
  opts.block_size = 64;
  DiskGraph a = DiskGraph::open(dir.path() / "graph", opts);
  DiskGraph b = DiskGraph::open(dir.path() / "graph", opts);
  uint64_t basic = semi_core(a).report.read_ios;
  uint64_t star = semi_core_star(b).report.read_ios;
  CHECK(star <= basic);
}

TEST_CASE("trace changed counts equal row diffs") {
  TempDir dir;
  DiskGraph g = graph_from_edges(dir, 9, sample_graph_g9());
  TraceTable trace;
  semi_core(g, {.trace = &trace});
  // init->1 changes v2,v3,v5,v6; then v5; then v4; the last pass confirms
  CHECK(trace.changed_counts() == std::vector<uint64_t>{4, 1, 1, 0});
}

#include "semicore/decompose.hpp"

#include <algorithm>

#include "engine.hpp"

namespace semicore {

namespace detail {

uint32_t local_core_ids(const std::vector<uint32_t>& core, const std::vector<NodeId>& nbrs,
                        uint32_t c_old, std::vector<uint32_t>& hist) {
  if (c_old == 0 || nbrs.empty()) return 0;
  hist.assign(c_old + 1, 0);
  for (NodeId u : nbrs) ++hist[std::min(c_old, core[u])];
  uint32_t s = 0;
  for (uint32_t k = c_old; k >= 1; --k) {
    s += hist[k];
    if (s >= k) return k;
  }
  return 0;
}

uint32_t compute_cnt_ids(const std::vector<uint32_t>& core, const std::vector<NodeId>& nbrs,
                         uint32_t threshold) {
  uint32_t s = 0;
  for (NodeId u : nbrs)
    if (core[u] >= threshold) ++s;
  return s;
}

uint32_t max_core(const std::vector<uint32_t>& core) {
  uint32_t k = 0;
  for (uint32_t c : core) k = std::max(k, c);
  return k;
}

void star_converge(DiskGraph& g, CoreState& st, Scratch& sc, Counters& rc, TraceSink* trace) {
  uint64_t n = g.node_count();
  while (st.update) {
    st.update = false;
    NodeId next_min = n ? static_cast<NodeId>(n - 1) : 0;
    NodeId next_max = 0;
    ++rc.iterations;
    for (uint64_t v = st.v_min; n != 0 && v <= st.v_max; ++v) {
      NodeId node = static_cast<NodeId>(v);
      g.charge_node_entry(node);
      if (st.cnt[v] >= static_cast<int32_t>(st.core[v])) continue;
      g.neighbors_into(node, sc.nbrs);
      uint32_t c_old = st.core[v];
      uint32_t c_new = local_core_ids(st.core, sc.nbrs, c_old, sc.hist);
      st.core[v] = c_new;
      st.cnt[v] = static_cast<int32_t>(compute_cnt_ids(st.core, sc.nbrs, c_new));
      update_nbr_cnt(st, sc.nbrs, c_old, c_new);
      ++rc.node_computations;
      if (trace) trace->on_node_computed(rc.iterations, node, c_old, c_new);
      for (NodeId u : sc.nbrs)
        if (st.cnt[u] < static_cast<int32_t>(st.core[u]))
          update_range(st, next_min, next_max, u, node);
    }
    if (trace) trace->on_iteration_end(rc.iterations, st.core);
    st.v_min = next_min;
    st.v_max = next_max;
  }
}

}  // namespace detail

using detail::Counters;
using detail::Scratch;

uint32_t local_core(uint32_t c_old, std::span<const uint32_t> neighbor_cores) {
  if (c_old == 0 || neighbor_cores.empty()) return 0;
  std::vector<uint32_t> hist(c_old + 1, 0);
  for (uint32_t c : neighbor_cores) ++hist[std::min(c_old, c)];
  uint32_t s = 0;
  for (uint32_t k = c_old; k >= 1; --k) {
    s += hist[k];
    if (s >= k) return k;
  }
  return 0;
}

uint32_t compute_cnt(std::span<const uint32_t> neighbor_cores, uint32_t core_v) {
  uint32_t s = 0;
  for (uint32_t c : neighbor_cores)
    if (c >= core_v) ++s;
  return s;
}

void update_range(CoreState& st, NodeId& next_min, NodeId& next_max, NodeId u, NodeId v) {
  if (u > st.v_max) st.v_max = u;
  if (u < v) {
    st.update = true;
    if (u < next_min) next_min = u;
    if (u > next_max) next_max = u;
  }
}

void update_nbr_cnt(CoreState& st, std::span<const NodeId> nbrs, uint32_t c_old, uint32_t c_new) {
  for (NodeId u : nbrs)
    if (st.core[u] > c_new && st.core[u] <= c_old) --st.cnt[u];
}

namespace {

void init_cores_from_degree(DiskGraph& g, CoreState& st) {
  uint64_t n = g.node_count();
  st.core.resize(n);
  for (uint64_t v = 0; v < n; ++v)
    st.core[v] = static_cast<uint32_t>(g.effective_degree(static_cast<NodeId>(v)));
}

RunReport make_report(std::string algorithm, const DiskGraph& g, const IoStats& before,
                      const Counters& rc, double elapsed, const std::vector<uint32_t>& core) {
  RunReport r;
  r.algorithm = std::move(algorithm);
  r.iterations = rc.iterations;
  r.node_computations = rc.node_computations;
  IoStats now = g.io_report();
  r.read_ios = now.read_ios - before.read_ios;
  r.write_ios = now.write_ios - before.write_ios;
  r.elapsed_seconds = elapsed;
  r.k_max = detail::max_core(core);
  return r;
}

void fill_aux(AuxStats* aux, const CoreState& st, const Scratch& sc, const DiskGraph& g) {
  if (!aux) return;
  aux->peak_aux_words = detail::state_words(st) + sc.words() + g.scratch_words();
}

}  // namespace

DecompResult semi_core(DiskGraph& g, const RunHooks& hooks) {
  detail::Stopwatch timer;
  IoStats io0 = g.io_report();
  uint64_t n = g.node_count();

  DecompResult res;
  CoreState& st = res.state;
  init_cores_from_degree(g, st);
  if (hooks.trace) hooks.trace->on_init(st.core);

  Scratch sc;
  Counters rc;
  bool update = true;
  while (update) {
    update = false;
    ++rc.iterations;
    for (uint64_t v = 0; v < n; ++v) {
      NodeId node = static_cast<NodeId>(v);
      g.charge_node_entry(node);
      g.neighbors_into(node, sc.nbrs);
      uint32_t c_old = st.core[v];
      uint32_t c_new = detail::local_core_ids(st.core, sc.nbrs, c_old, sc.hist);
      st.core[v] = c_new;
      ++rc.node_computations;
      if (hooks.trace) hooks.trace->on_node_computed(rc.iterations, node, c_old, c_new);
      if (c_new != c_old) update = true;
    }
    if (hooks.trace) hooks.trace->on_iteration_end(rc.iterations, st.core);
  }

  fill_aux(hooks.aux, st, sc, g);
  res.report = make_report("semicore", g, io0, rc, timer.seconds(), st.core);
  return res;
}

DecompResult semi_core_plus(DiskGraph& g, const RunHooks& hooks) {
  detail::Stopwatch timer;
  IoStats io0 = g.io_report();
  uint64_t n = g.node_count();

  DecompResult res;
  CoreState& st = res.state;
  init_cores_from_degree(g, st);
  st.active.assign(n, 1);
  st.v_min = 0;
  st.v_max = n ? static_cast<NodeId>(n - 1) : 0;
  st.update = true;
  if (hooks.trace) hooks.trace->on_init(st.core);

  Scratch sc;
  Counters rc;
  while (st.update) {
    st.update = false;
    NodeId next_min = n ? static_cast<NodeId>(n - 1) : 0;
    NodeId next_max = 0;
    ++rc.iterations;
    for (uint64_t v = st.v_min; n != 0 && v <= st.v_max; ++v) {
      NodeId node = static_cast<NodeId>(v);
      g.charge_node_entry(node);
      if (!st.active[v]) continue;
      st.active[v] = 0;
      g.neighbors_into(node, sc.nbrs);
      uint32_t c_old = st.core[v];
      uint32_t c_new = detail::local_core_ids(st.core, sc.nbrs, c_old, sc.hist);
      st.core[v] = c_new;
      ++rc.node_computations;
      if (hooks.trace) hooks.trace->on_node_computed(rc.iterations, node, c_old, c_new);
      if (c_new != c_old) {
        for (NodeId u : sc.nbrs) {
          st.active[u] = 1;
          update_range(st, next_min, next_max, u, node);
        }
      }
    }
    if (hooks.trace) hooks.trace->on_iteration_end(rc.iterations, st.core);
    st.v_min = next_min;
    st.v_max = next_max;
  }

  fill_aux(hooks.aux, st, sc, g);
  res.report = make_report("semicore-plus", g, io0, rc, timer.seconds(), st.core);
  return res;
}

DecompResult semi_core_star(DiskGraph& g, const RunHooks& hooks) {
  detail::Stopwatch timer;
  IoStats io0 = g.io_report();
  uint64_t n = g.node_count();

  DecompResult res;
  CoreState& st = res.state;
  init_cores_from_degree(g, st);
  st.cnt.assign(n, 0);
  st.v_min = 0;
  st.v_max = n ? static_cast<NodeId>(n - 1) : 0;
  st.update = true;
  if (hooks.trace) hooks.trace->on_init(st.core);

  Scratch sc;
  Counters rc;
  detail::star_converge(g, st, sc, rc, hooks.trace);
  st.cnt_valid = true;

  fill_aux(hooks.aux, st, sc, g);
  res.report = make_report("semicore-star", g, io0, rc, timer.seconds(), st.core);
  return res;
}

DecompResult im_core(DiskGraph& g, const RunHooks&) {
  detail::Stopwatch timer;
  IoStats io0 = g.io_report();
  uint64_t n = g.node_count();

  // Load the effective graph; from here on this is Batagelj-Zaversnik
  // bin-sort peeling, all in memory.
  std::vector<uint64_t> offset(n + 1, 0);
  std::vector<NodeId> adj;
  {
    std::vector<NodeId> nbrs;
    for (uint64_t v = 0; v < n; ++v) {
      NodeId node = static_cast<NodeId>(v);
      g.charge_node_entry(node);
      g.neighbors_into(node, nbrs);
      offset[v + 1] = offset[v] + nbrs.size();
      adj.insert(adj.end(), nbrs.begin(), nbrs.end());
    }
  }

  DecompResult res;
  CoreState& st = res.state;
  st.core.assign(n, 0);
  if (n > 0) {
    std::vector<uint32_t> deg(n);
    uint32_t max_deg = 0;
    for (uint64_t v = 0; v < n; ++v) {
      deg[v] = static_cast<uint32_t>(offset[v + 1] - offset[v]);
      max_deg = std::max(max_deg, deg[v]);
    }
    std::vector<uint64_t> bin(max_deg + 2, 0);
    for (uint64_t v = 0; v < n; ++v) ++bin[deg[v]];
    uint64_t start = 0;
    for (uint32_t d = 0; d <= max_deg; ++d) {
      uint64_t count = bin[d];
      bin[d] = start;
      start += count;
    }
    std::vector<NodeId> vert(n);
    std::vector<uint64_t> pos(n);
    for (uint64_t v = 0; v < n; ++v) {
      pos[v] = bin[deg[v]];
      vert[pos[v]] = static_cast<NodeId>(v);
      ++bin[deg[v]];
    }
    for (uint32_t d = max_deg; d >= 1; --d) bin[d] = bin[d - 1];
    bin[0] = 0;

    for (uint64_t i = 0; i < n; ++i) {
      NodeId v = vert[i];
      st.core[v] = deg[v];
      for (uint64_t e = offset[v]; e < offset[v + 1]; ++e) {
        NodeId u = adj[e];
        if (deg[u] > deg[v]) {
          uint32_t du = deg[u];
          uint64_t pu = pos[u];
          uint64_t pw = bin[du];
          NodeId w = vert[pw];
          if (u != w) {
            pos[u] = pw;
            vert[pu] = w;
            pos[w] = pu;
            vert[pw] = u;
          }
          ++bin[du];
          --deg[u];
        }
      }
    }
  }

  Counters rc;
  rc.iterations = 1;
  rc.node_computations = 0;
  res.report = make_report("imcore", g, io0, rc, timer.seconds(), st.core);
  return res;
}

}  // namespace semicore

#include "semicore/maintain.hpp"

#include <algorithm>
#include <stdexcept>

#include "engine.hpp"
#include "semicore/error.hpp"

namespace semicore {

using detail::Counters;
using detail::Scratch;

namespace {

void require_converged(const DiskGraph& g, const CoreState& st) {
  if (!st.cnt_valid || st.core.size() != g.node_count() || st.cnt.size() != g.node_count())
    throw std::logic_error("maintenance requires a state converged by semi_core_star");
}

uint64_t count_changed(const std::vector<uint32_t>& before, const std::vector<uint32_t>& after) {
  uint64_t changed = 0;
  for (std::size_t v = 0; v < before.size(); ++v)
    if (before[v] != after[v]) ++changed;
  return changed;
}

MaintainReport make_report(const char* operation, const char* algorithm, const DiskGraph& g,
                           const IoStats& io0, const Counters& rc, double elapsed,
                           const std::vector<uint32_t>& before,
                           const std::vector<uint32_t>& after) {
  MaintainReport r;
  r.operation = operation;
  r.algorithm = algorithm;
  r.iterations = rc.iterations;
  r.node_computations = rc.node_computations;
  r.nodes_changed = count_changed(before, after);
  IoStats now = g.io_report();
  r.read_ios = now.read_ios - io0.read_ios;
  r.write_ios = now.write_ios - io0.write_ios;
  r.elapsed_seconds = elapsed;
  r.k_max = detail::max_core(after);
  return r;
}

// Lines shared by both insertion algorithms: insert the edge, orient (u,v)
// so core(u) <= core(v), and credit the endpoint counts.
void insert_and_bump(DiskGraph& g, CoreState& st, NodeId& u, NodeId& v, uint32_t& c_old) {
  g.apply_edge_update(EdgeUpdateKind::Insert, u, v);
  if (st.core[u] > st.core[v]) std::swap(u, v);
  ++st.cnt[u];
  if (st.core[u] == st.core[v]) ++st.cnt[v];
  c_old = st.core[u];
}

}  // namespace

uint32_t compute_cnt_star(const CoreState& st, std::span<const NodeStatus> status,
                          std::span<const NodeId> neighbor_ids, uint32_t c_old) {
  uint32_t s = 0;
  for (NodeId u : neighbor_ids) {
    if (st.core[u] > c_old) {
      ++s;
    } else if (st.core[u] == c_old && st.cnt[u] >= static_cast<int32_t>(c_old) + 1 &&
               status[u] != NodeStatus::Rejected) {
      ++s;
    }
  }
  return s;
}

MaintainReport semi_delete_star(DiskGraph& g, CoreState& st, NodeId u, NodeId v,
                                TraceSink* trace) {
  require_converged(g, st);
  detail::Stopwatch timer;
  IoStats io0 = g.io_report();
  if (u == v) throw Error(Errc::self_loop, "self-loop update on node " + std::to_string(u));
  if (!g.has_edge(u, v))
    throw Error(Errc::missing_edge,
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") not present");

  std::vector<uint32_t> before = st.core;
  if (trace) trace->on_init(st.core);
  g.apply_edge_update(EdgeUpdateKind::Delete, u, v);

  if (st.core[u] < st.core[v]) {
    --st.cnt[u];
    st.v_min = st.v_max = u;
  } else if (st.core[v] < st.core[u]) {
    --st.cnt[v];
    st.v_min = st.v_max = v;
  } else {
    --st.cnt[u];
    --st.cnt[v];
    st.v_min = std::min(u, v);
    st.v_max = std::max(u, v);
  }
  st.update = true;

  Scratch sc;
  Counters rc;
  detail::star_converge(g, st, sc, rc, trace);
  return make_report("delete", "semidelete-star", g, io0, rc, timer.seconds(), before, st.core);
}

MaintainReport semi_insert(DiskGraph& g, CoreState& st, NodeId u, NodeId v, TraceSink* trace,
                           InsertSets* sets) {
  require_converged(g, st);
  detail::Stopwatch timer;
  IoStats io0 = g.io_report();

  std::vector<uint32_t> before = st.core;
  if (trace) trace->on_init(st.core);
  uint32_t c_old = 0;
  insert_and_bump(g, st, u, v, c_old);

  uint64_t n = g.node_count();
  std::vector<uint8_t> active(n, 0);
  active[u] = 1;
  st.v_min = st.v_max = u;
  st.update = true;

  Scratch sc;
  Counters rc;
  // Phase 1: expand the candidate set reachable from u through nodes at
  // c_old, raising each candidate to c_old+1 and keeping cnt exact.
  while (st.update) {
    st.update = false;
    NodeId next_min = static_cast<NodeId>(n - 1);
    NodeId next_max = 0;
    ++rc.iterations;
    for (uint64_t x = st.v_min; x <= st.v_max; ++x) {
      NodeId node = static_cast<NodeId>(x);
      g.charge_node_entry(node);
      if (!active[x] || st.core[x] != c_old) continue;
      st.core[x] = c_old + 1;
      g.neighbors_into(node, sc.nbrs);
      st.cnt[x] = static_cast<int32_t>(detail::compute_cnt_ids(st.core, sc.nbrs, c_old + 1));
      ++rc.node_computations;
      if (trace) trace->on_node_computed(rc.iterations, node, c_old, c_old + 1);
      for (NodeId w : sc.nbrs)
        if (st.core[w] == c_old + 1) ++st.cnt[w];
      for (NodeId w : sc.nbrs) {
        if (st.core[w] == c_old && !active[w]) {
          active[w] = 1;
          update_range(st, next_min, next_max, w, node);
        }
      }
    }
    if (trace) trace->on_iteration_end(rc.iterations, st.core);
    st.v_min = next_min;
    st.v_max = next_max;
  }

  // Phase 2: the raised bounds are valid upper bounds; converge them.
  NodeId lo = u, hi = u;
  for (uint64_t x = 0; x < n; ++x) {
    if (!active[x]) continue;
    lo = std::min(lo, static_cast<NodeId>(x));
    hi = std::max(hi, static_cast<NodeId>(x));
    if (sets) sets->candidates.push_back(static_cast<NodeId>(x));
  }
  st.v_min = lo;
  st.v_max = hi;
  st.update = true;
  detail::star_converge(g, st, sc, rc, trace);

  if (sets) {
    for (uint64_t x = 0; x < n; ++x) {
      if (st.core[x] > before[x]) sets->confirmed.push_back(static_cast<NodeId>(x));
      if (active[x] && st.core[x] == before[x]) sets->rejected.push_back(static_cast<NodeId>(x));
    }
  }
  return make_report("insert", "semiinsert", g, io0, rc, timer.seconds(), before, st.core);
}

MaintainReport semi_insert_star(DiskGraph& g, CoreState& st, NodeId u, NodeId v, TraceSink* trace,
                                InsertSets* sets) {
  require_converged(g, st);
  detail::Stopwatch timer;
  IoStats io0 = g.io_report();

  std::vector<uint32_t> before = st.core;
  if (trace) trace->on_init(st.core);
  uint32_t c_old = 0;
  insert_and_bump(g, st, u, v, c_old);
  const int32_t thr = static_cast<int32_t>(c_old) + 1;

  uint64_t n = g.node_count();
  std::vector<NodeStatus> status(n, NodeStatus::Untouched);
  status[u] = NodeStatus::Pending;
  st.v_min = st.v_max = u;
  st.update = true;

  Scratch sc;
  Counters rc;
  while (st.update) {
    st.update = false;
    NodeId next_min = static_cast<NodeId>(n - 1);
    NodeId next_max = 0;
    ++rc.iterations;
    for (uint64_t x = st.v_min; x <= st.v_max; ++x) {
      NodeId node = static_cast<NodeId>(x);
      g.charge_node_entry(node);
      bool loaded = false;
      bool computed_here = false;

      if (status[x] == NodeStatus::Pending) {
        g.neighbors_into(node, sc.nbrs);
        loaded = true;
        computed_here = true;
        st.cnt[x] = static_cast<int32_t>(compute_cnt_star(st, status, sc.nbrs, c_old));
        status[x] = NodeStatus::Confirmed;
        st.core[x] = c_old + 1;
        ++rc.node_computations;
        if (trace) trace->on_node_computed(rc.iterations, node, c_old, c_old + 1);
        // A Confirmed neighbor's cnt is the recursive count and already
        // credits this node as a candidate; only nodes that were at
        // c_old+1 all along gain a supporter.
        for (NodeId w : sc.nbrs)
          if (st.core[w] == c_old + 1 && status[w] != NodeStatus::Confirmed) ++st.cnt[w];
        if (st.cnt[x] >= thr) {
          for (NodeId w : sc.nbrs) {
            if (st.core[w] == c_old && st.cnt[w] >= thr && status[w] == NodeStatus::Untouched) {
              status[w] = NodeStatus::Pending;
              update_range(st, next_min, next_max, w, node);
            }
          }
        }
      }

      if (status[x] == NodeStatus::Confirmed && st.cnt[x] < thr) {
        if (!loaded) g.neighbors_into(node, sc.nbrs);
        if (!computed_here) {
          ++rc.node_computations;
          if (trace) trace->on_node_computed(rc.iterations, node, c_old + 1, c_old);
        }
        st.cnt[x] = static_cast<int32_t>(detail::compute_cnt_ids(st.core, sc.nbrs, c_old));
        status[x] = NodeStatus::Rejected;
        st.core[x] = c_old;
        for (NodeId w : sc.nbrs)
          if (st.core[w] == c_old + 1 && status[w] != NodeStatus::Confirmed) --st.cnt[w];
        for (NodeId w : sc.nbrs) {
          if (status[w] == NodeStatus::Confirmed) {
            --st.cnt[w];
            if (st.cnt[w] < thr) update_range(st, next_min, next_max, w, node);
          }
        }
      }
    }
    if (trace) trace->on_iteration_end(rc.iterations, st.core);
    st.v_min = next_min;
    st.v_max = next_max;
  }

  if (sets) {
    for (uint64_t x = 0; x < n; ++x) {
      switch (status[x]) {
        case NodeStatus::Confirmed:
          sets->confirmed.push_back(static_cast<NodeId>(x));
          sets->candidates.push_back(static_cast<NodeId>(x));
          break;
        case NodeStatus::Rejected:
          sets->rejected.push_back(static_cast<NodeId>(x));
          sets->candidates.push_back(static_cast<NodeId>(x));
          break;
        case NodeStatus::Pending:
          sets->candidates.push_back(static_cast<NodeId>(x));
          break;
        case NodeStatus::Untouched:
          break;
      }
    }
  }
  return make_report("insert", "semiinsert-star", g, io0, rc, timer.seconds(), before, st.core);
}

std::vector<MaintainReport> apply_stream(DiskGraph& g, CoreState& st,
                                         std::span<const EdgeOp> ops, InsertAlgo insert_algo) {
  std::vector<MaintainReport> out;
  out.reserve(ops.size());
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const EdgeOp& op = ops[i];
    try {
      if (op.kind == EdgeUpdateKind::Delete) {
        out.push_back(semi_delete_star(g, st, op.u, op.v));
      } else if (insert_algo == InsertAlgo::Star) {
        out.push_back(semi_insert_star(g, st, op.u, op.v));
      } else {
        out.push_back(semi_insert(g, st, op.u, op.v));
      }
    } catch (const Error& e) {
      throw StreamError(i, e.code(), e.what());
    }
  }
  return out;
}

}  // namespace semicore

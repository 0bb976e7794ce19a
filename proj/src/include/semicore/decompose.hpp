#pragma once

#include <span>

#include "semicore/core_state.hpp"
#include "semicore/disk_graph.hpp"
#include "semicore/trace.hpp"

namespace semicore {

// Filled after a run with the peak capacity (in u32 words) of everything the
// algorithm allocated beyond the graph handle: the per-node arrays plus the
// single reused adjacency/histogram scratch.
struct AuxStats {
  uint64_t peak_aux_words = 0;
};

struct RunHooks {
  TraceSink* trace = nullptr;
  AuxStats* aux = nullptr;
};

struct DecompResult {
  CoreState state;
  RunReport report;
};

// Largest k <= c_old such that at least k of the neighbor core values are
// >= k; 0 when c_old is 0 or there are no neighbors. Values above c_old are
// clamped into the top bucket.
uint32_t local_core(uint32_t c_old, std::span<const uint32_t> neighbor_cores);

// |{u : neighbor core(u) >= core_v}|.
uint32_t compute_cnt(std::span<const uint32_t> neighbor_cores, uint32_t core_v);

// Range bookkeeping for a triggered neighbor u of the node v being scanned:
// extends the current pass to cover u when u > v, otherwise defers u to the
// next pass range and raises the convergence flag.
void update_range(CoreState& st, NodeId& next_min, NodeId& next_max, NodeId u, NodeId v);

// After a node dropped from c_old to c_new, neighbors u with
// c_new < core(u) <= c_old lose one supporter.
void update_nbr_cnt(CoreState& st, std::span<const NodeId> nbrs, uint32_t c_old, uint32_t c_new);

// Full-scan iteration to convergence.
DecompResult semi_core(DiskGraph& g, const RunHooks& hooks = {});
// Scans only nodes re-activated by a neighbor's change, within [v_min, v_max].
DecompResult semi_core_plus(DiskGraph& g, const RunHooks& hooks = {});
// Recomputes a node only when cnt(v) < core(v); leaves cnt converged, so the
// resulting state is what the maintenance algorithms take over.
DecompResult semi_core_star(DiskGraph& g, const RunHooks& hooks = {});
// In-memory baseline: bin-sort peeling over the whole effective graph.
DecompResult im_core(DiskGraph& g, const RunHooks& hooks = {});

}  // namespace semicore

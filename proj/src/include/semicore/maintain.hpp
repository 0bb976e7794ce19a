#pragma once

#include <span>
#include <vector>

#include "semicore/core_state.hpp"
#include "semicore/decompose.hpp"
#include "semicore/disk_graph.hpp"
#include "semicore/trace.hpp"

namespace semicore {

// Insertion status of a node within one SemiInsert* run. Transitions are
// Untouched -> Pending -> Confirmed -> Rejected; Rejected is terminal and
// unreached nodes stay Untouched.
enum class NodeStatus : uint8_t { Untouched, Pending, Confirmed, Rejected };

// Test introspection for the insertion algorithms.
struct InsertSets {
  std::vector<NodeId> candidates;  // every node the expansion reached
  std::vector<NodeId> confirmed;   // nodes whose core ends one higher
  std::vector<NodeId> rejected;    // expanded nodes reverted to the old core
};

enum class InsertAlgo { TwoPhase, Star };

// The recursive insertion-time count: neighbors with core above c_old, plus
// same-core neighbors still credible as candidates (cnt >= c_old+1 and not
// Rejected).
uint32_t compute_cnt_star(const CoreState& st, std::span<const NodeStatus> status,
                          std::span<const NodeId> neighbor_ids, uint32_t c_old);

// All three take a state converged by semi_core_star (cores and cnts exact
// for the current graph) and leave it converged for the updated graph.
MaintainReport semi_delete_star(DiskGraph& g, CoreState& st, NodeId u, NodeId v,
                                TraceSink* trace = nullptr);

MaintainReport semi_insert(DiskGraph& g, CoreState& st, NodeId u, NodeId v,
                           TraceSink* trace = nullptr, InsertSets* sets = nullptr);

MaintainReport semi_insert_star(DiskGraph& g, CoreState& st, NodeId u, NodeId v,
                                TraceSink* trace = nullptr, InsertSets* sets = nullptr);

// Applies ops in order; the first invalid op aborts with a StreamError
// carrying its index, prior ops remain applied.
std::vector<MaintainReport> apply_stream(DiskGraph& g, CoreState& st,
                                         std::span<const EdgeOp> ops, InsertAlgo insert_algo);

}  // namespace semicore

#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "semicore/types.hpp"

namespace semicore {

// Observation hook for algorithm runs. Iterations are numbered from 1 and
// stay continuous across the phases of a maintenance operation.
class TraceSink {
 public:
  virtual ~TraceSink() = default;
  virtual void on_init(std::span<const uint32_t> core) { (void)core; }
  virtual void on_node_computed(uint64_t iteration, NodeId v, uint32_t core_before,
                                uint32_t core_after) {
    (void)iteration;
    (void)v;
    (void)core_before;
    (void)core_after;
  }
  virtual void on_iteration_end(uint64_t iteration, std::span<const uint32_t> core) {
    (void)iteration;
    (void)core;
  }
};

// Records the per-iteration tables: core snapshots (row 0 = initialization)
// and the recomputed-node sets.
class TraceTable final : public TraceSink {
 public:
  void on_init(std::span<const uint32_t> core) override;
  void on_node_computed(uint64_t iteration, NodeId v, uint32_t core_before,
                        uint32_t core_after) override;
  void on_iteration_end(uint64_t iteration, std::span<const uint32_t> core) override;

  // Number of recorded iterations (excluding the init row).
  std::size_t iterations() const { return rows_.size() - 1; }
  // row(0) is the init snapshot, row(i) the state after iteration i.
  const std::vector<uint32_t>& row(std::size_t i) const { return rows_.at(i); }
  // Nodes recomputed during iteration i (1-based), ascending.
  std::vector<NodeId> recomputed(std::size_t iteration) const;
  uint64_t total_recomputed() const;
  // Count of nodes whose core differs between rows i-1 and i, per iteration.
  std::vector<uint64_t> changed_counts() const;

  // TSV: iteration, node, core, recomputed(0/1). Iteration 0 is the init row.
  void write_tsv(std::ostream& out) const;

 private:
  std::vector<std::vector<uint32_t>> rows_;
  std::vector<std::vector<NodeId>> recomputed_;
};

}  // namespace semicore

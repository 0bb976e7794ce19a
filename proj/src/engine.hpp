#pragma once

// Scan machinery shared by the decomposition and maintenance algorithms.

#include <chrono>
#include <vector>

#include "semicore/core_state.hpp"
#include "semicore/decompose.hpp"
#include "semicore/disk_graph.hpp"
#include "semicore/trace.hpp"

namespace semicore::detail {

// One adjacency list plus one histogram, reused across every node
// computation; nothing else scales with m.
struct Scratch {
  std::vector<NodeId> nbrs;
  std::vector<uint32_t> hist;
  uint64_t words() const { return nbrs.capacity() + hist.capacity(); }
};

struct Counters {
  uint64_t iterations = 0;
  uint64_t node_computations = 0;
};

uint32_t local_core_ids(const std::vector<uint32_t>& core, const std::vector<NodeId>& nbrs,
                        uint32_t c_old, std::vector<uint32_t>& hist);

uint32_t compute_cnt_ids(const std::vector<uint32_t>& core, const std::vector<NodeId>& nbrs,
                         uint32_t threshold);

// Runs the cnt-guarded convergence loop from the seeded range. st.update
// must be true on entry; st.core and st.cnt must cover all nodes.
void star_converge(DiskGraph& g, CoreState& st, Scratch& sc, Counters& rc, TraceSink* trace);

inline uint64_t state_words(const CoreState& st) {
  return st.core.capacity() + st.cnt.capacity() + (st.active.capacity() + 3) / 4;
}

uint32_t max_core(const std::vector<uint32_t>& core);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace semicore::detail

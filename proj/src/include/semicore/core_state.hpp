#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semicore/types.hpp"

namespace semicore {

// Per-node state shared by the decomposition and maintenance algorithms.
// core holds the upper bounds that converge down to the core numbers. cnt
// is the number of neighbors whose bound is >= the node's own; it is signed
// because pass 1 may decrement entries that have not been computed yet.
struct CoreState {
  std::vector<uint32_t> core;
  std::vector<int32_t> cnt;
  std::vector<uint8_t> active;
  NodeId v_min = 0;
  NodeId v_max = 0;
  bool update = false;
  bool cnt_valid = false;
};

struct RunReport {
  std::string algorithm;
  uint64_t iterations = 0;
  uint64_t node_computations = 0;
  uint64_t read_ios = 0;
  uint64_t write_ios = 0;
  double elapsed_seconds = 0.0;
  uint32_t k_max = 0;
};

struct MaintainReport {
  std::string operation;  // "insert" | "delete"
  std::string algorithm;
  uint64_t iterations = 0;
  uint64_t node_computations = 0;
  uint64_t nodes_changed = 0;
  uint64_t read_ios = 0;
  uint64_t write_ios = 0;
  double elapsed_seconds = 0.0;
  uint32_t k_max = 0;
};

}  // namespace semicore

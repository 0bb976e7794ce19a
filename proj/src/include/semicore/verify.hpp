#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "semicore/types.hpp"

namespace semicore {

// Core numbers by literal peeling from the k-core definition. Kept free of
// any shared code with im_core or the semi-external algorithms so it can
// serve as their oracle. Oracle scale only (n up to ~10^4).
std::vector<uint32_t> brute_force_core(uint64_t n, const EdgeList& edges);

// The 9-node sample graph whose decomposition and maintenance walkthroughs
// the test suite pins down; degrees (3,3,4,6,3,5,3,2,1), cores
// (3,3,3,3,2,2,2,2,1).
EdgeList sample_graph_g9();

enum class GraphKind { ErdosRenyi, Preferential };

// Deterministic simple undirected generator. param is the edge probability
// for ErdosRenyi and the edges-per-node attachment count for Preferential.
EdgeList gen_random_graph(GraphKind kind, uint64_t n, double param, uint64_t seed);

struct CoreDiff {
  NodeId node;
  uint32_t a;
  uint32_t b;
};

std::vector<CoreDiff> compare_cores(std::span<const uint32_t> a, std::span<const uint32_t> b);

// Direct check of the locality fixpoint: for every node, core(v) is the
// largest k with at least k neighbors of core >= k.
bool locality_fixpoint_holds(uint64_t n, const EdgeList& edges, std::span<const uint32_t> core);

}  // namespace semicore

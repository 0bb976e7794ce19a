#include "semicore/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "semicore/error.hpp"

namespace semicore {

namespace {

std::vector<std::vector<NodeId>> adjacency(uint64_t n, const EdgeList& edges) {
  std::vector<std::vector<NodeId>> adj(n);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

}  // namespace

std::vector<uint32_t> brute_force_core(uint64_t n, const EdgeList& edges) {
  auto adj = adjacency(n, edges);
  std::vector<uint32_t> deg(n);
  for (uint64_t v = 0; v < n; ++v) deg[v] = static_cast<uint32_t>(adj[v].size());

  std::vector<uint32_t> core(n, 0);
  std::vector<bool> alive(n, true);
  uint64_t remaining = n;
  std::vector<NodeId> stack;
  while (remaining > 0) {
    uint32_t k = UINT32_MAX;
    for (uint64_t v = 0; v < n; ++v)
      if (alive[v]) k = std::min(k, deg[v]);
    for (uint64_t v = 0; v < n; ++v)
      if (alive[v] && deg[v] <= k) stack.push_back(static_cast<NodeId>(v));
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      if (!alive[v]) continue;
      alive[v] = false;
      core[v] = k;
      --remaining;
      for (NodeId u : adj[v]) {
        if (!alive[u]) continue;
        if (--deg[u] <= k) stack.push_back(u);
      }
    }
  }
  return core;
}

EdgeList sample_graph_g9() {
  return {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4},
          {3, 5}, {3, 6}, {4, 5}, {5, 6}, {5, 7}, {5, 8}, {6, 7}};
}

EdgeList gen_random_graph(GraphKind kind, uint64_t n, double param, uint64_t seed) {
  std::mt19937_64 rng(seed);
  EdgeList edges;
  if (kind == GraphKind::ErdosRenyi) {
    if (param < 0.0 || param > 1.0)
      throw Error(Errc::argument, "edge probability must be in [0,1]");
    std::bernoulli_distribution flip(param);
    for (uint64_t u = 0; u + 1 < n; ++u)
      for (uint64_t v = u + 1; v < n; ++v)
        if (flip(rng)) edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
  } else {
    int64_t k = std::llround(param);
    if (k < 1) throw Error(Errc::argument, "edges-per-node must be >= 1");
    // Preferential attachment via a repeated-endpoint pool; new nodes pick
    // degree-proportional targets, uniform ones while the pool is empty.
    std::vector<NodeId> pool;
    for (uint64_t v = 1; v < n; ++v) {
      uint64_t want = std::min<uint64_t>(static_cast<uint64_t>(k), v);
      std::set<NodeId> targets;
      while (targets.size() < want) {
        NodeId t;
        if (pool.empty()) {
          t = static_cast<NodeId>(rng() % v);
        } else {
          t = pool[rng() % pool.size()];
        }
        if (t != v) targets.insert(t);
      }
      for (NodeId t : targets) {
        edges.push_back({static_cast<NodeId>(v), t});
        pool.push_back(static_cast<NodeId>(v));
        pool.push_back(t);
      }
    }
  }
  return edges;
}

std::vector<CoreDiff> compare_cores(std::span<const uint32_t> a, std::span<const uint32_t> b) {
  if (a.size() != b.size()) throw Error(Errc::argument, "core sequences differ in length");
  std::vector<CoreDiff> diff;
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a[v] != b[v]) diff.push_back({static_cast<NodeId>(v), a[v], b[v]});
  return diff;
}

bool locality_fixpoint_holds(uint64_t n, const EdgeList& edges, std::span<const uint32_t> core) {
  if (core.size() != n) return false;
  auto adj = adjacency(n, edges);
  for (uint64_t v = 0; v < n; ++v) {
    uint32_t best = 0;
    uint32_t deg = static_cast<uint32_t>(adj[v].size());
    for (uint32_t k = 1; k <= deg; ++k) {
      uint32_t count = 0;
      for (NodeId u : adj[v])
        if (core[u] >= k) ++count;
      if (count >= k) best = k;
    }
    if (best != core[v]) return false;
  }
  return true;
}

}  // namespace semicore

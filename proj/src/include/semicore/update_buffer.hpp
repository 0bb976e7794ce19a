#pragma once

#include <cstdint>
#include <set>
#include <unordered_map>

#include "semicore/types.hpp"

namespace semicore {

// In-memory log of edge updates not yet merged into the on-disk tables.
// Entries are directed: one undirected edge occupies two entries. For each
// node, inserted(v) and deleted(v) are disjoint; an insert of a pending
// deletion cancels it (and vice versa). Validation against the stored graph
// is the caller's job.
class UpdateBuffer {
 public:
  static constexpr uint64_t kDefaultCapacity = 1u << 20;

  explicit UpdateBuffer(uint64_t capacity = kDefaultCapacity) : capacity_(capacity) {}

  // Returns true if the edge is now pending-inserted, false if it cancelled
  // a pending deletion instead.
  bool record_insert(NodeId u, NodeId v);
  // Returns true if the edge is now pending-deleted, false if it cancelled
  // a pending insertion instead.
  bool record_delete(NodeId u, NodeId v);

  bool is_inserted(NodeId u, NodeId v) const;
  bool is_deleted(NodeId u, NodeId v) const;

  // nullptr when the node has no pending entries of that kind.
  const std::set<NodeId>* inserted(NodeId v) const;
  const std::set<NodeId>* deleted(NodeId v) const;

  int64_t degree_delta(NodeId v) const;
  int64_t edge_delta() const { return edge_delta_; }

  uint64_t pending_count() const { return pending_; }
  uint64_t capacity() const { return capacity_; }
  bool over_capacity() const { return pending_ > capacity_; }
  bool empty() const { return pending_ == 0; }

  void clear();

 private:
  using PerNode = std::unordered_map<NodeId, std::set<NodeId>>;

  static bool contains(const PerNode& m, NodeId u, NodeId v);
  void add(PerNode& m, NodeId u, NodeId v);
  void remove(PerNode& m, NodeId u, NodeId v);

  PerNode inserted_;
  PerNode deleted_;
  uint64_t pending_ = 0;
  int64_t edge_delta_ = 0;
  uint64_t capacity_;
};

}  // namespace semicore

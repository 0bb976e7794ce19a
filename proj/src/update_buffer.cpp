#include "semicore/update_buffer.hpp"

namespace semicore {

bool UpdateBuffer::contains(const PerNode& m, NodeId u, NodeId v) {
  auto it = m.find(u);
  return it != m.end() && it->second.count(v) > 0;
}

void UpdateBuffer::add(PerNode& m, NodeId u, NodeId v) {
  m[u].insert(v);
  m[v].insert(u);
  pending_ += 2;
}

void UpdateBuffer::remove(PerNode& m, NodeId u, NodeId v) {
  auto drop = [&](NodeId a, NodeId b) {
    auto it = m.find(a);
    it->second.erase(b);
    if (it->second.empty()) m.erase(it);
  };
  drop(u, v);
  drop(v, u);
  pending_ -= 2;
}

bool UpdateBuffer::record_insert(NodeId u, NodeId v) {
  if (contains(deleted_, u, v)) {
    remove(deleted_, u, v);
    edge_delta_ += 1;
    return false;
  }
  add(inserted_, u, v);
  edge_delta_ += 1;
  return true;
}

bool UpdateBuffer::record_delete(NodeId u, NodeId v) {
  if (contains(inserted_, u, v)) {
    remove(inserted_, u, v);
    edge_delta_ -= 1;
    return false;
  }
  add(deleted_, u, v);
  edge_delta_ -= 1;
  return true;
}

bool UpdateBuffer::is_inserted(NodeId u, NodeId v) const { return contains(inserted_, u, v); }

bool UpdateBuffer::is_deleted(NodeId u, NodeId v) const { return contains(deleted_, u, v); }

const std::set<NodeId>* UpdateBuffer::inserted(NodeId v) const {
  auto it = inserted_.find(v);
  return it == inserted_.end() ? nullptr : &it->second;
}

const std::set<NodeId>* UpdateBuffer::deleted(NodeId v) const {
  auto it = deleted_.find(v);
  return it == deleted_.end() ? nullptr : &it->second;
}

int64_t UpdateBuffer::degree_delta(NodeId v) const {
  int64_t d = 0;
  if (auto* ins = inserted(v)) d += static_cast<int64_t>(ins->size());
  if (auto* del = deleted(v)) d -= static_cast<int64_t>(del->size());
  return d;
}

void UpdateBuffer::clear() {
  inserted_.clear();
  deleted_.clear();
  pending_ = 0;
  edge_delta_ = 0;
}

}  // namespace semicore

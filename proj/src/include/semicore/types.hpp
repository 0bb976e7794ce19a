#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace semicore {

// Dense node index in [0, n).
using NodeId = uint32_t;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

enum class EdgeUpdateKind : uint8_t { Insert, Delete };

struct EdgeOp {
  EdgeUpdateKind kind = EdgeUpdateKind::Insert;
  NodeId u = 0;
  NodeId v = 0;
};

}  // namespace semicore

#include "semicore/trace.hpp"

#include <algorithm>

namespace semicore {

void TraceTable::on_init(std::span<const uint32_t> core) {
  rows_.clear();
  recomputed_.clear();
  rows_.emplace_back(core.begin(), core.end());
}

void TraceTable::on_node_computed(uint64_t iteration, NodeId v, uint32_t, uint32_t) {
  if (recomputed_.size() < iteration) recomputed_.resize(iteration);
  recomputed_[iteration - 1].push_back(v);
}

void TraceTable::on_iteration_end(uint64_t iteration, std::span<const uint32_t> core) {
  if (recomputed_.size() < iteration) recomputed_.resize(iteration);
  rows_.emplace_back(core.begin(), core.end());
}

std::vector<NodeId> TraceTable::recomputed(std::size_t iteration) const {
  std::vector<NodeId> out = recomputed_.at(iteration - 1);
  std::sort(out.begin(), out.end());
  return out;
}

uint64_t TraceTable::total_recomputed() const {
  uint64_t total = 0;
  for (const auto& r : recomputed_) total += r.size();
  return total;
}

std::vector<uint64_t> TraceTable::changed_counts() const {
  std::vector<uint64_t> out;
  for (std::size_t i = 1; i < rows_.size(); ++i) {
    uint64_t changed = 0;
    for (std::size_t v = 0; v < rows_[i].size(); ++v)
      if (rows_[i][v] != rows_[i - 1][v]) ++changed;
    out.push_back(changed);
  }
  return out;
}

void TraceTable::write_tsv(std::ostream& out) const {
  out << "iteration\tnode\tcore\trecomputed\n";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::vector<uint8_t> grey(rows_[i].size(), 0);
    if (i > 0)
      for (NodeId v : recomputed_[i - 1]) grey[v] = 1;
    for (std::size_t v = 0; v < rows_[i].size(); ++v)
      out << i << '\t' << v << '\t' << rows_[i][v] << '\t' << int(grey[v]) << '\n';
  }
}

}  // namespace semicore

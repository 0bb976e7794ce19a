#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <vector>

#include "semicore/io_accountant.hpp"
#include "semicore/types.hpp"
#include "semicore/update_buffer.hpp"

namespace semicore {

struct NodeIndexEntry {
  uint64_t offset = 0;  // position in neighbor-slot units
  uint32_t degree = 0;  // stored neighbor count
};

// Handle over a graph directory: node table resident in memory (O(n)),
// adjacency lists streamed from edges.bin, pending updates in an in-memory
// buffer, all transfers metered by the accountant. Single-owner, not safe
// for concurrent use.
class DiskGraph {
 public:
  struct Options {
    uint64_t block_size = 4096;
    uint64_t buffer_capacity = UpdateBuffer::kDefaultCapacity;
  };

  static DiskGraph open(const std::filesystem::path& dir, Options opts);
  static DiskGraph open(const std::filesystem::path& dir) { return open(dir, Options()); }

  DiskGraph(DiskGraph&&) noexcept = default;
  DiskGraph& operator=(DiskGraph&&) noexcept = default;

  uint64_t node_count() const { return node_table_.size(); }
  uint64_t stored_edge_count() const { return stored_m_; }
  // Current edge count, pending updates included.
  uint64_t edge_count() const;

  uint32_t stored_degree(NodeId v) const;
  uint64_t effective_degree(NodeId v) const;

  // Effective adjacency: (stored list | inserted(v)) \ deleted(v), sorted
  // ascending. Charges read I/Os for the stored bytes only.
  void neighbors_into(NodeId v, std::vector<NodeId>& out);
  std::vector<NodeId> neighbors(NodeId v);

  bool has_edge(NodeId u, NodeId v);

  void apply_edge_update(EdgeUpdateKind kind, NodeId u, NodeId v);

  // Rewrites the on-disk tables to the effective graph and clears the
  // buffer. Semantically transparent to neighbors().
  void flush();

  IoStats io_report() const { return io_.stats(); }

  // Cost-model charge for one node-table record, used by the per-iteration
  // sequential scans (the table itself stays memory-resident).
  void charge_node_entry(NodeId v);

  const UpdateBuffer& buffer() const { return buffer_; }
  const std::filesystem::path& directory() const { return dir_; }

  // Capacity (in u32 words) of the graph-held adjacency scratch, for the
  // allocation audit.
  uint64_t scratch_words() const { return stored_scratch_.capacity(); }

 private:
  DiskGraph() = default;

  struct FileCloser {
    void operator()(std::FILE* f) const {
      if (f) std::fclose(f);
    }
  };
  using FileHandle = std::unique_ptr<std::FILE, FileCloser>;

  void read_stored_into(NodeId v, std::vector<NodeId>& out);
  bool stored_contains(NodeId u, NodeId v);
  void require_node(NodeId v) const;
  void open_edge_file();

  std::filesystem::path dir_;
  Options opts_;
  uint64_t stored_m_ = 0;
  std::vector<NodeIndexEntry> node_table_;
  FileHandle edge_file_;
  UpdateBuffer buffer_;
  IoAccountant io_{4096};
  std::vector<NodeId> stored_scratch_;
};

}  // namespace semicore

#include "semicore/disk_graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <memory>

#include "semicore/error.hpp"
#include "semicore/format.hpp"

namespace semicore {

namespace fs = std::filesystem;
namespace fmt = semicore::format;

namespace {

std::vector<unsigned char> read_file(const fs::path& p) {
  std::FILE* f = std::fopen(p.c_str(), "rb");
  if (!f) throw Error(Errc::storage, "cannot open " + p.string());
  std::fseek(f, 0, SEEK_END);
  long size = std::ftell(f);
  std::fseek(f, 0, SEEK_SET);
  std::vector<unsigned char> buf(static_cast<size_t>(size));
  size_t got = size ? std::fread(buf.data(), 1, buf.size(), f) : 0;
  std::fclose(f);
  if (got != buf.size()) throw Error(Errc::storage, "short read on " + p.string());
  return buf;
}

class TmpWriter {
 public:
  explicit TmpWriter(const fs::path& target) : target_(target), tmp_(target.string() + ".tmp") {
    f_ = std::fopen(tmp_.c_str(), "wb");
    if (!f_) throw Error(Errc::storage, "cannot create " + tmp_.string());
  }
  ~TmpWriter() {
    if (f_) {
      std::fclose(f_);
      std::error_code ec;
      fs::remove(tmp_, ec);
    }
  }
  void write(const void* data, size_t n) {
    if (std::fwrite(data, 1, n, f_) != n)
      throw Error(Errc::storage, "write failure on " + tmp_.string());
    bytes_ += n;
  }
  uint64_t bytes() const { return bytes_; }
  void commit() {
    if (std::fclose(f_) != 0) {
      f_ = nullptr;
      throw Error(Errc::storage, "close failure on " + tmp_.string());
    }
    f_ = nullptr;
    std::error_code ec;
    fs::rename(tmp_, target_, ec);
    if (ec) throw Error(Errc::storage, "rename failure on " + target_.string());
  }

 private:
  fs::path target_;
  fs::path tmp_;
  std::FILE* f_ = nullptr;
  uint64_t bytes_ = 0;
};

void write_meta(TmpWriter& w, uint64_t n, uint64_t m) {
  std::array<unsigned char, fmt::kMetaSize> buf{};
  std::memcpy(buf.data(), fmt::kMagic, 4);
  fmt::put_u32le(buf.data() + 4, fmt::kVersion);
  fmt::put_u64le(buf.data() + 8, n);
  fmt::put_u64le(buf.data() + 16, m);
  buf[24] = fmt::kIdWidth;
  w.write(buf.data(), buf.size());
}

}  // namespace

DiskGraph DiskGraph::open(const fs::path& dir, Options opts) {
  DiskGraph g;
  g.dir_ = dir;
  g.opts_ = opts;
  g.io_ = IoAccountant(opts.block_size);
  g.buffer_ = UpdateBuffer(opts.buffer_capacity);

  auto meta = read_file(dir / fmt::kMetaFile);
  if (meta.size() != fmt::kMetaSize || std::memcmp(meta.data(), fmt::kMagic, 4) != 0)
    throw Error(Errc::storage, "bad meta.bin in " + dir.string());
  if (fmt::get_u32le(meta.data() + 4) != fmt::kVersion)
    throw Error(Errc::storage, "unsupported version in " + dir.string());
  uint64_t n = fmt::get_u64le(meta.data() + 8);
  g.stored_m_ = fmt::get_u64le(meta.data() + 16);
  if (meta[24] != fmt::kIdWidth) throw Error(Errc::storage, "unsupported id width");

  auto nodes = read_file(dir / fmt::kNodesFile);
  if (nodes.size() != n * fmt::kNodeRecordSize)
    throw Error(Errc::storage, "node table size mismatch in " + dir.string());
  g.node_table_.resize(n);
  uint64_t slot = 0;
  for (uint64_t v = 0; v < n; ++v) {
    const unsigned char* rec = nodes.data() + v * fmt::kNodeRecordSize;
    g.node_table_[v].offset = fmt::get_u64le(rec);
    g.node_table_[v].degree = fmt::get_u32le(rec + 8);
    if (g.node_table_[v].offset != slot)
      throw Error(Errc::storage, "node table offsets inconsistent");
    slot += g.node_table_[v].degree;
  }
  if (slot != 2 * g.stored_m_) throw Error(Errc::storage, "degree sum does not match 2m");

  g.open_edge_file();
  return g;
}

void DiskGraph::open_edge_file() {
  fs::path p = dir_ / fmt::kEdgesFile;
  edge_file_.reset(std::fopen(p.c_str(), "rb"));
  if (!edge_file_) throw Error(Errc::storage, "cannot open " + p.string());
  std::error_code ec;
  uint64_t size = fs::file_size(p, ec);
  if (ec || size != 2 * stored_m_ * sizeof(uint32_t))
    throw Error(Errc::storage, "edge table size mismatch in " + dir_.string());
}

void DiskGraph::require_node(NodeId v) const {
  if (v >= node_table_.size())
    throw Error(Errc::out_of_range, "node " + std::to_string(v) + " out of range");
}

uint64_t DiskGraph::edge_count() const {
  return static_cast<uint64_t>(static_cast<int64_t>(stored_m_) + buffer_.edge_delta());
}

uint32_t DiskGraph::stored_degree(NodeId v) const {
  require_node(v);
  return node_table_[v].degree;
}

uint64_t DiskGraph::effective_degree(NodeId v) const {
  require_node(v);
  return static_cast<uint64_t>(node_table_[v].degree + buffer_.degree_delta(v));
}

void DiskGraph::read_stored_into(NodeId v, std::vector<NodeId>& out) {
  const auto& e = node_table_[v];
  out.resize(e.degree);
  if (e.degree == 0) return;
  uint64_t byte_offset = e.offset * sizeof(uint32_t);
  uint64_t nbytes = static_cast<uint64_t>(e.degree) * sizeof(uint32_t);
  if (std::fseek(edge_file_.get(), static_cast<long>(byte_offset), SEEK_SET) != 0 ||
      std::fread(out.data(), sizeof(uint32_t), e.degree, edge_file_.get()) != e.degree)
    throw Error(Errc::storage, "edge table read failure");
  io_.charge_read(IoAccountant::Stream::Edges, byte_offset, nbytes);
  // Stored as little-endian u32; decode in place on non-LE hosts.
  if constexpr (std::endian::native != std::endian::little) {
    for (auto& id : out) {
      unsigned char raw[4];
      std::memcpy(raw, &id, 4);
      id = fmt::get_u32le(raw);
    }
  }
}

void DiskGraph::neighbors_into(NodeId v, std::vector<NodeId>& out) {
  require_node(v);
  read_stored_into(v, stored_scratch_);
  const std::set<NodeId>* ins = buffer_.inserted(v);
  const std::set<NodeId>* del = buffer_.deleted(v);
  out.clear();
  if (!ins && !del) {
    out.assign(stored_scratch_.begin(), stored_scratch_.end());
    return;
  }
  auto it = ins ? ins->begin() : std::set<NodeId>::const_iterator{};
  auto end = ins ? ins->end() : it;
  for (NodeId w : stored_scratch_) {
    while (ins && it != end && *it < w) out.push_back(*it++);
    if (del && del->count(w)) continue;
    out.push_back(w);
  }
  while (ins && it != end) out.push_back(*it++);
}

std::vector<NodeId> DiskGraph::neighbors(NodeId v) {
  std::vector<NodeId> out;
  neighbors_into(v, out);
  return out;
}

bool DiskGraph::stored_contains(NodeId u, NodeId v) {
  // Probe the smaller stored list.
  if (node_table_[v].degree < node_table_[u].degree) std::swap(u, v);
  read_stored_into(u, stored_scratch_);
  return std::binary_search(stored_scratch_.begin(), stored_scratch_.end(), v);
}

bool DiskGraph::has_edge(NodeId u, NodeId v) {
  require_node(u);
  require_node(v);
  if (buffer_.is_deleted(u, v)) return false;
  if (buffer_.is_inserted(u, v)) return true;
  return stored_contains(u, v);
}

void DiskGraph::apply_edge_update(EdgeUpdateKind kind, NodeId u, NodeId v) {
  require_node(u);
  require_node(v);
  if (u == v) throw Error(Errc::self_loop, "self-loop update on node " + std::to_string(u));
  if (kind == EdgeUpdateKind::Insert) {
    if (has_edge(u, v))
      throw Error(Errc::duplicate_edge,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") already present");
    buffer_.record_insert(u, v);
  } else {
    if (!has_edge(u, v))
      throw Error(Errc::missing_edge,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") not present");
    buffer_.record_delete(u, v);
  }
  if (buffer_.over_capacity()) flush();
}

void DiskGraph::flush() {
  if (buffer_.empty()) return;

  uint64_t n = node_count();
  std::vector<NodeIndexEntry> new_table(n);
  TmpWriter edges(dir_ / fmt::kEdgesFile);
  std::vector<NodeId> merged;
  std::vector<unsigned char> enc;
  uint64_t slot = 0;
  for (NodeId v = 0; v < n; ++v) {
    neighbors_into(v, merged);
    new_table[v].offset = slot;
    new_table[v].degree = static_cast<uint32_t>(merged.size());
    slot += merged.size();
    enc.resize(merged.size() * 4);
    for (size_t i = 0; i < merged.size(); ++i) fmt::put_u32le(enc.data() + 4 * i, merged[i]);
    edges.write(enc.data(), enc.size());
  }
  uint64_t new_m = slot / 2;

  TmpWriter nodes(dir_ / fmt::kNodesFile);
  for (NodeId v = 0; v < n; ++v) {
    unsigned char rec[fmt::kNodeRecordSize];
    fmt::put_u64le(rec, new_table[v].offset);
    fmt::put_u32le(rec + 8, new_table[v].degree);
    nodes.write(rec, sizeof(rec));
  }

  TmpWriter meta(dir_ / fmt::kMetaFile);
  write_meta(meta, n, new_m);

  uint64_t edge_bytes = edges.bytes();
  uint64_t node_bytes = nodes.bytes();
  edge_file_.reset();
  edges.commit();
  nodes.commit();
  meta.commit();

  io_.charge_write(IoAccountant::Stream::Edges, 0, edge_bytes);
  io_.charge_write(IoAccountant::Stream::Nodes, 0, node_bytes + fmt::kMetaSize);

  node_table_ = std::move(new_table);
  stored_m_ = new_m;
  buffer_.clear();
  open_edge_file();
}

void DiskGraph::charge_node_entry(NodeId v) {
  io_.charge_read(IoAccountant::Stream::Nodes, static_cast<uint64_t>(v) * fmt::kNodeRecordSize,
                  fmt::kNodeRecordSize);
}

}  // namespace semicore

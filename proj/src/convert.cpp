#include "semicore/convert.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "semicore/error.hpp"
#include "semicore/format.hpp"

namespace semicore {

namespace fs = std::filesystem;
namespace fmt = semicore::format;

namespace {

struct RawEdge {
  uint64_t u, v;
};

class FileWriter {
 public:
  explicit FileWriter(const fs::path& p) : path_(p) {
    f_ = std::fopen(p.c_str(), "wb");
    if (!f_) throw Error(Errc::storage, "cannot create " + p.string());
  }
  ~FileWriter() {
    if (f_) std::fclose(f_);
  }
  void write(const void* data, size_t n) {
    if (std::fwrite(data, 1, n, f_) != n)
      throw Error(Errc::storage, "write failure on " + path_.string());
  }
  void close() {
    if (std::fclose(f_) != 0) {
      f_ = nullptr;
      throw Error(Errc::storage, "close failure on " + path_.string());
    }
    f_ = nullptr;
  }

 private:
  fs::path path_;
  std::FILE* f_ = nullptr;
};

bool parse_pair(const std::string& line, uint64_t& u, uint64_t& v) {
  const char* p = line.c_str();
  char* end = nullptr;
  while (*p == ' ' || *p == '\t') ++p;
  if (*p < '0' || *p > '9') return false;
  u = std::strtoull(p, &end, 10);
  p = end;
  while (*p == ' ' || *p == '\t') ++p;
  if (*p < '0' || *p > '9') return false;
  v = std::strtoull(p, &end, 10);
  p = end;
  while (*p == ' ' || *p == '\t' || *p == '\r') ++p;
  return *p == '\0';
}

void write_tables(const fs::path& out_dir, uint64_t n, const EdgeList& edges) {
  std::vector<uint32_t> degree(n, 0);
  for (const Edge& e : edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  std::vector<uint64_t> offset(n + 1, 0);
  for (uint64_t v = 0; v < n; ++v) offset[v + 1] = offset[v] + degree[v];

  std::vector<uint32_t> adj(offset[n]);
  std::vector<uint64_t> cursor(offset.begin(), offset.end() - 1);
  for (const Edge& e : edges) {
    adj[cursor[e.u]++] = e.v;
    adj[cursor[e.v]++] = e.u;
  }
  for (uint64_t v = 0; v < n; ++v)
    std::sort(adj.begin() + static_cast<int64_t>(offset[v]),
              adj.begin() + static_cast<int64_t>(offset[v + 1]));

  fs::create_directories(out_dir);

  FileWriter nodes(out_dir / fmt::kNodesFile);
  for (uint64_t v = 0; v < n; ++v) {
    unsigned char rec[fmt::kNodeRecordSize];
    fmt::put_u64le(rec, offset[v]);
    fmt::put_u32le(rec + 8, degree[v]);
    nodes.write(rec, sizeof(rec));
  }
  nodes.close();

  FileWriter edges_out(out_dir / fmt::kEdgesFile);
  std::vector<unsigned char> enc(adj.size() * 4);
  for (size_t i = 0; i < adj.size(); ++i) fmt::put_u32le(enc.data() + 4 * i, adj[i]);
  edges_out.write(enc.data(), enc.size());
  edges_out.close();

  FileWriter meta(out_dir / fmt::kMetaFile);
  std::array<unsigned char, fmt::kMetaSize> buf{};
  std::memcpy(buf.data(), fmt::kMagic, 4);
  fmt::put_u32le(buf.data() + 4, fmt::kVersion);
  fmt::put_u64le(buf.data() + 8, n);
  fmt::put_u64le(buf.data() + 16, edges.size());
  buf[24] = fmt::kIdWidth;
  meta.write(buf.data(), buf.size());
  meta.close();
}

}  // namespace

ConvertSummary build_from_edge_list(std::istream& input, const fs::path& out_dir) {
  std::vector<RawEdge> raw;
  std::vector<uint64_t> ids;
  ConvertSummary summary;

  std::string line;
  uint64_t line_no = 0;
  while (std::getline(input, line)) {
    ++line_no;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    uint64_t u, v;
    if (!parse_pair(line, u, v))
      throw Error(Errc::input, "unparsable line " + std::to_string(line_no) + ": " + line);
    ids.push_back(u);
    ids.push_back(v);
    if (u == v) {
      ++summary.skipped_self_loops;
      continue;
    }
    raw.push_back({std::min(u, v), std::max(u, v)});
  }

  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.size() > (1ull << 32))
    throw Error(Errc::input, "more than 2^32 distinct node ids");
  summary.n = ids.size();

  auto dense = [&](uint64_t original) {
    return static_cast<NodeId>(std::lower_bound(ids.begin(), ids.end(), original) - ids.begin());
  };

  std::sort(raw.begin(), raw.end(), [](const RawEdge& a, const RawEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  EdgeList edges;
  edges.reserve(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    if (i > 0 && raw[i].u == raw[i - 1].u && raw[i].v == raw[i - 1].v) {
      ++summary.skipped_duplicates;
      continue;
    }
    edges.push_back({dense(raw[i].u), dense(raw[i].v)});
  }
  summary.m = edges.size();

  write_tables(out_dir, summary.n, edges);

  FileWriter idmap(out_dir / fmt::kIdMapFile);
  for (size_t i = 0; i < ids.size(); ++i) {
    std::string row = std::to_string(ids[i]) + "\t" + std::to_string(i) + "\n";
    idmap.write(row.data(), row.size());
  }
  idmap.close();
  return summary;
}

void build_from_edges(uint64_t n, const EdgeList& edges, const fs::path& out_dir) {
  EdgeList normalized;
  normalized.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) throw Error(Errc::self_loop, "self-loop in edge list");
    if (e.u >= n || e.v >= n) throw Error(Errc::out_of_range, "edge endpoint out of range");
    normalized.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(normalized.begin(), normalized.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (size_t i = 1; i < normalized.size(); ++i)
    if (normalized[i] == normalized[i - 1])
      throw Error(Errc::duplicate_edge, "duplicate edge in edge list");
  write_tables(out_dir, n, normalized);
}

}  // namespace semicore

#pragma once

#include <cstddef>
#include <cstdint>

namespace semicore::format {

// On-disk layout, all little-endian:
//   meta.bin   "SCGR" | version u32 | n u64 | m u64 | id_width u8 | 7 zero bytes
//   nodes.bin  n records of (offset u64 in neighbor slots, degree u32)
//   edges.bin  2m u32 neighbor ids, per-node lists ascending
//   idmap.tsv  "original_id<TAB>dense_id" per line
inline constexpr char kMagic[4] = {'S', 'C', 'G', 'R'};
inline constexpr uint32_t kVersion = 1;
inline constexpr uint8_t kIdWidth = 4;
inline constexpr std::size_t kMetaSize = 32;
inline constexpr std::size_t kNodeRecordSize = 12;

inline constexpr const char* kMetaFile = "meta.bin";
inline constexpr const char* kNodesFile = "nodes.bin";
inline constexpr const char* kEdgesFile = "edges.bin";
inline constexpr const char* kIdMapFile = "idmap.tsv";

inline void put_u32le(unsigned char* p, uint32_t v) {
  p[0] = static_cast<unsigned char>(v);
  p[1] = static_cast<unsigned char>(v >> 8);
  p[2] = static_cast<unsigned char>(v >> 16);
  p[3] = static_cast<unsigned char>(v >> 24);
}

inline void put_u64le(unsigned char* p, uint64_t v) {
  for (int i = 0; i < 8; ++i) p[i] = static_cast<unsigned char>(v >> (8 * i));
}

inline uint32_t get_u32le(const unsigned char* p) {
  return static_cast<uint32_t>(p[0]) | static_cast<uint32_t>(p[1]) << 8 |
         static_cast<uint32_t>(p[2]) << 16 | static_cast<uint32_t>(p[3]) << 24;
}

inline uint64_t get_u64le(const unsigned char* p) {
  uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}

}  // namespace semicore::format

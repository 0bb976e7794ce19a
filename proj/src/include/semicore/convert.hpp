#pragma once

#include <filesystem>
#include <istream>

#include "semicore/types.hpp"

namespace semicore {

struct ConvertSummary {
  uint64_t n = 0;
  uint64_t m = 0;
  uint64_t skipped_self_loops = 0;
  uint64_t skipped_duplicates = 0;
};

// Parses "u v" pairs (whitespace-separated, '#' comment lines, blank lines
// ignored), remaps ids densely in ascending original-id order, drops
// self-loops and duplicate edges (either orientation) with counts, and
// writes meta.bin / nodes.bin / edges.bin / idmap.tsv into out_dir.
ConvertSummary build_from_edge_list(std::istream& input, const std::filesystem::path& out_dir);

// Writes a graph directory for an explicit dense edge list over nodes
// [0, n); ids are not remapped and no idmap.tsv is produced. Self-loops and
// duplicates are rejected.
void build_from_edges(uint64_t n, const EdgeList& edges, const std::filesystem::path& out_dir);

}  // namespace semicore

#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "semicore/core_state.hpp"
#include "semicore/types.hpp"

namespace semicore {

// Fixed key set, in order: algorithm, iterations, node_computations,
// read_ios, write_ios, elapsed_seconds, k_max.
std::string run_report_json(const RunReport& r);

// RunReport keys plus operation and nodes_changed.
std::string maintain_report_json(const MaintainReport& r);
std::string maintain_reports_json(std::span<const MaintainReport> reports);

// cores.tsv: "dense_id<TAB>core\n" per node, ascending id.
void write_cores_tsv(std::ostream& out, std::span<const uint32_t> cores);
std::vector<uint32_t> read_cores_tsv(std::istream& in);

// Ops file: one op per line, "+ u v" or "- u v"; '#' comments and blank
// lines are ignored.
std::vector<EdgeOp> parse_ops(std::istream& in);

}  // namespace semicore

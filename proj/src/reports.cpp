#include "semicore/reports.hpp"

#include <json.hpp>

#include "semicore/error.hpp"

namespace semicore {

namespace {

nlohmann::ordered_json run_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["algorithm"] = r.algorithm;
  j["iterations"] = r.iterations;
  j["node_computations"] = r.node_computations;
  j["read_ios"] = r.read_ios;
  j["write_ios"] = r.write_ios;
  j["elapsed_seconds"] = r.elapsed_seconds;
  j["k_max"] = r.k_max;
  return j;
}

nlohmann::ordered_json maintain_json(const MaintainReport& r) {
  nlohmann::ordered_json j;
  j["operation"] = r.operation;
  j["algorithm"] = r.algorithm;
  j["iterations"] = r.iterations;
  j["node_computations"] = r.node_computations;
  j["nodes_changed"] = r.nodes_changed;
  j["read_ios"] = r.read_ios;
  j["write_ios"] = r.write_ios;
  j["elapsed_seconds"] = r.elapsed_seconds;
  j["k_max"] = r.k_max;
  return j;
}

}  // namespace

std::string run_report_json(const RunReport& r) { return run_json(r).dump(2) + "\n"; }

std::string maintain_report_json(const MaintainReport& r) { return maintain_json(r).dump(2) + "\n"; }

std::string maintain_reports_json(std::span<const MaintainReport> reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const MaintainReport& r : reports) arr.push_back(maintain_json(r));
  return arr.dump(2) + "\n";
}

void write_cores_tsv(std::ostream& out, std::span<const uint32_t> cores) {
  for (std::size_t v = 0; v < cores.size(); ++v) out << v << '\t' << cores[v] << '\n';
}

std::vector<uint32_t> read_cores_tsv(std::istream& in) {
  std::vector<uint32_t> cores;
  std::string line;
  uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    uint64_t id, core;
    if (std::sscanf(line.c_str(), "%lu\t%lu", &id, &core) != 2 || id != cores.size())
      throw Error(Errc::input, "bad cores.tsv line " + std::to_string(line_no));
    cores.push_back(static_cast<uint32_t>(core));
  }
  return cores;
}

std::vector<EdgeOp> parse_ops(std::istream& in) {
  std::vector<EdgeOp> ops;
  std::string line;
  uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    char sign;
    unsigned long u, v;
    if (std::sscanf(line.c_str() + start, "%c %lu %lu", &sign, &u, &v) != 3 ||
        (sign != '+' && sign != '-'))
      throw Error(Errc::input, "bad op line " + std::to_string(line_no) + ": " + line);
    ops.push_back({sign == '+' ? EdgeUpdateKind::Insert : EdgeUpdateKind::Delete,
                   static_cast<NodeId>(u), static_cast<NodeId>(v)});
  }
  return ops;
}

}  // namespace semicore

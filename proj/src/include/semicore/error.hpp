#pragma once

#include <stdexcept>
#include <string>

namespace semicore {

enum class Errc {
  input,            // malformed edge-list or ops input
  out_of_range,     // node id >= n
  self_loop,        // update with u == v
  duplicate_edge,   // insert of an effectively present edge
  missing_edge,     // delete of an effectively absent edge
  storage,          // file read/write failure
  argument,         // bad generator/compare arguments
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message) : std::runtime_error(std::move(message)), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// apply_stream failure: carries the index of the op that failed; ops before
// `index` remain applied.
class StreamError : public Error {
 public:
  StreamError(std::size_t index, Errc code, const std::string& message)
      : Error(code, "op " + std::to_string(index) + ": " + message), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

}  // namespace semicore

#pragma once

#include <cstdint>

namespace semicore {

struct IoStats {
  uint64_t block_size = 0;
  uint64_t read_ios = 0;
  uint64_t write_ios = 0;
  uint64_t bytes_read = 0;
  uint64_t bytes_written = 0;
};

// External-memory cost accounting. A transfer of x bytes at offset o is
// charged the number of distinct blocks of size B intersecting [o, o+x),
// except that the last block touched on a stream is not recharged when the
// next transfer starts inside it. That memo models the one block of buffer
// a sequential scan keeps, so a full pass over a table costs ~ceil(bytes/B)
// no matter how the per-node calls slice it.
class IoAccountant {
 public:
  enum class Stream : uint8_t { Nodes = 0, Edges = 1 };

  explicit IoAccountant(uint64_t block_size = 4096);

  void charge_read(Stream s, uint64_t offset, uint64_t nbytes);
  void charge_write(Stream s, uint64_t offset, uint64_t nbytes);

  IoStats stats() const;
  uint64_t block_size() const { return block_size_; }

 private:
  static constexpr uint64_t kNoBlock = ~0ull;
  struct Memo {
    uint64_t read_block = kNoBlock;
    uint64_t write_block = kNoBlock;
  };

  uint64_t block_size_;
  uint64_t read_ios_ = 0;
  uint64_t write_ios_ = 0;
  uint64_t bytes_read_ = 0;
  uint64_t bytes_written_ = 0;
  Memo memo_[2];
};

}  // namespace semicore

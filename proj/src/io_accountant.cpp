#include "semicore/io_accountant.hpp"

#include "semicore/error.hpp"

namespace semicore {

IoAccountant::IoAccountant(uint64_t block_size) : block_size_(block_size) {
  if (block_size < 64 || (block_size & (block_size - 1)) != 0)
    throw Error(Errc::argument, "block size must be a power of two >= 64");
}

void IoAccountant::charge_read(Stream s, uint64_t offset, uint64_t nbytes) {
  if (nbytes == 0) return;
  uint64_t first = offset / block_size_;
  uint64_t last = (offset + nbytes - 1) / block_size_;
  uint64_t blocks = last - first + 1;
  auto& memo = memo_[static_cast<uint8_t>(s)].read_block;
  if (memo == first) blocks -= 1;
  read_ios_ += blocks;
  bytes_read_ += nbytes;
  memo = last;
}

void IoAccountant::charge_write(Stream s, uint64_t offset, uint64_t nbytes) {
  if (nbytes == 0) return;
  uint64_t first = offset / block_size_;
  uint64_t last = (offset + nbytes - 1) / block_size_;
  uint64_t blocks = last - first + 1;
  auto& memo = memo_[static_cast<uint8_t>(s)].write_block;
  if (memo == first) blocks -= 1;
  write_ios_ += blocks;
  bytes_written_ += nbytes;
  memo = last;
}

IoStats IoAccountant::stats() const {
  return {block_size_, read_ios_, write_ios_, bytes_read_, bytes_written_};
}

}  // namespace semicore

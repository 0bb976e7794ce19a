#pragma once

namespace semicore {

// Entry point behind the semicore binary; exposed so tests can drive the
// subcommands in-process. Exit codes: 0 success, 1 domain error (duplicate
// or missing edge, verify mismatch, storage), 2 usage error.
int run_cli(int argc, const char* const* argv);

}  // namespace semicore

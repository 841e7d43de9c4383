#pragma once

namespace wqed {

// Parses arguments and runs one subcommand. Returns the process exit
// status: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
int run_cli(int argc, const char* const* argv);

}  // namespace wqed

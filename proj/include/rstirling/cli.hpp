#pragma once

#include <iosfwd>

namespace rstirling {

/// Entry point shared by the rstirling binary and the in-process CLI
/// tests. Exit codes: 0 success, 1 verification failure, 2 argument
/// error, 3 oracle disagreement, 4 I/O error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rstirling

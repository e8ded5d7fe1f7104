#pragma once

#include <iosfwd>

namespace momentfit::cli {

/// Runs one CLI invocation: parses argv, dispatches the subcommand, writes
/// results to `out` and one-line diagnostics to `err`. `in` backs
/// `fit-data --input -`. Returns the process exit status: 0 on success, 1
/// for input errors, 2 for numerical failures.
int run(int argc, const char* const* argv, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace momentfit::cli

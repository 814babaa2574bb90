#pragma once

#include <iosfwd>

namespace nilknap {

/// Batch front end. Exit status: 0 on success (including UNSAT-in-box and
/// UNKNOWN results, which are reported in the output), 2 for usage and parse
/// errors, 1 for internal invariant violations.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nilknap

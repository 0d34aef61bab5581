#pragma once

#include <iosfwd>

namespace hopfren::cli {

// Runs the command line driver. Returns 0 when every check passes (or is
// skipped / an expected failure), 1 on a mismatch or failure, 2 on a usage
// or configuration error.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace hopfren::cli

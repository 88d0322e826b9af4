#pragma once

#include <iosfwd>

namespace seasonwarp::cli {

/// Runs the seasonwarp command line. Returns the process exit code:
/// 0 success, 1 usage error, 2 data or I/O error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace seasonwarp::cli

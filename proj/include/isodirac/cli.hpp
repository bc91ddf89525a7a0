#pragma once

#include <iosfwd>

namespace isodirac {

// Full command-line driver, callable in-process (the tests drive it this
// way). Returns the process exit code: 0 success, 1 failed verification or
// norm check, 2 usage error, 3 numerical failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace isodirac

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace apartition {

// Command-line driver. args excludes the program name.
// Exit codes: 0 success/verified, 1 expectation violated (inequality
// violation or oracle mismatch), 2 usage error, 3 internal/numeric failure.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace apartition

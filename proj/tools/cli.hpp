#pragma once

#include <iosfwd>

namespace dc::cli {

/// Full command dispatch; returns the process exit code.
/// Exit 0: positive verdict; 1: negative verdict; 2: usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace dc::cli

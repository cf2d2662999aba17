#pragma once

#include <iosfwd>

namespace drg {

/// Exit codes: 0 success or verified, 1 checked and false, 2 usage error,
/// 3 internal bug trap.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace drg

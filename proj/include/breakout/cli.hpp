#pragma once

#include <iosfwd>

namespace breakout {

/// Dispatches one subcommand. Returns 0 on success, 1 on domain errors or a
/// failed verification, 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace breakout

#pragma once

#include <iosfwd>

namespace sesim {

inline constexpr int kExitInputError = 2;
inline constexpr int kExitSimulationError = 3;

// Subcommands: run, compare, validate. Diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sesim

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mpeda::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // I/O or internal failure
inline constexpr int kExitUsage = 2;    // bad flags or an input assumption violated

/// Runs the command line `args` (without the program name). Normal output
/// goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mpeda::cli

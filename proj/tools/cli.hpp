#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace phaseless::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitNumerical = 3;

/// Runs one command line (args excludes the program name). Results go to
/// `out` unless --out names a file; errors go to `err` as one JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace phaseless::cli

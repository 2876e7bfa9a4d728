#pragma once

#include <ostream>

namespace srgmcs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitRuntime = 3;

/// Runs one command line. Reports go to `out` (or the --out file), messages to `err`.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace srgmcs::cli

#pragma once

#include <ostream>

namespace dquad::cli {

inline constexpr int kExitQFactorial = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNotQFactorial = 10;
inline constexpr int kExitUndetermined = 20;

/// Runs one command line (argv[0] is the program name) and returns the process exit code.
/// Reports go to `out` or the --out file, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dquad::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stairpoly::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitParseError = 2;

/// Runs the command line tool. `args` excludes the program name. Records go
/// to `out`, diagnostics to `err`; `in` backs the "-" polynomial argument.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace stairpoly::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ehz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;  // failed identity or library error
inline constexpr int kExitUsage = 2;

// args excludes the program name, e.g. {"zeta", "--type", "C", "--n", "2", "--ell", "1"}
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ehz::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace explab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one CLI invocation. args excludes the program name. The report (or
/// a JSON error document for domain errors) goes to out; help and usage
/// errors go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace explab

#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace fourpoint::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,         ///< parse or usage error
  kExitDomain = 3,        ///< invariant violation, degenerate or concyclic input
  kExitVerification = 4,  ///< a self-check failed
};

/// Runs one command; `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

std::string usage();

}  // namespace fourpoint::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quatspec::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInvariantFailed = 1,
  kNotSkewSelfadjoint = 2,
  kParseError = 3,
  kNotSimpleSpectrum = 4,
};

/// Runs the command line `quatspec <args...>`; args excludes the program name.
/// Reads "-" inputs from `in`, writes reports to `out` unless --output is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace quatspec::cli

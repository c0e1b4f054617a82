#pragma once

#include <ostream>

namespace toeplitz::cli {

enum ExitCode : int {
  kTrue = 0,
  kFalse = 1,
  kInputError = 2,
  kOracleDisagreement = 3,
};

/// Runs one command line. Never throws; the result is always an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toeplitz::cli

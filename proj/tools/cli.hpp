#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace entcat::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,    // definite negative verdict
  kInputError = 2,  // unparsable or invalid spectra, flags, probabilities
  kUsageError = 3,  // well-formed but contradictory request
};

/// Parses inline "0.5,0.5" or, when `arg` names an existing file, one
/// decimal per line with '#' comments and blank lines ignored.
std::vector<double> read_spectrum_input(const std::string& arg);

/// Runs the command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entcat::cli

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "recurseq/numeric.hpp"

namespace recurseq::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kResource = 3,
  kDegenerate = 4,
  kNonReal = 5,
};

struct OutputFormat {
  enum class Mode { Rational, Decimal, Records };
  Mode mode = Mode::Rational;
  unsigned digits = 0;
};

/// "rational", "decimal:N" (N >= 1) or "records".
OutputFormat parse_output_format(std::string_view text);

/// Rational mode prints the reduced fraction; decimal mode rounds half-even.
/// Records mode prints the exact fraction (it is embedded in a record).
std::string format_value(const Rational& value, const OutputFormat& format);

/// Runs one command line (args excludes the program name). Everything meant
/// for the user goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace recurseq::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitInvariantFailure = 3;

/// Runs one command line (without the program name). The report goes to
/// `out` (or to --out), diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "1/3", "0.25", "sqrt(2)", "golden", "pi", "-sqrt(5)/2" style angles
/// (in turns). Exact rationals set `exact`.
struct Theta {
  double value = 0;
  bool exact = false;
  std::string rational;  // canonical p/q when exact
};
Theta parse_theta(const std::string& text);

}  // namespace dlab::cli

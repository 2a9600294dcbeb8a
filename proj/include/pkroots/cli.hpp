#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "pkroots/upoly.hpp"

namespace pkroots::cli {

enum class Mode { roots, factors, igusa };

struct JobSpec {
  std::optional<std::string> poly;    // expression in x
  std::optional<std::string> coeffs;  // "a0,a1,...", ascending
  std::string p = "2";
  unsigned k = 1;
  Mode mode = Mode::roots;
  unsigned K = 5;
  bool json = false;
  bool verify = false;
  bool normalize = true;
  int threads = 0;  // 0 keeps the OpenMP default
};

/// Integer polynomial from an expression over +, -, *, ^, parentheses,
/// integers and x. Juxtaposition ("3x", "2(x+1)") multiplies.
UPoly parse_polynomial(const std::string& text);
/// Integer polynomial from a comma-separated ascending coefficient list.
UPoly parse_coefficients(const std::string& text);

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNotMonic = 3;
inline constexpr int kExitVerifyMismatch = 4;

/// Execute one job, writing the report to `out` and diagnostics to `err`.
int run(const JobSpec& spec, std::ostream& out, std::ostream& err);

/// Parse command-line flags and run.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace pkroots::cli

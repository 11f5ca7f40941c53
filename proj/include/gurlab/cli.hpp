#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "gurlab/types.hpp"

namespace gur::cli {

// Exit codes: 0 satisfied/success, 1 usage/IO/parse error, 2 inequality
// violated (check only), 3 selftest invariant failure.

enum class Format { text, json, csv };

struct CheckArgs {
  std::string problem_path;
  std::string inequality;
  std::optional<Complex> s;
  std::optional<Complex> t;
  double tol = tol::report;
  Format format = Format::text;
};
int run_check(const CheckArgs& args, std::ostream& out, std::ostream& err);

struct ExampleArgs {
  int number = 1;
  std::string out_path;
  int grid1 = 0; // 0 = per-example default
  int grid2 = 0;
  std::uint64_t seed = 20240817;
};
int run_example(const ExampleArgs& args, std::ostream& out, std::ostream& err);

struct SelftestArgs {
  std::uint64_t seed = 20240817;
  int n = 1000;
  std::string inject; // "" or "z11-sign-flip"
};
int run_selftest(const SelftestArgs& args, std::ostream& out, std::ostream& err);

/// Locale-independent %.12g-style rendering used for all CSV output.
std::string format_double(double v);

} // namespace gur::cli

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gurlab/cli.hpp"
#include "gurlab/errors.hpp"

namespace {

gur::Complex parse_complex_flag(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(text), 0.0};
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("expected a complex number as re,im, got '" + text +
                               "'");
  }
}

void parse_grid_flag(const std::string& text, int& n1, int& n2) {
  const auto x = text.find('x');
  try {
    if (x == std::string::npos) {
      n1 = std::stoi(text);
      n2 = 0;
    } else {
      n1 = std::stoi(text.substr(0, x));
      n2 = std::stoi(text.substr(x + 1));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("expected a grid as n1xn2, got '" + text + "'");
  }
  if (n1 < 1 || (x != std::string::npos && n2 < 1)) {
    throw CLI::ValidationError("grid sizes must be >= 1");
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cumulant uncertainty-relation laboratory"};
  app.require_subcommand(1);

  gur::cli::CheckArgs check;
  std::string s_flag, t_flag;
  bool as_json = false, as_csv = false;
  CLI::App* check_cmd =
      app.add_subcommand("check", "Evaluate one inequality on a problem file");
  check_cmd->add_option("problem", check.problem_path, "JSON problem file")
      ->required();
  check_cmd->add_option("inequality", check.inequality, "inequality identifier")
      ->required();
  check_cmd->add_option("--s", s_flag, "complex parameter s as re,im");
  check_cmd->add_option("--t", t_flag, "complex parameter t as re,im");
  check_cmd->add_option("--tol", check.tol, "satisfaction tolerance");
  check_cmd->add_flag("--json", as_json, "JSON report");
  check_cmd->add_flag("--csv", as_csv, "CSV report");

  gur::cli::ExampleArgs example;
  std::string grid_flag;
  CLI::App* example_cmd =
      app.add_subcommand("example", "Reproduce one of the worked examples (1-4)");
  example_cmd->add_option("n", example.number, "example number")
      ->required()
      ->check(CLI::Range(1, 4));
  example_cmd->add_option("--out", example.out_path, "CSV output path");
  example_cmd->add_option("--grid", grid_flag, "grid size as n1xn2");
  example_cmd->add_option("--seed", example.seed, "sampling seed");

  gur::cli::SelftestArgs selftest;
  CLI::App* selftest_cmd =
      app.add_subcommand("selftest", "Run the random-instance invariant suites");
  selftest_cmd->add_option("--seed", selftest.seed, "PRNG seed");
  selftest_cmd->add_option("--n", selftest.n, "instances per suite");
  selftest_cmd->add_option("--inject", selftest.inject,
                           "fault injection (z11-sign-flip)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (check_cmd->parsed()) {
      if (!s_flag.empty()) check.s = parse_complex_flag(s_flag);
      if (!t_flag.empty()) check.t = parse_complex_flag(t_flag);
      if (as_json && as_csv) {
        std::cerr << "error: --json and --csv are mutually exclusive\n";
        return 1;
      }
      if (as_json) check.format = gur::cli::Format::json;
      if (as_csv) check.format = gur::cli::Format::csv;
      return gur::cli::run_check(check, std::cout, std::cerr);
    }
    if (example_cmd->parsed()) {
      if (!grid_flag.empty()) parse_grid_flag(grid_flag, example.grid1, example.grid2);
      return gur::cli::run_example(example, std::cout, std::cerr);
    }
    return gur::cli::run_selftest(selftest, std::cout, std::cerr);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

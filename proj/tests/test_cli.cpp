#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gurlab/cli.hpp"
#include "gurlab/problem.hpp"
#include "gurlab/scenarios.hpp"
#include "gurlab/selftest.hpp"

using namespace gur;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  const fs::path dir = fs::temp_directory_path() / "gurlab_cli_tests";
  fs::create_directories(dir);
  return dir;
}

fs::path write_problem_psi1_pauli(double theta, double phi) {
  ProblemFile p;
  p.dim = 2;
  p.observables.emplace("X", sigma_x().matrix());
  p.observables.emplace("Y", sigma_y().matrix());
  p.state = psi1(theta, phi);
  const fs::path path = temp_dir() / "psi1.json";
  std::ofstream out(path);
  out << serialize_problem(p);
  return path;
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(GURLAB_BIN_PATH) + " " + args +
                          " > /dev/null 2> /dev/null";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("check: satisfied quantum relation exits 0") {
  const fs::path path = write_problem_psi1_pauli(M_PI / 2, M_PI);
  cli::CheckArgs args;
  args.problem_path = path.string();
  args.inequality = "quantum_ur";
  args.s = Complex(1, 0);
  args.t = Complex(1, 0);
  std::ostringstream out, err;
  CHECK(cli::run_check(args, out, err) == 0);
  CHECK(out.str().find("satisfied: yes") != std::string::npos);
}

TEST_CASE("check: the classical violation exits 2 with the frozen margin") {
  const fs::path path = write_problem_psi1_pauli(M_PI / 2, M_PI);
  cli::CheckArgs args;
  args.problem_path = path.string();
  args.inequality = "classical_ur";
  args.s = Complex(1, 0);
  args.t = Complex(1, 0);
  std::ostringstream out, err;
  CHECK(cli::run_check(args, out, err) == 2);
  CHECK(out.str().find("margin: -0.146755382905") != std::string::npos);
  CHECK(out.str().find("satisfied: no") != std::string::npos);
}

TEST_CASE("check: json and csv formats") {
  const fs::path path = write_problem_psi1_pauli(0.4, 0.9);
  cli::CheckArgs args;
  args.problem_path = path.string();
  args.inequality = "gur_full";
  args.format = cli::Format::json;
  std::ostringstream out, err;
  CHECK(cli::run_check(args, out, err) == 0);
  CHECK(out.str().find("\"satisfied\": true") != std::string::npos);

  args.format = cli::Format::csv;
  std::ostringstream out2, err2;
  CHECK(cli::run_check(args, out2, err2) == 0);
  CHECK(out2.str().rfind("name,lhs,rhs,margin", 0) == 0);
}

TEST_CASE("check: errors exit 1") {
  cli::CheckArgs args;
  args.problem_path = (temp_dir() / "missing.json").string();
  args.inequality = "quantum_ur";
  std::ostringstream out, err;
  CHECK(cli::run_check(args, out, err) == 1);

  const fs::path bad = temp_dir() / "bad.json";
  std::ofstream(bad) << "{ not json";
  args.problem_path = bad.string();
  CHECK(cli::run_check(args, out, err) == 1);

  const fs::path good = write_problem_psi1_pauli(0.3, 0.3);
  args.problem_path = good.string();
  args.inequality = "no_such_inequality";
  CHECK(cli::run_check(args, out, err) == 1);
}

TEST_CASE("example 1 emits the sweep with header and violations") {
  cli::ExampleArgs args;
  args.number = 1;
  args.grid1 = 24;
  args.grid2 = 24;
  args.out_path = (temp_dir() / "ex1.csv").string();
  std::ostringstream out, err;
  CHECK(cli::run_example(args, out, err) == 0);
  CHECK(err.str().find("regions 2") != std::string::npos);

  std::ifstream csv(args.out_path);
  std::string header;
  std::getline(csv, header);
  CHECK(header == "theta,phi,lhs,rhs,margin");
  int rows = 0;
  for (std::string line; std::getline(csv, line);) ++rows;
  CHECK(rows == 24 * 24);
}

TEST_CASE("example 2 reports the vanishing Schrodinger bound") {
  cli::ExampleArgs args;
  args.number = 2;
  args.grid1 = 6;
  args.grid2 = 6;
  std::ostringstream out, err;
  CHECK(cli::run_example(args, out, err) == 0);
  CHECK(err.str().find("schrodinger_rhs") != std::string::npos);
  const auto pos = err.str().find("min_rhs ");
  REQUIRE(pos != std::string::npos);
  CHECK(std::stod(err.str().substr(pos + 8)) > 1.0);
}

TEST_CASE("example 3 reports the singlet sum and the separable floor") {
  cli::ExampleArgs args;
  args.number = 3;
  args.grid1 = 60; // sample count for a quick run
  std::ostringstream out, err;
  CHECK(cli::run_example(args, out, err) == 0);
  const auto sing = err.str().find("singlet_k2_sum ");
  REQUIRE(sing != std::string::npos);
  CHECK(std::abs(std::stod(err.str().substr(sing + 15))) < 1e-12);
  const auto pos = err.str().find("separable_min ");
  REQUIRE(pos != std::string::npos);
  CHECK(std::stod(err.str().substr(pos + 14)) >= 2.0 - 1e-9);
}

TEST_CASE("example 4 reports the threshold and the maximum") {
  cli::ExampleArgs args;
  args.number = 4;
  args.grid1 = 9;
  std::ostringstream out, err;
  CHECK(cli::run_example(args, out, err) == 0);
  const auto spos = err.str().find("eta_star ");
  REQUIRE(spos != std::string::npos);
  CHECK(std::stod(err.str().substr(spos + 9)) ==
        doctest::Approx(std::pow(2.0, -1.0 / 3.0) - 1.0 / 3.0).epsilon(1e-4));
  const auto mpos = err.str().find("max_kappa3_eta1 ");
  REQUIRE(mpos != std::string::npos);
  CHECK(std::stod(err.str().substr(mpos + 16)) ==
        doctest::Approx(64.0 * std::sqrt(6.0) / 9.0).epsilon(1e-7));
}

TEST_CASE("selftest passes with the default assembly") {
  cli::SelftestArgs args;
  args.n = 60;
  std::ostringstream out, err;
  CHECK(cli::run_selftest(args, out, err) == 0);
  CHECK(out.str().find("gur_nonnegativity") != std::string::npos);
  CHECK(out.str().find("taylor_coefficient_oracle") != std::string::npos);
  CHECK(out.str().find("FAIL") == std::string::npos);
}

TEST_CASE("selftest with n = 0 passes vacuously") {
  cli::SelftestArgs args;
  args.n = 0;
  std::ostringstream out, err;
  CHECK(cli::run_selftest(args, out, err) == 0);
}

TEST_CASE("selftest catches the sign-flip injection and dumps a counterexample") {
  cli::SelftestArgs args;
  args.n = 40;
  args.inject = "z11-sign-flip";
  std::ostringstream out, err;
  CHECK(cli::run_selftest(args, out, err) == 3);
  CHECK(out.str().find("FAIL") != std::string::npos);
  const auto pos = out.str().find("counterexample");
  REQUIRE(pos != std::string::npos);

  // the dump replays as a problem file
  const auto brace = out.str().find('{', pos);
  REQUIRE(brace != std::string::npos);
  const ProblemFile p = parse_problem(out.str().substr(brace));
  CHECK(p.dim == 2);
  CHECK(p.observables.count("X") == 1);
  CHECK(p.params.count("s") == 1);
}

TEST_CASE("selftest rejects unknown injections") {
  cli::SelftestArgs args;
  args.inject = "whatever";
  std::ostringstream out, err;
  CHECK(cli::run_selftest(args, out, err) == 1);
}

TEST_CASE("binary end to end") {
  CHECK(run_binary("selftest --n 0") == 0);
  CHECK(run_binary("selftest --n 25 --inject z11-sign-flip") == 3);
  CHECK(run_binary("example 5") == 1);   // out of range
  CHECK(run_binary("nonsense") == 1);    // usage error
  CHECK(run_binary("--help") == 0);

  const fs::path path = write_problem_psi1_pauli(M_PI / 2, M_PI);
  CHECK(run_binary("check " + path.string() + " quantum_ur --s 1 --t 1") == 0);
  CHECK(run_binary("check " + path.string() + " classical_ur --s 1,0 --t 1,0") == 2);
  CHECK(run_binary("check " + path.string() + " classical_ur --s nope") == 1);
}

} // TEST_SUITE

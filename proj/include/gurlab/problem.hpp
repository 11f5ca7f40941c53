#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "gurlab/qmat.hpp"

namespace gur {

/// JSON problem description: named observables, one state, named complex
/// parameters. Complex numbers are [re, im] two-arrays throughout; unknown
/// fields are rejected.
struct ProblemFile {
  int dim = 0;
  std::map<std::string, CMatrix> observables;
  State state;
  std::map<std::string, Complex> params;
};

ProblemFile parse_problem(const std::string& text);
ProblemFile load_problem(const std::filesystem::path& path);
std::string serialize_problem(const ProblemFile& problem);

} // namespace gur

#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gurlab/types.hpp"

namespace gur::scan {

using Bindings = std::map<std::string, double>;

struct GridVar {
  std::string name;
  double lo = 0;
  double hi = 0;
  int n = 0;
};

struct GridSpec {
  GridVar var1;
  std::optional<GridVar> var2;
  Bindings fixed;
};

struct Row {
  std::array<double, 2> coords{0, 0}; // coords[1] unused for 1-D grids
  double lhs = 0;
  double rhs = 0;
  double margin = 0;
};

struct ScanResult {
  std::vector<Row> rows;                 // lexicographic grid order, var1-major
  std::vector<std::size_t> violation_cells;
  std::optional<std::pair<std::array<double, 2>, double>> extremum; // min margin
};

/// lhs, rhs, margin at one grid point.
using Evaluator = std::function<std::array<double, 3>(const Bindings&)>;

/// Evaluates every grid point. Row order is deterministic regardless of
/// the thread count.
ScanResult sweep(const Evaluator& eval, const GridSpec& grid,
                 double violation_tol = tol::violation, int threads = 1);

/// Registry-backed sweep over a named inequality evaluator.
ScanResult sweep(const std::string& inequality_id, const GridSpec& grid,
                 double violation_tol = tol::violation, int threads = 1);

/// Named evaluators over the built-in scenarios. Qubit inequalities run on
/// the psi1(theta, phi) family with X = sigma_x, Y = sigma_y and accept
/// bindings theta, phi, s_re, s_im, t_re, t_im (s, t as real aliases);
/// exp_ratio_ur runs on psi2 with Lx, Ly and accepts s, t.
Evaluator make_evaluator(const std::string& inequality_id);
std::vector<std::string> registered_inequalities();
void validate_bindings(const std::string& inequality_id, const GridSpec& grid);

/// Connected components (4-neighborhood) of the violation cells.
std::vector<std::vector<std::size_t>> connected_regions(const ScanResult& result,
                                                        const GridSpec& grid);

/// 256-point coarse scan followed by golden-section refinement.
std::pair<double, double> maximize_1d(const std::function<double(double)>& f,
                                      double lo, double hi, double tol);

/// Bisection solve of g(x) = target on [lo, hi]; requires a sign change.
double threshold_bisect(const std::function<double(double)>& g, double lo,
                        double hi, double target, double tol);

} // namespace gur::scan

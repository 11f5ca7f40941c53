#pragma once

#include <array>
#include <string>

#include "gurlab/qmat.hpp"

namespace gur {

struct SingleCumulants {
  double k1 = 0; // mean
  double k2 = 0; // variance
  double k3 = 0; // skewness
  double k4 = 0; // kurtosis
};

struct CrossCumulants {
  double k11 = 0;
  double k12 = 0; // one X, two Y
  double k21 = 0; // two X, one Y
};

/// Cumulants of a pair of observables in one state.
struct CumulantTable {
  std::string state_id;
  std::array<std::string, 2> observable_ids;
  SingleCumulants x;
  SingleCumulants y;
  CrossCumulants cross;
};

struct ConvergenceRadius {
  double radius = 0; // log2 / sigma_max
};

/// {X,Y,Y} = XYY + YXY + YYX, the third-order anticommutator.
CMatrix anticommutator3(const CMatrix& x, const CMatrix& y);

/// <X^n>, n <= 8.
double moment(const State& state, const Observable& x, int n);

SingleCumulants cumulants_single(const State& state, const Observable& x);

CrossCumulants cross_cumulants(const State& state, const Observable& x,
                               const Observable& y);

CumulantTable make_cumulant_table(const State& state, const Observable& x,
                                  const Observable& y, std::string state_id = {},
                                  std::string x_id = "X", std::string y_id = "Y");

/// K(sX) = log<e^{sX}>, principal scalar logarithm. Emits an
/// out_of_convergence_region warning when |Re s| * sigma_max >= log 2;
/// throws ZeroExpectation when |<e^{sX}>| underflows.
Complex cgf(const State& state, const Observable& x, Complex s);

/// Truncated cumulant series sum_{m=1..order} s^m kappa_m / m!, order <= 4.
Complex cgf_series(const State& state, const Observable& x, Complex s, int order);

ConvergenceRadius convergence_radius(const Observable& x);

/// kappa_n(sX + tY) - [s^n kappa_n(X) + t^n kappa_n(Y)] for commuting X, Y
/// and real s, t; zero for independent observables. n <= 4.
double linearization_defect(const State& state, const Observable& x,
                            const Observable& y, double s, double t, int n);

} // namespace gur

#pragma once

#include <string>

#include "gurlab/bch.hpp"
#include "gurlab/cumulant.hpp"
#include "gurlab/qmat.hpp"

namespace gur {

/// Two sides of a named inequality at given complex parameters.
/// margin = lhs - rhs; negative margin means violation.
struct GurReport {
  std::string name;
  double lhs = 0;
  double rhs = 0;
  double margin = 0;
  Complex s;
  Complex t;
  double tol = tol::report;
  bool satisfied = true;
  /// Set for density-matrix inputs: the Cauchy-Schwarz derivation is
  /// stated for pure states, so the bound is evaluated but not guaranteed.
  bool unproven_regime = false;
};

/// K[(s+s*)X] + K[(t+t*)Y] >= K(Z_st) + K*(Z_st), the full relation.
GurReport gur_full(const State& state, const Observable& x, const Observable& y,
                   Complex s, Complex t, double tol = tol::report);

/// |LHS - RHS| of the first-order identity
/// (s+s*)<X> + (t+t*)<Y> = <sX+tY> + <sX+tY>*.
double first_order_identity(const State& state, const Observable& x,
                            const Observable& y, Complex s, Complex t);

/// |s|^2 k2(X) + |t|^2 k2(Y) >= [k11(sX,tY) + <Z11>] + c.c.
GurReport variance_ur(const State& state, const Observable& x, const Observable& y,
                      Complex s, Complex t, double tol = tol::report);

/// Phase- and weight-optimized second-order relation; reproduces the
/// Schrodinger bound. Degenerate variances fall back to the unweighted
/// s = t form instead of erroring.
GurReport variance_ur_optimal(const State& state, const Observable& x,
                              const Observable& y, double tol = tol::report);

/// |<(X-<X>)(Y-<Y>)>| / (dX dY), in [0, 1].
double pearson(const State& state, const Observable& x, const Observable& y);

/// Third-order relation with the skewness corrections on both sides.
GurReport skewness_ur(const State& state, const Observable& x, const Observable& y,
                      Complex s, Complex t, double tol = tol::report);

/// Commuting-pair special case at real s = t = eps, assembled from the
/// displayed moments including the {X,Y,Y}/3 terms and their swaps.
GurReport variance_skewness_ur(const State& state, const Observable& x,
                               const Observable& y, double eps,
                               double tol = tol::report);

/// <e^{sX+s*X}><e^{tY+t*Y}> >= |<e^{sX+tY}>|^2 (single exponential on the
/// right; violated by entangled statistics of noncommuting observables).
GurReport classical_ur(const State& state, const Observable& x, const Observable& y,
                       Complex s, Complex t, double tol = tol::report);

/// <e^{sX+s*X}><e^{tY+t*Y}> >= |<e^{sX}e^{tY}>|^2, the exponential form of
/// gur_full; holds for all s, t.
GurReport quantum_ur(const State& state, const Observable& x, const Observable& y,
                     Complex s, Complex t, double tol = tol::report);

/// Normalized-ratio rearrangement of quantum_ur for real s, t.
GurReport exp_ratio_ur(const State& state, const Observable& x, const Observable& y,
                       double s, double t, double tol = tol::report);

} // namespace gur

#pragma once

#include "gurlab/gur.hpp"
#include "gurlab/qmat.hpp"

namespace gur {

// Basis conventions used throughout: qubit |+> is the sigma_z eigenvector
// with eigenvalue +1; the spin-1 basis is ordered (|1>, |0>, |-1>); hbar = 1.

const Observable& sigma_x();
const Observable& sigma_y();
const Observable& sigma_z();

/// cos(theta/2)|+> + e^{i phi} sin(theta/2)|->.
State psi1(double theta, double phi);

/// (|1> + |0> + |-1>)/sqrt(3) in the spin-1 basis.
State psi2();

/// Two-qubit singlet (|+-> - |-+>)/sqrt(2).
State psi3();

/// Closed forms of the two sides of the classical relation on the psi1
/// family with X = sigma_x, Y = sigma_y at s = t = 1.
struct Example1Surfaces {
  double lhs = 0;
  double rhs = 0;
};
Example1Surfaces example1_surfaces(double theta, double phi);

struct AngularMomenta {
  Observable lx, ly, lz;
};
AngularMomenta angular_momenta_l1();

/// A = sx(x)1 + 1(x)sx and the y, z partners on two qubits.
struct CollectiveObservables {
  Observable a, b, c;
};
CollectiveObservables collective_observables();

/// zeta_i witnesses for a single qubit; bound = zeta1 + zeta2 + zeta3.
/// For pure states k2_sum >= bound >= 1; mixed states are evaluated but
/// out of guarantee (guaranteed = false).
struct ZetaBound {
  double zeta1 = 0, zeta2 = 0, zeta3 = 0;
  double bound = 0;
  double k2_sum = 0;
  bool guaranteed = true;
};
ZetaBound zeta_bound(const State& state);

/// Weighted sum of the three phase-optimized pair relations on the Pauli
/// triple; weights are magnitudes |s_i|, |t_i|.
GurReport weighted_zeta_report(const State& state, double s1, double t1, double s2,
                               double t2, double s3, double t3,
                               double tol = tol::report);

struct WernerState {
  double eta = 0;
  State rho;
};
/// (1-eta)/4 * 1(x)1 + eta |psi3><psi3|, eta in [-1/3, 1].
WernerState werner(double eta);

struct ChshOperator {
  double theta = 0;
  Observable s_op;
};
/// S = X(x)Y - X(x)Y' + X'(x)Y + X'(x)Y' with X = sz, X' = sx,
/// Y = sin(theta) sx + cos(theta) sz, Y' = cos(theta) sx - sin(theta) sz.
ChshOperator chsh_operator(double theta);

/// Closed-form kappa3 of the CHSH operator in the Werner state:
/// -8 eta (cos+sin)[-1 - 3 eta + 2 eta^2 (cos+sin)^2].
double kappa3_S(double eta, double theta);

/// Local-hidden-variable bound on the absolute third central moment of S.
double lhvt_k3_bound();

} // namespace gur

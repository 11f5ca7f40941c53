#include "gurlab/scenarios.hpp"

#include <cmath>

namespace gur {

namespace {

CMatrix pauli_x_m() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

CMatrix pauli_y_m() {
  CMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

CMatrix pauli_z_m() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

} // namespace

const Observable& sigma_x() {
  static const Observable o = Observable::from_matrix(pauli_x_m());
  return o;
}

const Observable& sigma_y() {
  static const Observable o = Observable::from_matrix(pauli_y_m());
  return o;
}

const Observable& sigma_z() {
  static const Observable o = Observable::from_matrix(pauli_z_m());
  return o;
}

State psi1(double theta, double phi) {
  CVector v(2);
  v << std::cos(theta / 2), std::polar(std::sin(theta / 2), phi);
  // renormalize: cos^2 + sin^2 is 1 up to rounding
  v /= v.norm();
  return State::pure(v);
}

State psi2() {
  CVector v = CVector::Constant(3, Complex(1.0 / std::sqrt(3.0), 0));
  v /= v.norm();
  return State::pure(v);
}

State psi3() {
  CVector v(4);
  v << 0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0;
  v /= v.norm();
  return State::pure(v);
}

Example1Surfaces example1_surfaces(double theta, double phi) {
  const double st = std::sin(theta);
  const double lhs = (std::cosh(2) + std::cos(phi) * st * std::sinh(2)) *
                     (std::cosh(2) + std::sin(phi) * st * std::sinh(2));
  const double r2 = std::sqrt(2.0);
  const double inner =
      r2 * std::cosh(r2) + st * (std::cos(phi) + std::sin(phi)) * std::sinh(r2);
  return {lhs, 0.5 * inner * inner};
}

AngularMomenta angular_momenta_l1() {
  const double r = 1.0 / std::sqrt(2.0);
  CMatrix lx(3, 3), ly(3, 3), lz(3, 3);
  lx << 0, r, 0, r, 0, r, 0, r, 0;
  ly << 0, Complex(0, -r), 0, Complex(0, r), 0, Complex(0, -r), 0, Complex(0, r), 0;
  lz << 1, 0, 0, 0, 0, 0, 0, 0, -1;
  return {Observable::from_matrix(lx), Observable::from_matrix(ly),
          Observable::from_matrix(lz)};
}

CollectiveObservables collective_observables() {
  const CMatrix id = CMatrix::Identity(2, 2);
  const auto collective = [&](const CMatrix& p) {
    return Observable::from_matrix(tensor(p, id) + tensor(id, p));
  };
  return {collective(pauli_x_m()), collective(pauli_y_m()), collective(pauli_z_m())};
}

ZetaBound zeta_bound(const State& state) {
  if (state.dim() != 2) {
    throw DimensionError("zeta_bound: single-qubit states only");
  }
  const double ex = expectation(state, sigma_x().matrix()).real();
  const double ey = expectation(state, sigma_y().matrix()).real();
  const double ez = expectation(state, sigma_z().matrix()).real();
  ZetaBound z;
  z.zeta1 = std::hypot(ex * ey, ez);
  z.zeta2 = std::hypot(ey * ez, ex);
  z.zeta3 = std::hypot(ez * ex, ey);
  z.bound = z.zeta1 + z.zeta2 + z.zeta3;
  z.k2_sum = 3.0 - ex * ex - ey * ey - ez * ez;
  z.guaranteed = state.is_pure();
  return z;
}

GurReport weighted_zeta_report(const State& state, double s1, double t1, double s2,
                               double t2, double s3, double t3, double tol) {
  const ZetaBound z = zeta_bound(state);
  const double k2x = cumulants_single(state, sigma_x()).k2;
  const double k2y = cumulants_single(state, sigma_y()).k2;
  const double k2z = cumulants_single(state, sigma_z()).k2;
  const double lhs = s1 * s1 * k2x + t1 * t1 * k2y + s2 * s2 * k2y + t2 * t2 * k2z +
                     s3 * s3 * k2z + t3 * t3 * k2x;
  const double rhs = 2 * (std::abs(s1 * t1) * z.zeta1 + std::abs(s2 * t2) * z.zeta2 +
                          std::abs(s3 * t3) * z.zeta3);
  GurReport r;
  r.name = "weighted_zeta";
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = lhs - rhs;
  r.s = Complex(s1, 0);
  r.t = Complex(t1, 0);
  r.tol = tol;
  r.satisfied = r.margin >= -tol;
  r.unproven_regime = state.is_density();
  return r;
}

WernerState werner(double eta) {
  if (eta < -1.0 / 3.0 || eta > 1.0) {
    throw EtaOutOfRange("werner: eta = " + std::to_string(eta) +
                        " outside [-1/3, 1]");
  }
  const CVector v = psi3().vector();
  CMatrix rho = (1.0 - eta) / 4.0 * CMatrix::Identity(4, 4) +
                eta * (v * v.adjoint());
  return {eta, State::density(std::move(rho))};
}

ChshOperator chsh_operator(double theta) {
  const CMatrix x = pauli_z_m();
  const CMatrix xp = pauli_x_m();
  const CMatrix y = std::sin(theta) * pauli_x_m() + std::cos(theta) * pauli_z_m();
  const CMatrix yp = std::cos(theta) * pauli_x_m() - std::sin(theta) * pauli_z_m();
  const CMatrix s = tensor(x, y) - tensor(x, yp) + tensor(xp, y) + tensor(xp, yp);
  return {theta, Observable::from_matrix(s)};
}

double kappa3_S(double eta, double theta) {
  if (eta < -1.0 / 3.0 || eta > 1.0) {
    throw EtaOutOfRange("kappa3_S: eta = " + std::to_string(eta) +
                        " outside [-1/3, 1]");
  }
  const double u = std::cos(theta) + std::sin(theta);
  return -8.0 * eta * u * (-1.0 - 3.0 * eta + 2.0 * eta * eta * u * u);
}

double lhvt_k3_bound() { return 8.0; }

} // namespace gur

#include "gurlab/gur.hpp"

#include <cmath>

#include "gurlab/warnings.hpp"

namespace gur {

namespace {

void require_same_dim(const State& state, const Observable& x, const Observable& y,
                      const char* who) {
  if (x.dim() != y.dim() || state.dim() != x.dim()) {
    throw DimensionError(std::string(who) + ": dims state=" +
                         std::to_string(state.dim()) + " X=" + std::to_string(x.dim()) +
                         " Y=" + std::to_string(y.dim()));
  }
}

GurReport finish(std::string name, double lhs, double rhs, Complex s, Complex t,
                 double tol, const State& state) {
  if (!std::isfinite(lhs) || !std::isfinite(rhs)) {
    throw Error(name + ": non-finite report sides");
  }
  GurReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = lhs - rhs;
  r.s = s;
  r.t = t;
  r.tol = tol;
  r.satisfied = r.margin >= -tol;
  r.unproven_regime = state.is_density();
  return r;
}

double checked_real_exp_expectation(const State& state, const Observable& x,
                                    double a, const char* who) {
  const double w = exp_expectation(state, x, Complex(a, 0)).real();
  if (std::abs(w) < tol::zero_expectation) {
    throw ZeroExpectation(std::string(who) + ": <e^{aX}> underflowed");
  }
  return w;
}

void warn_if_outside_perturbative(Complex s, Complex t, const char* who) {
  if (std::abs(s) > tol::perturbative_st || std::abs(t) > tol::perturbative_st) {
    warnings::emit(warnings::Code::outside_perturbative_range,
                   std::string(who) + ": |s| or |t| exceeds " +
                       std::to_string(tol::perturbative_st) +
                       "; the truncated relation is a small-parameter statement");
  }
}

// sqrt(|<[X,Y]>|^2 + |<{X,Y}> - 2<X><Y>|^2) and its two components.
struct SchrodingerPieces {
  double anti_centered; // <{X,Y}> - 2<X><Y>, real
  double comm_imag;     // Im <[X,Y]> (the expectation is purely imaginary)
  double root;
};

SchrodingerPieces schrodinger_pieces(const State& state, const Observable& x,
                                     const Observable& y) {
  const Complex comm = expectation(state, commutator(x.matrix(), y.matrix()));
  const double anti = expectation(state, anticommutator(x.matrix(), y.matrix())).real();
  const double ex = expectation(state, x.matrix()).real();
  const double ey = expectation(state, y.matrix()).real();
  SchrodingerPieces p;
  p.anti_centered = anti - 2 * ex * ey;
  p.comm_imag = comm.imag();
  p.root = std::hypot(std::abs(comm), p.anti_centered);
  return p;
}

} // namespace

GurReport gur_full(const State& state, const Observable& x, const Observable& y,
                   Complex s, Complex t, double tol) {
  require_same_dim(state, x, y, "gur_full");
  const double wx = checked_real_exp_expectation(state, x, 2 * s.real(), "gur_full");
  const double wy = checked_real_exp_expectation(state, y, 2 * t.real(), "gur_full");
  const Complex wz = expectation(state, CMatrix(exp_scaled(x, s) * exp_scaled(y, t)));
  if (std::abs(wz) < tol::zero_expectation) {
    throw ZeroExpectation("gur_full: <e^{sX}e^{tY}> underflowed");
  }
  const double lhs = std::log(wx) + std::log(wy);
  const double rhs = 2 * std::log(std::abs(wz));
  return finish("gur_full", lhs, rhs, s, t, tol, state);
}

double first_order_identity(const State& state, const Observable& x,
                            const Observable& y, Complex s, Complex t) {
  require_same_dim(state, x, y, "first_order_identity");
  const double lhs = 2 * s.real() * expectation(state, x.matrix()).real() +
                     2 * t.real() * expectation(state, y.matrix()).real();
  const Complex sum = expectation(state, CMatrix(s * x.matrix() + t * y.matrix()));
  const double rhs = (sum + std::conj(sum)).real();
  return std::abs(lhs - rhs);
}

GurReport variance_ur(const State& state, const Observable& x, const Observable& y,
                      Complex s, Complex t, double tol) {
  require_same_dim(state, x, y, "variance_ur");
  warn_if_outside_perturbative(s, t, "variance_ur");
  const double k2x = cumulants_single(state, x).k2;
  const double k2y = cumulants_single(state, y).k2;
  const double k11 = cross_cumulants(state, x, y).k11;
  const Complex comm = expectation(state, commutator(x.matrix(), y.matrix()));
  const double lhs = std::norm(s) * k2x + std::norm(t) * k2y;
  const double rhs = 2 * (s * t * (k11 + comm / 2.0)).real();
  return finish("variance_ur", lhs, rhs, s, t, tol, state);
}

GurReport variance_ur_optimal(const State& state, const Observable& x,
                              const Observable& y, double tol) {
  require_same_dim(state, x, y, "variance_ur_optimal");
  const double dx = std::sqrt(std::max(0.0, cumulants_single(state, x).k2));
  const double dy = std::sqrt(std::max(0.0, cumulants_single(state, y).k2));
  const SchrodingerPieces p = schrodinger_pieces(state, x, y);

  // phase of st maximizing Re[st] a - Im[st] c, normalized per unit |st|
  const double phase = (p.root > 0.0)
                           ? std::atan2(-p.comm_imag, p.anti_centered)
                           : 0.0;
  if (dx <= tol::degenerate_variance || dy <= tol::degenerate_variance) {
    // unweighted s = t fallback: lhs = k2(X) + k2(Y), same optimal phase rhs
    const double lhs = dx * dx + dy * dy;
    GurReport r = finish("variance_ur_optimal", lhs, p.root, Complex(1, 0),
                         std::polar(1.0, phase), tol, state);
    return r;
  }
  const double ws = std::sqrt(dy / dx);
  const double wt = std::sqrt(dx / dy);
  const double lhs = 2 * dx * dy; // ws^2 dx^2 + wt^2 dy^2, normalized by eps^2
  return finish("variance_ur_optimal", lhs, p.root, Complex(ws, 0),
                std::polar(wt, phase), tol, state);
}

double pearson(const State& state, const Observable& x, const Observable& y) {
  require_same_dim(state, x, y, "pearson");
  const double dx = std::sqrt(std::max(0.0, cumulants_single(state, x).k2));
  const double dy = std::sqrt(std::max(0.0, cumulants_single(state, y).k2));
  if (dx <= tol::degenerate_variance || dy <= tol::degenerate_variance) {
    throw DegenerateVariance("pearson: a variance vanishes");
  }
  const Complex exy = expectation(state, CMatrix(x.matrix() * y.matrix()));
  const double ex = expectation(state, x.matrix()).real();
  const double ey = expectation(state, y.matrix()).real();
  return std::abs(exy - ex * ey) / (dx * dy);
}

GurReport skewness_ur(const State& state, const Observable& x, const Observable& y,
                      Complex s, Complex t, double tol) {
  require_same_dim(state, x, y, "skewness_ur");
  warn_if_outside_perturbative(s, t, "skewness_ur");
  const SingleCumulants kx = cumulants_single(state, x);
  const SingleCumulants ky = cumulants_single(state, y);
  const CrossCumulants cc = cross_cumulants(state, x, y);

  const double lhs = std::norm(s) * (kx.k2 + s.real() * kx.k3) +
                     std::norm(t) * (ky.k2 + t.real() * ky.k3);

  const CMatrix& xm = x.matrix();
  const CMatrix& ym = y.matrix();
  const CMatrix comm = commutator(xm, ym);
  const CMatrix z1 = s * xm + t * ym;
  const CMatrix z11 = (s * t / 2.0) * comm;
  const CMatrix z21 = (s * s * t / 12.0) * commutator(xm, comm);
  const CMatrix z12 = (s * t * t / 12.0) * commutator(ym, CMatrix(-comm));

  const Complex inner =
      s * t * cc.k11 + (s * t * t * cc.k12 + s * s * t * cc.k21) / 2.0 +
      expectation(state, CMatrix(z11 + z12 + z21)) +
      (expectation(state, CMatrix(z1 * z11 + z11 * z1)) -
       2.0 * expectation(state, z1) * expectation(state, z11)) / 2.0;
  const double rhs = 2 * inner.real();
  return finish("skewness_ur", lhs, rhs, s, t, tol, state);
}

GurReport variance_skewness_ur(const State& state, const Observable& x,
                               const Observable& y, double eps, double tol) {
  require_same_dim(state, x, y, "variance_skewness_ur");
  const CMatrix& xm = x.matrix();
  const CMatrix& ym = y.matrix();
  const double comm_norm = commutator(xm, ym).norm();
  if (comm_norm > tol::commuting) {
    throw NonCommuting("variance_skewness_ur: ||[X,Y]|| = " +
                       std::to_string(comm_norm));
  }
  const double sigma = std::max(x.sigma_max(), y.sigma_max());
  if (2 * std::abs(eps) * sigma >= M_LN2) {
    warnings::emit(warnings::Code::out_of_convergence_region,
                   "variance_skewness_ur: 2|eps| sigma_max >= log 2");
  }
  const SingleCumulants kx = cumulants_single(state, x);
  const SingleCumulants ky = cumulants_single(state, y);
  const double lhs = kx.k2 + ky.k2 + eps * (kx.k3 + ky.k3);

  const double ex = expectation(state, xm).real();
  const double ey = expectation(state, ym).real();
  const double ex2 = expectation(state, CMatrix(xm * xm)).real();
  const double ey2 = expectation(state, CMatrix(ym * ym)).real();
  const double anti = expectation(state, anticommutator(xm, ym)).real();
  const double bracket_xy = expectation(state, anticommutator3(xm, ym)).real() / 3.0 -
                            (ex * ey2 + anti * ey) + 2 * ex * ey * ey;
  const double bracket_yx = expectation(state, anticommutator3(ym, xm)).real() / 3.0 -
                            (ey * ex2 + anti * ex) + 2 * ey * ex * ex;
  const double rhs = anti - 2 * ex * ey + eps * (bracket_xy + bracket_yx);
  return finish("variance_skewness_ur", lhs, rhs, Complex(eps, 0), Complex(eps, 0),
                tol, state);
}

GurReport classical_ur(const State& state, const Observable& x, const Observable& y,
                       Complex s, Complex t, double tol) {
  require_same_dim(state, x, y, "classical_ur");
  const double wx = checked_real_exp_expectation(state, x, 2 * s.real(),
                                                 "classical_ur");
  const double wy = checked_real_exp_expectation(state, y, 2 * t.real(),
                                                 "classical_ur");
  const Complex wz =
      expectation(state, mat_exp(s * x.matrix() + t * y.matrix()));
  if (std::abs(wz) < tol::zero_expectation) {
    throw ZeroExpectation("classical_ur: <e^{sX+tY}> underflowed");
  }
  return finish("classical_ur", wx * wy, std::norm(wz), s, t, tol, state);
}

GurReport quantum_ur(const State& state, const Observable& x, const Observable& y,
                     Complex s, Complex t, double tol) {
  require_same_dim(state, x, y, "quantum_ur");
  const double wx = checked_real_exp_expectation(state, x, 2 * s.real(),
                                                 "quantum_ur");
  const double wy = checked_real_exp_expectation(state, y, 2 * t.real(),
                                                 "quantum_ur");
  const Complex wz = expectation(state, CMatrix(exp_scaled(x, s) * exp_scaled(y, t)));
  if (std::abs(wz) < tol::zero_expectation) {
    throw ZeroExpectation("quantum_ur: <e^{sX}e^{tY}> underflowed");
  }
  return finish("quantum_ur", wx * wy, std::norm(wz), s, t, tol, state);
}

GurReport exp_ratio_ur(const State& state, const Observable& x, const Observable& y,
                       double s, double t, double tol) {
  require_same_dim(state, x, y, "exp_ratio_ur");
  const Complex ws = exp_expectation(state, x, Complex(s, 0));
  const Complex wt = exp_expectation(state, y, Complex(t, 0));
  if (std::abs(ws) < tol::zero_expectation || std::abs(wt) < tol::zero_expectation) {
    throw ZeroExpectation("exp_ratio_ur: <e^{sX}> or <e^{tY}> underflowed");
  }
  const double w2s = checked_real_exp_expectation(state, x, 2 * s, "exp_ratio_ur");
  const double w2t = checked_real_exp_expectation(state, y, 2 * t, "exp_ratio_ur");
  const Complex wz = expectation(state, CMatrix(exp_scaled(x, Complex(s, 0)) *
                                                exp_scaled(y, Complex(t, 0))));
  const double lhs = (w2s / std::norm(ws)) * (w2t / std::norm(wt));
  const double rhs = std::norm(wz / (ws * wt));
  return finish("exp_ratio_ur", lhs, rhs, Complex(s, 0), Complex(t, 0), tol, state);
}

} // namespace gur

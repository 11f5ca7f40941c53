#include "gurlab/bch.hpp"

namespace gur {

namespace {

void require_same_dim(const Observable& x, const Observable& y, const char* who) {
  if (x.dim() != y.dim()) {
    throw DimensionError(std::string(who) + ": observable dims " +
                         std::to_string(x.dim()) + " vs " + std::to_string(y.dim()));
  }
}

} // namespace

BchTerms bch_terms(const Observable& x, const Observable& y, Complex s, Complex t) {
  require_same_dim(x, y, "bch_terms");
  const CMatrix a = s * x.matrix();
  const CMatrix b = t * y.matrix();
  const auto c = [](const CMatrix& p, const CMatrix& q) { return commutator(p, q); };

  BchTerms z;
  z.s = s;
  z.t = t;
  z.z1 = a + b;
  z.z11 = c(a, b) / 2.0;
  z.z21 = c(a, c(a, b)) / 12.0;
  z.z12 = c(b, c(b, a)) / 12.0;
  z.z22 = -c(b, c(a, c(a, b))) / 24.0;
  // both fifth-order single-chain terms carry -1/720
  z.z14 = -c(c(c(c(a, b), b), b), b) / 720.0;
  z.z41 = -c(c(c(c(b, a), a), a), a) / 720.0;
  z.z23_1 = c(c(c(c(a, b), b), b), a) / 360.0;
  z.z32_1 = c(c(c(c(b, a), a), a), b) / 360.0;
  z.z23_2 = c(c(c(c(b, a), b), a), b) / 120.0;
  z.z32_2 = c(c(c(c(a, b), a), b), a) / 120.0;
  return z;
}

CMatrix bch_partial_sum(const BchTerms& terms, int max_order) {
  if (max_order < 1 || max_order > 5) {
    throw std::invalid_argument("bch_partial_sum: max_order must be in [1, 5]");
  }
  CMatrix sum = terms.z1;
  if (max_order >= 2) sum += terms.z11;
  if (max_order >= 3) sum += terms.z21 + terms.z12;
  if (max_order >= 4) sum += terms.z22;
  if (max_order >= 5) {
    sum += terms.z14 + terms.z41 + terms.z23_1 + terms.z32_1 + terms.z23_2 +
           terms.z32_2;
  }
  return sum;
}

CMatrix z_exact(const Observable& x, const Observable& y, Complex s, Complex t) {
  require_same_dim(x, y, "z_exact");
  return mat_log_principal(exp_scaled(x, s) * exp_scaled(y, t));
}

Complex k2_coefficient(const State& state, const Observable& x,
                       const Observable& y, Complex s, Complex t,
                       double z11_coeff) {
  require_same_dim(x, y, "k2_coefficient");
  const Complex comm_exp = expectation(state, commutator(x.matrix(), y.matrix()));
  const double k2x = cumulants_single(state, x).k2;
  const double k2y = cumulants_single(state, y).k2;
  const double k11 = cross_cumulants(state, x, y).k11;
  return z11_coeff * s * t * comm_exp +
         (s * s * k2x + t * t * k2y + 2.0 * s * t * k11) / 2.0;
}

Complex k3_coefficient(const State& state, const Observable& x,
                       const Observable& y, Complex s, Complex t,
                       double z11_coeff) {
  require_same_dim(x, y, "k3_coefficient");
  const CMatrix& xm = x.matrix();
  const CMatrix& ym = y.matrix();
  const CMatrix comm = commutator(xm, ym);

  const Complex nested =
      (s * s * t * expectation(state, commutator(xm, comm)) +
       s * t * t * expectation(state, commutator(ym, CMatrix(-comm)))) / 12.0;

  const CMatrix z1 = s * xm + t * ym;
  const CMatrix craw = s * t * comm;
  const Complex sym = expectation(state, CMatrix(z1 * craw + craw * z1)) -
                      2.0 * expectation(state, z1) * expectation(state, craw);

  const SingleCumulants kx = cumulants_single(state, x);
  const SingleCumulants ky = cumulants_single(state, y);
  const CrossCumulants cc = cross_cumulants(state, x, y);
  const Complex k3_sum = s * s * s * kx.k3 + 3.0 * s * s * t * cc.k21 +
                         3.0 * s * t * t * cc.k12 + t * t * t * ky.k3;

  return nested + z11_coeff * sym / 2.0 + k3_sum / 6.0;
}

} // namespace gur

#include "gurlab/cumulant.hpp"

#include <cmath>

#include "gurlab/warnings.hpp"

namespace gur {

namespace {

void require_same_dim(const Observable& x, const Observable& y, const char* who) {
  if (x.dim() != y.dim()) {
    throw DimensionError(std::string(who) + ": observable dims " +
                         std::to_string(x.dim()) + " vs " + std::to_string(y.dim()));
  }
}

// Moments of the measurement distribution, m[n] = <X^n>.
std::array<double, 5> moments_to_4(const State& state, const Observable& x) {
  const RVector p = measurement_probabilities(state, x);
  std::array<double, 5> m{1, 0, 0, 0, 0};
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    double pw = p[i];
    for (int n = 1; n <= 4; ++n) {
      pw *= x.eigenvalues()[i];
      m[n] += pw;
    }
  }
  return m;
}

SingleCumulants cumulants_from_moments(const std::array<double, 5>& m) {
  SingleCumulants k;
  k.k1 = m[1];
  k.k2 = m[2] - m[1] * m[1];
  k.k3 = m[3] - 3 * m[2] * m[1] + 2 * std::pow(m[1], 3);
  k.k4 = m[4] - 4 * m[3] * m[1] - 3 * m[2] * m[2] + 12 * m[2] * m[1] * m[1] -
         6 * std::pow(m[1], 4);
  return k;
}

} // namespace

CMatrix anticommutator3(const CMatrix& x, const CMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw DimensionError("anticommutator3: dimension mismatch");
  }
  return x * y * y + y * x * y + y * y * x;
}

double moment(const State& state, const Observable& x, int n) {
  if (n < 0 || n > 8) {
    throw std::invalid_argument("moment: order must be in [0, 8]");
  }
  const RVector p = measurement_probabilities(state, x);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    acc += p[i] * std::pow(x.eigenvalues()[i], n);
  }
  return acc;
}

SingleCumulants cumulants_single(const State& state, const Observable& x) {
  return cumulants_from_moments(moments_to_4(state, x));
}

CrossCumulants cross_cumulants(const State& state, const Observable& x,
                               const Observable& y) {
  require_same_dim(x, y, "cross_cumulants");
  const CMatrix& xm = x.matrix();
  const CMatrix& ym = y.matrix();
  const double ex = expectation(state, xm).real();
  const double ey = expectation(state, ym).real();
  const double ex2 = expectation(state, CMatrix(xm * xm)).real();
  const double ey2 = expectation(state, CMatrix(ym * ym)).real();
  const double anti = expectation(state, anticommutator(xm, ym)).real();

  CrossCumulants c;
  c.k11 = 0.5 * anti - ex * ey;
  c.k12 = expectation(state, anticommutator3(xm, ym)).real() / 3.0 -
          (ex * ey2 + anti * ey) + 2.0 * ex * ey * ey;
  c.k21 = expectation(state, anticommutator3(ym, xm)).real() / 3.0 -
          (ey * ex2 + anti * ex) + 2.0 * ey * ex * ex;
  return c;
}

CumulantTable make_cumulant_table(const State& state, const Observable& x,
                                  const Observable& y, std::string state_id,
                                  std::string x_id, std::string y_id) {
  CumulantTable t;
  t.state_id = std::move(state_id);
  t.observable_ids = {std::move(x_id), std::move(y_id)};
  t.x = cumulants_single(state, x);
  t.y = cumulants_single(state, y);
  t.cross = cross_cumulants(state, x, y);
  return t;
}

Complex cgf(const State& state, const Observable& x, Complex s) {
  if (std::abs(s.real()) * x.sigma_max() >= M_LN2) {
    warnings::emit(warnings::Code::out_of_convergence_region,
                   "cgf: |Re s| * sigma_max = " +
                       std::to_string(std::abs(s.real()) * x.sigma_max()) +
                       " exceeds log 2; series truncations are unreliable here");
  }
  const Complex w = exp_expectation(state, x, s);
  if (std::abs(w) < tol::zero_expectation) {
    throw ZeroExpectation("cgf: |<e^{sX}>| underflowed");
  }
  return std::log(w);
}

Complex cgf_series(const State& state, const Observable& x, Complex s, int order) {
  if (order < 1 || order > 4) {
    throw std::invalid_argument("cgf_series: order must be in [1, 4]");
  }
  const SingleCumulants k = cumulants_single(state, x);
  const double kv[4] = {k.k1, k.k2, k.k3, k.k4};
  const double fact[4] = {1, 2, 6, 24};
  Complex acc = 0.0;
  Complex sp = 1.0;
  for (int m = 1; m <= order; ++m) {
    sp *= s;
    acc += sp * kv[m - 1] / fact[m - 1];
  }
  return acc;
}

ConvergenceRadius convergence_radius(const Observable& x) {
  if (x.sigma_max() < tol::zero_observable) {
    throw ZeroObservable("convergence_radius: sigma_max below cutoff");
  }
  return {M_LN2 / x.sigma_max()};
}

double linearization_defect(const State& state, const Observable& x,
                            const Observable& y, double s, double t, int n) {
  require_same_dim(x, y, "linearization_defect");
  if (n < 1 || n > 4) {
    throw std::invalid_argument("linearization_defect: n must be in [1, 4]");
  }
  const double comm_norm = commutator(x.matrix(), y.matrix()).norm();
  if (comm_norm > tol::commuting) {
    throw NonCommuting("linearization_defect: ||[X,Y]|| = " +
                       std::to_string(comm_norm) +
                       "; a joint distribution needs commuting observables");
  }
  const Observable z = Observable::from_matrix(s * x.matrix() + t * y.matrix());
  const SingleCumulants kz = cumulants_single(state, z);
  const SingleCumulants kx = cumulants_single(state, x);
  const SingleCumulants ky = cumulants_single(state, y);
  const double zv[4] = {kz.k1, kz.k2, kz.k3, kz.k4};
  const double xv[4] = {kx.k1, kx.k2, kx.k3, kx.k4};
  const double yv[4] = {ky.k1, ky.k2, ky.k3, ky.k4};
  return zv[n - 1] - (std::pow(s, n) * xv[n - 1] + std::pow(t, n) * yv[n - 1]);
}

} // namespace gur

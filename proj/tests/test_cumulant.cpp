#include <doctest.h>

#include "gurlab/cumulant.hpp"
#include "gurlab/random.hpp"
#include "gurlab/scenarios.hpp"
#include "gurlab/warnings.hpp"

using namespace gur;

namespace {

State z_up() {
  CVector v(2);
  v << 1, 0;
  return State::pure(v);
}

Observable obs(const CMatrix& m) { return Observable::from_matrix(m); }

} // namespace

TEST_SUITE("cumulant") {

TEST_CASE("moments") {
  CHECK(moment(z_up(), sigma_z(), 3) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(moment(z_up(), sigma_x(), 2) == doctest::Approx(1.0).epsilon(1e-12));

  const AngularMomenta am = angular_momenta_l1();
  CHECK(moment(psi2(), am.lx, 1) ==
        doctest::Approx(0.9428090415820635).epsilon(1e-12)); // 2 sqrt(2) / 3

  CHECK_THROWS_AS(moment(z_up(), am.lx, 1), DimensionError);
  CHECK_THROWS_AS(moment(z_up(), sigma_x(), 9), std::invalid_argument);
}

TEST_CASE("single cumulants") {
  const auto deterministic = cumulants_single(z_up(), sigma_z());
  CHECK(deterministic.k1 == doctest::Approx(1.0));
  CHECK(std::abs(deterministic.k2) < 1e-14);
  CHECK(std::abs(deterministic.k3) < 1e-14);
  CHECK(std::abs(deterministic.k4) < 1e-14);

  // symmetric two-point distribution: (0, 1, 0, -2)
  const auto sym = cumulants_single(z_up(), sigma_x());
  CHECK(std::abs(sym.k1) < 1e-14);
  CHECK(sym.k2 == doctest::Approx(1.0));
  CHECK(std::abs(sym.k3) < 1e-14);
  CHECK(sym.k4 == doctest::Approx(-2.0));

  // constant variable
  const auto constant =
      cumulants_single(psi1(1.3, 0.4), obs(CMatrix::Identity(2, 2)));
  CHECK(constant.k1 == doctest::Approx(1.0));
  CHECK(std::abs(constant.k2) < 1e-14);
  CHECK(std::abs(constant.k3) < 1e-14);
  CHECK(std::abs(constant.k4) < 1e-14);
}

TEST_CASE("cumulant shift covariance and homogeneity") {
  Rng rng(21);
  for (int rep = 0; rep < 25; ++rep) {
    const int dim = rng.uniform_int(2, 4);
    const State st = State::pure(rng.haar_state(dim));
    const Observable x = rng.random_observable(dim);
    const double c = rng.uniform(-2.0, 2.0);
    const Observable shifted =
        obs(x.matrix() + c * CMatrix::Identity(dim, dim));
    const auto kx = cumulants_single(st, x);
    const auto ks = cumulants_single(st, shifted);
    CHECK(ks.k1 == doctest::Approx(kx.k1 + c).epsilon(1e-10));
    CHECK(std::abs(ks.k2 - kx.k2) < 1e-10);
    CHECK(std::abs(ks.k3 - kx.k3) < 1e-10);
    CHECK(std::abs(ks.k4 - kx.k4) < 1e-9);

    const double s = rng.uniform(-1.5, 1.5);
    const auto kh = cumulants_single(st, obs(s * x.matrix()));
    const double scale = std::max(1.0, std::abs(kx.k4));
    CHECK(std::abs(kh.k1 - s * kx.k1) < 1e-10 * scale);
    CHECK(std::abs(kh.k2 - s * s * kx.k2) < 1e-10 * scale);
    CHECK(std::abs(kh.k3 - s * s * s * kx.k3) < 1e-10 * scale);
    CHECK(std::abs(kh.k4 - s * s * s * s * kx.k4) < 1e-10 * scale);
  }
}

TEST_CASE("cross cumulants") {
  // Pauli pair: {sx, sy} = 0, so k11 = -<sx><sy>
  Rng rng(22);
  for (int rep = 0; rep < 10; ++rep) {
    const State st = State::pure(rng.haar_state(2));
    const double ex = expectation(st, sigma_x().matrix()).real();
    const double ey = expectation(st, sigma_y().matrix()).real();
    CHECK(cross_cumulants(st, sigma_x(), sigma_y()).k11 ==
          doctest::Approx(-ex * ey).epsilon(1e-10));
  }

  // independent subsystems factorize
  const CVector u = rng.haar_state(2);
  const CVector v = rng.haar_state(2);
  const State product = State::pure(tensor(u, v).col(0));
  const CMatrix id = CMatrix::Identity(2, 2);
  const Observable xa = obs(tensor(sigma_x().matrix(), id));
  const Observable yb = obs(tensor(id, sigma_y().matrix()));
  const auto cc = cross_cumulants(product, xa, yb);
  CHECK(std::abs(cc.k11) < 1e-10);
  CHECK(std::abs(cc.k12) < 1e-10);
  CHECK(std::abs(cc.k21) < 1e-10);

  // k11(X, X) reduces to the variance
  const State st = psi1(0.9, 0.3);
  CHECK(cross_cumulants(st, sigma_x(), sigma_x()).k11 ==
        doctest::Approx(cumulants_single(st, sigma_x()).k2));
  CHECK(cross_cumulants(z_up(), sigma_x(), sigma_x()).k11 == doctest::Approx(1.0));
}

TEST_CASE("variance is nonnegative on random instances") {
  Rng rng(26);
  for (int rep = 0; rep < 200; ++rep) {
    const int dim = rng.uniform_int(2, 4);
    const State st = rep % 2 == 0
                         ? State::pure(rng.haar_state(dim))
                         : State::density(CMatrix(CMatrix::Identity(dim, dim) /
                                                  static_cast<double>(dim)));
    CHECK(cumulants_single(st, rng.random_observable(dim)).k2 >= -1e-10);
  }
}

TEST_CASE("k11 is symmetric under swap") {
  Rng rng(23);
  for (int rep = 0; rep < 10; ++rep) {
    const int dim = rng.uniform_int(2, 4);
    const State st = State::pure(rng.haar_state(dim));
    const Observable x = rng.random_observable(dim);
    const Observable y = rng.random_observable(dim);
    CHECK(cross_cumulants(st, x, y).k11 ==
          doctest::Approx(cross_cumulants(st, y, x).k11).epsilon(1e-12));
  }
}

TEST_CASE("anticommutator3 matches its definition") {
  Rng rng(24);
  const CMatrix x = rng.gaussian_hermitian(3);
  const CMatrix y = rng.gaussian_hermitian(3);
  const CMatrix direct = x * y * y + y * x * y + y * y * x;
  CHECK(max_abs(anticommutator3(x, y) - direct) == 0.0);
}

TEST_CASE("cgf values") {
  CHECK(cgf(z_up(), sigma_z(), 0.3).real() == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(std::abs(cgf(z_up(), sigma_z(), 0.3).imag()) < 1e-14);
  warnings::take();

  // <e^{s sx}> = cosh(s) on a sigma_z eigenstate
  CHECK(cgf(z_up(), sigma_x(), 0.2).real() ==
        doctest::Approx(0.01986807184000736).epsilon(1e-12));

  CHECK(std::abs(cgf(psi1(0.8, 0.2), sigma_y(), 0.0)) < 1e-15);
}

TEST_CASE("cgf convergence warning and underflow") {
  warnings::take();
  cgf(z_up(), sigma_x(), 0.5); // 0.5 < log 2: quiet
  CHECK(warnings::take().empty());
  cgf(z_up(), sigma_x(), 1.0); // 1.0 > log 2: warn, still computed
  const auto warned = warnings::take();
  REQUIRE(warned.size() == 1);
  CHECK(warned[0].code == warnings::Code::out_of_convergence_region);

  CHECK_THROWS_AS(cgf(z_up(), obs(CMatrix::Identity(2, 2)), -800.0),
                  ZeroExpectation);
  warnings::take();
}

TEST_CASE("cgf_series") {
  CHECK(std::abs(cgf_series(z_up(), sigma_x(), 0.1, 1)) < 1e-14);
  CHECK(cgf_series(z_up(), sigma_x(), 0.1, 2).real() ==
        doctest::Approx(0.005).epsilon(1e-12));
  CHECK(cgf_series(z_up(), sigma_x(), 0.1, 4).real() ==
        doctest::Approx(0.004991666666666667).epsilon(1e-12));
  CHECK_THROWS_AS(cgf_series(z_up(), sigma_x(), 0.1, 5), std::invalid_argument);
}

TEST_CASE("cgf_series order-4 residual scales like s^5") {
  // needs a distribution with nonzero fifth cumulant
  const State st = psi1(1.0, 0.5);
  const auto residual = [&](double s) {
    return std::abs(cgf(st, sigma_z(), s) - cgf_series(st, sigma_z(), s, 4));
  };
  const double ratio = residual(0.2) / residual(0.1);
  CHECK(ratio > 20.0);
  CHECK(ratio < 45.0);
  warnings::take();
}

TEST_CASE("convergence radius") {
  CHECK(convergence_radius(sigma_x()).radius ==
        doctest::Approx(M_LN2).epsilon(1e-14));
  const AngularMomenta am = angular_momenta_l1();
  CHECK(convergence_radius(am.lx).radius == doctest::Approx(M_LN2).epsilon(1e-12));
  CHECK(convergence_radius(obs(2.0 * sigma_z().matrix())).radius ==
        doctest::Approx(M_LN2 / 2).epsilon(1e-14));
  CHECK_THROWS_AS(convergence_radius(obs(CMatrix::Zero(2, 2))), ZeroObservable);
}

TEST_CASE("linearization defect") {
  const CMatrix id = CMatrix::Identity(2, 2);
  const Observable za = obs(tensor(sigma_z().matrix(), id));
  const Observable zb = obs(tensor(id, sigma_z().matrix()));

  Rng rng(25);
  const State product =
      State::pure(tensor(rng.haar_state(2), rng.haar_state(2)).col(0));
  CHECK(std::abs(linearization_defect(product, za, zb, 1.0, 1.0, 2)) < 1e-10);

  // singlet: kappa2(X + Y) = 0 while each variance is 1
  CHECK(linearization_defect(psi3(), za, zb, 1.0, 1.0, 2) ==
        doctest::Approx(-2.0).epsilon(1e-10));

  const Observable zero4 = obs(CMatrix::Zero(4, 4));
  CHECK(std::abs(linearization_defect(psi3(), za, zero4, 0.7, 0.3, 3)) < 1e-12);

  CHECK_THROWS_AS(
      linearization_defect(psi1(0.2, 0.1), sigma_x(), sigma_y(), 1.0, 1.0, 2),
      NonCommuting);
}

TEST_CASE("cumulant table carries both marginals and the cross block") {
  const State st = psi1(1.1, 0.7);
  const CumulantTable t = make_cumulant_table(st, sigma_x(), sigma_y(), "psi1");
  CHECK(t.x.k2 == doctest::Approx(cumulants_single(st, sigma_x()).k2));
  CHECK(t.y.k2 == doctest::Approx(cumulants_single(st, sigma_y()).k2));
  CHECK(t.cross.k11 ==
        doctest::Approx(cross_cumulants(st, sigma_x(), sigma_y()).k11));
  CHECK(t.observable_ids[0] == "X");
  CHECK(t.state_id == "psi1");
}

} // TEST_SUITE

#include <doctest.h>

#include "gurlab/qmat.hpp"
#include "gurlab/random.hpp"
#include "gurlab/scenarios.hpp"

using namespace gur;

namespace {

CMatrix identity(int n) { return CMatrix::Identity(n, n); }

} // namespace

TEST_SUITE("qmat") {

TEST_CASE("observable validation and spectral cache") {
  const Observable x = sigma_x();
  CHECK(x.dim() == 2);
  CHECK(x.sigma_max() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(x.eigenvalues().minCoeff() == doctest::Approx(-1.0));
  CHECK(x.eigenvalues().maxCoeff() == doctest::Approx(1.0));

  CMatrix bad(2, 2);
  bad << 0, 1, 2, 0;
  CHECK_THROWS_AS(Observable::from_matrix(bad), ValidationError);

  CMatrix nan_mat = CMatrix::Zero(2, 2);
  nan_mat(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(Observable::from_matrix(nan_mat), ValidationError);

  // zero matrix is Hermitian
  CHECK(Observable::from_matrix(CMatrix::Zero(3, 3)).sigma_max() == 0.0);
}

TEST_CASE("state validation") {
  CVector v(2);
  v << 1, 1;
  CHECK_THROWS_AS(State::pure(v), ValidationError); // unnormalized

  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const State plus_x = State::pure(v);
  CHECK(plus_x.dim() == 2);

  CMatrix rho = 0.5 * identity(2);
  const State mixed = State::density(rho);
  CHECK(mixed.is_density());

  CHECK_THROWS_AS(State::density(CMatrix(2.0 * identity(2))), ValidationError);
  CMatrix neg(2, 2);
  neg << 1.5, 0, 0, -0.5; // trace 1 but not PSD
  CHECK_THROWS_AS(State::density(neg), ValidationError);
}

TEST_CASE("expectation on eigenstates, psi1, and the mixed state") {
  CVector up(2);
  up << 1, 0;
  const State plus = State::pure(up);
  CHECK(expectation(plus, sigma_z().matrix()).real() == doctest::Approx(1.0));
  CHECK(std::abs(expectation(plus, sigma_z().matrix()).imag()) < 1e-12);

  // <sigma_x> = sin(theta) cos(phi) on the psi1 family
  const State s1 = psi1(M_PI / 2, M_PI);
  CHECK(expectation(s1, sigma_x().matrix()).real() == doctest::Approx(-1.0));

  const State mixed = State::density(0.5 * identity(2));
  CHECK(std::abs(expectation(mixed, sigma_x().matrix())) < 1e-14);

  CHECK_THROWS_AS(expectation(plus, CMatrix(identity(3))), DimensionError);
}

TEST_CASE("expectation is linear") {
  Rng rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    const int dim = rng.uniform_int(2, 4);
    const State st = State::pure(rng.haar_state(dim));
    const CMatrix a = rng.gaussian_hermitian(dim);
    const CMatrix b = rng.gaussian_hermitian(dim);
    const Complex alpha = rng.in_disk(2.0);
    const Complex beta = rng.in_disk(2.0);
    const Complex lhs = expectation(st, CMatrix(alpha * a + beta * b));
    const Complex rhs = alpha * expectation(st, a) + beta * expectation(st, b);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("mat_exp basics") {
  CHECK(max_abs(mat_exp(CMatrix::Zero(3, 3)) - identity(3)) == 0.0); // exact

  // exp(i pi n.sigma) = -1 for a unit direction
  const CMatrix rot = mat_exp(Complex(0, M_PI) * sigma_x().matrix());
  CHECK(max_abs(rot + identity(2)) < 1e-10);

  const CMatrix diag = mat_exp(sigma_z().matrix());
  CHECK(std::abs(diag(0, 0) - std::exp(1.0)) < 1e-12);
  CHECK(std::abs(diag(1, 1) - std::exp(-1.0)) < 1e-12);
  CHECK(std::abs(diag(0, 1)) < 1e-14);
}

TEST_CASE("mat_exp of anti-Hermitian arguments is unitary") {
  Rng rng(5);
  for (int rep = 0; rep < 30; ++rep) {
    const int dim = rng.uniform_int(2, 4);
    const CMatrix h = rng.gaussian_hermitian(dim);
    const CMatrix u = mat_exp(Complex(0, 1) * h);
    CHECK(max_abs(u * u.adjoint() - identity(dim)) < 1e-10);
  }
}

TEST_CASE("mat_exp inverse pairing up to norm 5") {
  Rng rng(6);
  for (int rep = 0; rep < 20; ++rep) {
    const int dim = rng.uniform_int(2, 4);
    CMatrix m = rng.gaussian_hermitian(dim) +
                Complex(0, 1) * rng.gaussian_hermitian(dim);
    const double norm = m.norm();
    if (norm > 5.0) m *= 5.0 / norm;
    CHECK(max_abs(mat_exp(m) * mat_exp(CMatrix(-m)) - identity(dim)) < 1e-10);
  }
}

TEST_CASE("mat_log_principal basics") {
  CHECK(max_abs(mat_log_principal(identity(3))) < 1e-12);

  const CMatrix m = mat_exp(0.3 * sigma_x().matrix());
  CHECK(max_abs(mat_log_principal(m) - 0.3 * sigma_x().matrix()) < 1e-10);
}

TEST_CASE("mat_log_principal of a small exponential product") {
  // log(e^{0.1 sx} e^{0.1 sy}) = 0.1 sx + 0.1 sy + 0.01 i sz + O(1e-3)
  const CMatrix prod =
      mat_exp(0.1 * sigma_x().matrix()) * mat_exp(0.1 * sigma_y().matrix());
  const CMatrix log = mat_log_principal(prod);
  const CMatrix second = 0.1 * sigma_x().matrix() + 0.1 * sigma_y().matrix() +
                         Complex(0, 0.01) * sigma_z().matrix();
  CHECK(max_abs(log - second) < 1e-3);   // third-order terms remain
  CHECK(max_abs(log - second) > 1e-4);   // and they are genuinely there
}

TEST_CASE("mat_log_principal round trip inside the unit ball") {
  Rng rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    const int dim = rng.uniform_int(2, 4);
    CMatrix m = rng.gaussian_hermitian(dim) +
                Complex(0, 1) * rng.gaussian_hermitian(dim);
    m *= 0.9 / std::max(1.0, m.norm());
    CHECK(max_abs(mat_log_principal(mat_exp(m)) - m) < 1e-8);
  }
}

TEST_CASE("mat_log_principal error paths") {
  // eigenvalue on the negative real axis
  CHECK_THROWS_AS(mat_log_principal(CMatrix(-identity(2))), EigenvalueOnBranchCut);
  // singular input
  CMatrix singular = CMatrix::Zero(2, 2);
  singular(0, 0) = 1.0;
  CHECK_THROWS_AS(mat_log_principal(singular), EigenvalueOnBranchCut);
  // defective (Jordan block)
  CMatrix jordan(2, 2);
  jordan << 1, 1, 0, 1;
  CHECK_THROWS_AS(mat_log_principal(jordan), NotDiagonalizable);
}

TEST_CASE("tensor products") {
  CHECK(max_abs(tensor(identity(2), identity(2)) - identity(4)) == 0.0);

  const CMatrix zz = tensor(sigma_z().matrix(), sigma_z().matrix());
  CMatrix zz_expect = CMatrix::Zero(4, 4);
  zz_expect.diagonal() << 1, -1, -1, 1;
  CHECK(max_abs(zz - zz_expect) == 0.0);

  // element formula on sx (x) sy
  const CMatrix xy = tensor(sigma_x().matrix(), sigma_y().matrix());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          CHECK(xy(i * 2 + k, j * 2 + l) ==
                sigma_x().matrix()(i, j) * sigma_y().matrix()(k, l));
}

TEST_CASE("tensor is associative") {
  // exact on matrices whose entry products are exact
  const CMatrix& x = sigma_x().matrix();
  const CMatrix& y = sigma_y().matrix();
  const CMatrix& z = sigma_z().matrix();
  CHECK(max_abs(tensor(tensor(x, y), z) - tensor(x, tensor(y, z))) == 0.0);

  Rng rng(8);
  const CMatrix a = rng.gaussian_hermitian(2);
  const CMatrix b = rng.gaussian_hermitian(2);
  const CMatrix c = rng.gaussian_hermitian(3);
  CHECK(max_abs(tensor(tensor(a, b), c) - tensor(a, tensor(b, c))) < 1e-15);
}

TEST_CASE("exp_scaled matches mat_exp for complex multiples") {
  Rng rng(9);
  for (int rep = 0; rep < 10; ++rep) {
    const Observable x = rng.random_observable(3);
    const Complex s = rng.in_disk(1.5);
    CHECK(max_abs(exp_scaled(x, s) - mat_exp(CMatrix(s * x.matrix()))) < 1e-11);
  }
}

} // TEST_SUITE

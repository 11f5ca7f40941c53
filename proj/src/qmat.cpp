#include "gurlab/qmat.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace gur {

namespace {

void require_square(const CMatrix& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw DimensionError(std::string(who) + ": matrix must be square, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void require_finite(const CMatrix& m, const char* who) {
  if (!is_finite(m)) {
    throw ValidationError(std::string(who) + ": matrix has non-finite entries");
  }
}

void require_same_dim(const CMatrix& a, const CMatrix& b, const char* who) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(who) + ": dimension mismatch " +
                         std::to_string(a.rows()) + " vs " + std::to_string(b.rows()));
  }
}

} // namespace

double max_abs(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool is_finite(const CMatrix& m) {
  return m.allFinite();
}

bool is_hermitian(const CMatrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  const double dev = max_abs(m - m.adjoint());
  return dev <= rel_tol * max_abs(m);
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "commutator");
  return a * b - b * a;
}

CMatrix anticommutator(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "anticommutator");
  return a * b + b * a;
}

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
  const auto ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  CMatrix out(ra * rb, ca * cb);
  for (Eigen::Index i = 0; i < ra; ++i)
    for (Eigen::Index j = 0; j < ca; ++j)
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
  return out;
}

Observable Observable::from_matrix(CMatrix m) {
  require_square(m, "Observable");
  require_finite(m, "Observable");
  const double dev = max_abs(m - m.adjoint());
  if (dev > tol::hermiticity * max_abs(m)) {
    throw ValidationError("Observable: matrix is not Hermitian (deviation " +
                          std::to_string(dev) + ")");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
  if (es.info() != Eigen::Success) {
    throw ValidationError("Observable: eigendecomposition failed");
  }
  Observable obs;
  obs.matrix_ = std::move(m);
  obs.eigenvalues_ = es.eigenvalues();
  obs.eigenvectors_ = es.eigenvectors();
  obs.sigma_max_ = obs.eigenvalues_.cwiseAbs().maxCoeff();
  return obs;
}

State::State() : kind_(Kind::pure), vector_(CVector::Ones(1)) {}

State State::pure(CVector v) {
  if (v.size() < 1) throw ValidationError("State: empty vector");
  if (!v.allFinite()) throw ValidationError("State: non-finite amplitudes");
  const double n = v.norm();
  if (std::abs(n - 1.0) > tol::state_norm) {
    throw ValidationError("State: vector norm " + std::to_string(n) +
                          " deviates from 1 beyond tolerance");
  }
  State s;
  s.kind_ = Kind::pure;
  s.vector_ = std::move(v);
  return s;
}

State State::density(CMatrix rho) {
  require_square(rho, "State");
  require_finite(rho, "State");
  if (!is_hermitian(rho)) {
    throw ValidationError("State: density matrix is not Hermitian");
  }
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > tol::density_trace) {
    throw ValidationError("State: density trace " + std::to_string(tr) +
                          " deviates from 1 beyond tolerance");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho);
  if (es.info() != Eigen::Success) {
    throw ValidationError("State: eigendecomposition failed");
  }
  if (es.eigenvalues().minCoeff() < -tol::density_psd) {
    throw ValidationError("State: density matrix has eigenvalue " +
                          std::to_string(es.eigenvalues().minCoeff()) +
                          " below the PSD tolerance");
  }
  State s;
  s.kind_ = Kind::density;
  s.rho_ = std::move(rho);
  return s;
}

int State::dim() const {
  return kind_ == Kind::pure ? static_cast<int>(vector_.size())
                             : static_cast<int>(rho_.rows());
}

const CVector& State::vector() const {
  if (kind_ != Kind::pure) throw Error("State::vector: not a pure state");
  return vector_;
}

const CMatrix& State::rho() const {
  if (kind_ != Kind::density) throw Error("State::rho: not a density state");
  return rho_;
}

Complex expectation(const State& state, const CMatrix& m) {
  require_square(m, "expectation");
  if (state.dim() != m.rows()) {
    throw DimensionError("expectation: state dim " + std::to_string(state.dim()) +
                         " vs matrix dim " + std::to_string(m.rows()));
  }
  if (state.is_pure()) {
    return (state.vector().adjoint() * m * state.vector())(0, 0);
  }
  return (state.rho() * m).trace();
}

RVector measurement_probabilities(const State& state, const Observable& x) {
  if (state.dim() != x.dim()) {
    throw DimensionError("measurement_probabilities: state dim " +
                         std::to_string(state.dim()) + " vs observable dim " +
                         std::to_string(x.dim()));
  }
  const CMatrix& v = x.eigenvectors();
  if (state.is_pure()) {
    return (v.adjoint() * state.vector()).cwiseAbs2();
  }
  return (v.adjoint() * state.rho() * v).diagonal().real();
}

Complex exp_expectation(const State& state, const Observable& x, Complex s) {
  const RVector p = measurement_probabilities(state, x);
  Complex acc = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    acc += p[i] * std::exp(s * x.eigenvalues()[i]);
  }
  return acc;
}

CMatrix exp_scaled(const Observable& x, Complex s) {
  CVector d(x.dim());
  for (int i = 0; i < x.dim(); ++i) d[i] = std::exp(s * x.eigenvalues()[i]);
  return x.eigenvectors() * d.asDiagonal() * x.eigenvectors().adjoint();
}

CMatrix mat_exp(const CMatrix& m) {
  require_square(m, "mat_exp");
  require_finite(m, "mat_exp");
  const Eigen::Index n = m.rows();
  if (max_abs(m) == 0.0) return CMatrix::Identity(n, n);

  if (is_hermitian(m)) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
    return es.eigenvectors() *
           es.eigenvalues().array().exp().matrix().cast<Complex>().asDiagonal() *
           es.eigenvectors().adjoint();
  }

  // scaling and squaring: bring the scaled norm under 1/2, then Taylor
  const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const CMatrix a = m / std::pow(2.0, squarings);

  CMatrix sum = CMatrix::Identity(n, n);
  CMatrix term = CMatrix::Identity(n, n);
  for (int k = 1; k <= 64; ++k) {
    term = (term * a) / static_cast<double>(k);
    sum += term;
    if (max_abs(term) <= tol::exp_series * max_abs(sum)) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

CMatrix mat_log_principal(const CMatrix& m) {
  require_square(m, "mat_log_principal");
  require_finite(m, "mat_log_principal");
  const Eigen::Index n = m.rows();

  Eigen::ComplexEigenSolver<CMatrix> es(m);
  if (es.info() != Eigen::Success) {
    throw NotDiagonalizable("mat_log_principal: eigendecomposition failed");
  }
  const CVector& lambda = es.eigenvalues();
  const CMatrix& v = es.eigenvectors();

  for (Eigen::Index i = 0; i < n; ++i) {
    const double mod = std::abs(lambda[i]);
    if (mod < tol::branch_cut_abs) {
      throw EigenvalueOnBranchCut("mat_log_principal: eigenvalue magnitude " +
                                  std::to_string(mod) + " too close to zero");
    }
    if (std::abs(M_PI - std::abs(std::arg(lambda[i]))) < tol::branch_cut_arg) {
      throw EigenvalueOnBranchCut(
          "mat_log_principal: eigenvalue on the negative real axis");
    }
  }

  Eigen::JacobiSVD<CMatrix> svd(v);
  const double smin = svd.singularValues().minCoeff();
  const double smax = svd.singularValues().maxCoeff();
  if (smin <= 0.0 || smax / smin > tol::diagonalizable_cond) {
    throw NotDiagonalizable("mat_log_principal: eigenvector condition number " +
                            std::to_string(smin > 0 ? smax / smin : INFINITY) +
                            " exceeds cap");
  }
  const double resid = (m * v - v * lambda.asDiagonal().toDenseMatrix()).norm();
  if (resid > tol::eig_residual * std::max(1.0, m.norm())) {
    throw NotDiagonalizable("mat_log_principal: eigendecomposition residual " +
                            std::to_string(resid));
  }

  CVector logd(n);
  for (Eigen::Index i = 0; i < n; ++i) logd[i] = std::log(lambda[i]);
  CMatrix out = v * logd.asDiagonal() * v.inverse();

  const double back = (mat_exp(out) - m).norm();
  if (back > tol::log_residual * std::max(1.0, m.norm())) {
    throw NotDiagonalizable("mat_log_principal: exp(log(M)) residual " +
                            std::to_string(back) + " exceeds tolerance");
  }
  return out;
}

} // namespace gur

#pragma once

#include <string>

#include "gurlab/errors.hpp"
#include "gurlab/types.hpp"

namespace gur {

double max_abs(const CMatrix& m);
bool is_finite(const CMatrix& m);
bool is_hermitian(const CMatrix& m, double rel_tol = tol::hermiticity);

CMatrix commutator(const CMatrix& a, const CMatrix& b);
CMatrix anticommutator(const CMatrix& a, const CMatrix& b);

/// Kronecker product, dim = a.dim * b.dim.
CMatrix tensor(const CMatrix& a, const CMatrix& b);

/// Hermitian matrix with cached spectral data.
class Observable {
 public:
  /// Validates hermiticity (max |m_ij - conj(m_ji)| <= rel_tol * max-abs
  /// entry) and diagonalizes. Throws ValidationError otherwise.
  static Observable from_matrix(CMatrix m);

  const CMatrix& matrix() const { return matrix_; }
  const RVector& eigenvalues() const { return eigenvalues_; }
  /// Unitary; columns are eigenvectors matching eigenvalues() order.
  const CMatrix& eigenvectors() const { return eigenvectors_; }
  double sigma_max() const { return sigma_max_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }

 private:
  Observable() = default;

  CMatrix matrix_;
  RVector eigenvalues_;
  CMatrix eigenvectors_;
  double sigma_max_ = 0.0;
};

/// Pure vector or density matrix; carries the expectation-value functional.
class State {
 public:
  enum class Kind { pure, density };

  /// Default state: the one-dimensional pure state.
  State();

  static State pure(CVector v);
  static State density(CMatrix rho);

  Kind kind() const { return kind_; }
  bool is_pure() const { return kind_ == Kind::pure; }
  bool is_density() const { return kind_ == Kind::density; }
  int dim() const;

  /// Pure states only.
  const CVector& vector() const;
  /// Density states only.
  const CMatrix& rho() const;

 private:
  Kind kind_ = Kind::pure;
  CVector vector_;
  CMatrix rho_;
};

/// <psi|M|psi> for pure states, tr(rho M) for density states.
Complex expectation(const State& state, const CMatrix& m);

/// Probabilities of the measurement outcomes of x in the given state,
/// ordered like x.eigenvalues().
RVector measurement_probabilities(const State& state, const Observable& x);

/// <e^{s X}> evaluated through the cached spectral decomposition of x;
/// valid for arbitrary complex s.
Complex exp_expectation(const State& state, const Observable& x, Complex s);

/// e^{s X} as a matrix, through the cached spectral decomposition of x.
CMatrix exp_scaled(const Observable& x, Complex s);

/// Matrix exponential. Hermitian input goes through its spectral
/// decomposition; general input through scaling-and-squaring with the
/// Taylor series truncated at relative term size tol::exp_series.
CMatrix mat_exp(const CMatrix& m);

/// Principal matrix logarithm of a diagonalizable matrix with no
/// eigenvalue on the closed negative real axis.
CMatrix mat_log_principal(const CMatrix& m);

} // namespace gur

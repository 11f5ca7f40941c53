#pragma once

#include <complex>

#include <Eigen/Dense>

namespace gur {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Central tolerance record. Every numeric threshold used by the library
/// lives here; report tolerances can additionally be overridden per call.
namespace tol {

inline constexpr double hermiticity = 1e-12;        // relative to max-abs entry
inline constexpr double state_norm = 1e-12;         // pure-state normalization
inline constexpr double density_trace = 1e-12;      // |tr(rho) - 1|
inline constexpr double density_psd = 1e-12;        // eigenvalue floor -1e-12
inline constexpr double report = 1e-10;             // default inequality tolerance
inline constexpr double violation = 1e-9;           // scan region extraction
inline constexpr double commuting = 1e-10;          // ||[X,Y]||_F cutoff
inline constexpr double degenerate_variance = 1e-12;
inline constexpr double zero_observable = 1e-14;    // sigma_max cutoff
inline constexpr double zero_expectation = 1e-300;
inline constexpr double branch_cut_arg = 1e-8;      // |pi - |arg(lambda)||
inline constexpr double branch_cut_abs = 1e-12;     // |lambda|
inline constexpr double diagonalizable_cond = 1e12; // eigenvector condition cap
inline constexpr double eig_residual = 1e-10;       // ||Mv - lv|| / ||M||
inline constexpr double exp_series = 1e-16;         // relative Taylor-term cutoff
inline constexpr double log_residual = 1e-9;        // ||exp(L) - M|| / ||M||
inline constexpr double perturbative_st = 0.1;      // |s|,|t| warning threshold

} // namespace tol

} // namespace gur

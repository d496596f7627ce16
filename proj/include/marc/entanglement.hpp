#pragma once

// Wootters concurrence of two-qubit states. The atomic basis order is
// (|ee>, |eg>, |ge>, |gg>) with atom 1 as the left label.

#include <algorithm>
#include <cmath>
#include <limits>

#include "marc/qmath.hpp"

namespace marc {

namespace qubits {
inline constexpr Eigen::Index kEE = 0;
inline constexpr Eigen::Index kEG = 1;
inline constexpr Eigen::Index kGE = 2;
inline constexpr Eigen::Index kGG = 3;
}  // namespace qubits

template <typename Scalar = double>
struct TwoQubitDensityMatrix {
  using Matrix = Eigen::Matrix<Complex<Scalar>, 4, 4>;
  Matrix entries = Matrix::Zero();

  const Complex<Scalar>& operator()(Eigen::Index i, Eigen::Index j) const { return entries(i, j); }
  Complex<Scalar>& operator()(Eigen::Index i, Eigen::Index j) { return entries(i, j); }

  static TwoQubitDensityMatrix from_pure(const Eigen::Matrix<Complex<Scalar>, 4, 1>& psi) {
    return {psi * psi.adjoint()};
  }
};

namespace tol {
inline constexpr double kConcurrenceSlack = 1e-10;
inline constexpr double kPsdSlack = 1e-10;
}  // namespace tol

namespace detail {

// sigma_y (x) sigma_y in the (ee, eg, ge, gg) basis.
template <typename Scalar>
Eigen::Matrix<Complex<Scalar>, 4, 4> spin_flip() {
  Eigen::Matrix<Scalar, 4, 4> y;
  y << 0, 0, 0, -1,
       0, 0, 1, 0,
       0, 1, 0, 0,
       -1, 0, 0, 0;
  return y.template cast<Complex<Scalar>>();
}

}  // namespace detail

/// Throws InvalidDensityMatrix unless rho is Hermitian, unit-trace and PSD
/// within tolerance. Returns the eigendecomposition it had to compute anyway.
template <typename Scalar>
SpectralDecomposition<Scalar> validate_density(const TwoQubitDensityMatrix<Scalar>& rho) {
  if (!rho.entries.allFinite()) {
    throw Error(ErrorKind::InvalidDensityMatrix, "non-finite entries");
  }
  if (hermitian_check(rho.entries) > Scalar(tol::kStructural)) {
    throw Error(ErrorKind::InvalidDensityMatrix, "not Hermitian");
  }
  if (std::abs(rho.entries.trace() - Complex<Scalar>(1)) > Scalar(tol::kNormalization)) {
    throw Error(ErrorKind::InvalidDensityMatrix, "trace differs from 1");
  }
  auto d = hermitian_eigendecompose(rho.entries);
  if (d.eigenvalues.minCoeff() < -Scalar(tol::kPsdSlack)) {
    throw Error(ErrorKind::InvalidDensityMatrix, "negative eigenvalue beyond slack");
  }
  return d;
}

/// C = max(0, l1 - l2 - l3 - l4), l_i the decreasing square roots of the
/// eigenvalues of rho (sy x sy) rho* (sy x sy).
///
/// The l_i are taken as the singular values of sqrt(rho) sqrt(rho~), whose
/// Gram matrix is sqrt(rho) rho~ sqrt(rho). Working with singular values
/// keeps the small l_i accurate; square roots of near-zero eigenvalues would
/// amplify rounding to ~1e-8.
template <typename Scalar>
Scalar wootters_concurrence(const TwoQubitDensityMatrix<Scalar>& rho) {
  using Cplx = Complex<Scalar>;
  const auto d = validate_density(rho);

  // Eigenvalues at the rounding floor are zeroed; negative ones within the
  // PSD slack are clipped.
  const Scalar floor = Scalar(64) * std::numeric_limits<Scalar>::epsilon() *
                       std::max(Scalar(1), d.eigenvalues.maxCoeff());
  const RVector<Scalar> root =
      d.eigenvalues.unaryExpr([floor](Scalar mu) { return mu <= floor ? Scalar(0) : std::sqrt(mu); });
  const Eigen::Matrix<Cplx, 4, 4> sqrt_rho =
      d.eigenvectors * root.template cast<Cplx>().asDiagonal() * d.eigenvectors.adjoint();
  const auto flip = detail::spin_flip<Scalar>();
  const Eigen::Matrix<Cplx, 4, 4> sqrt_rho_tilde = flip * sqrt_rho.conjugate() * flip;

  const RVector<Scalar> lambda = singular_values(sqrt_rho * sqrt_rho_tilde);
  const Scalar c = lambda(0) - lambda(1) - lambda(2) - lambda(3);
  if (c > Scalar(1) + Scalar(tol::kConcurrenceSlack)) {
    throw Error(ErrorKind::InvalidDensityMatrix, "concurrence exceeds 1 beyond slack");
  }
  return std::clamp(c, Scalar(0), Scalar(1));
}

/// 2 |rho(eg, ge)| for states whose only off-diagonal entry is the eg/ge
/// coherence and whose |ee><ee| |gg><gg| product does not dominate it.
template <typename Scalar>
Scalar xstate_concurrence(const TwoQubitDensityMatrix<Scalar>& rho) {
  using namespace qubits;
  const Scalar slack = Scalar(tol::kStructural);
  for (Eigen::Index i = 0; i < 4; ++i) {
    for (Eigen::Index j = 0; j < 4; ++j) {
      if (i == j || (i == kEG && j == kGE) || (i == kGE && j == kEG)) continue;
      if (std::abs(rho(i, j)) > slack) {
        throw Error(ErrorKind::PatternMismatch, "unexpected off-diagonal entry");
      }
    }
  }
  const Scalar coherence = std::abs(rho(kEG, kGE));
  if (rho(kEE, kEE).real() * rho(kGG, kGG).real() > coherence * coherence + slack) {
    throw Error(ErrorKind::PatternMismatch, "population product dominates the coherence");
  }
  return Scalar(2) * coherence;
}

}  // namespace marc

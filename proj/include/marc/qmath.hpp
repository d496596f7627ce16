#pragma once

// Small dense complex linear algebra on Eigen types: a cyclic Jacobi
// eigensolver for Hermitian matrices, spectral propagation, and a fixed-step
// RK4 integrator for the Schrodinger equation that serves as an independent
// check on the spectral route.
//
// Units: hbar = 1, frequencies in units of g0, times in units of 1/g0.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "marc/error.hpp"

namespace marc {

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar>
using CVector = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
using CMatrix = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using RVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

namespace tol {
inline constexpr double kStructural = 1e-12;  // Hermiticity, residuals, norm drift
inline constexpr double kNormalization = 1e-10;
inline constexpr double kOracle = 1e-8;
inline constexpr int kMaxDimension = 64;
inline constexpr int kMaxJacobiSweeps = 60;
}  // namespace tol

template <typename Scalar>
struct SpectralDecomposition {
  RVector<Scalar> eigenvalues;   // ascending
  CMatrix<Scalar> eigenvectors;  // orthonormal columns, matched to eigenvalues
};

template <typename Derived>
auto max_abs(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  return m.size() == 0 ? Real(0) : Real(m.cwiseAbs().maxCoeff());
}

/// Largest entrywise deviation from Hermiticity, max |M(i,j) - conj(M(j,i))|.
template <typename Derived>
auto hermitian_check(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "hermitian_check requires a square matrix");
  }
  return m.size() == 0 ? Real(0) : Real((m - m.adjoint()).cwiseAbs().maxCoeff());
}

namespace detail {

// Unitary G with G^H [[app, apq], [conj(apq), aqq]] G diagonal. A phase
// rotation makes apq real, then a real Jacobi rotation annihilates it.
template <typename Scalar>
Eigen::Matrix<Complex<Scalar>, 2, 2> jacobi_rotation(Scalar app, Scalar aqq, Complex<Scalar> apq) {
  const Scalar mag = std::abs(apq);
  const Complex<Scalar> unphase = std::conj(apq / mag);
  const Scalar theta = (aqq - app) / (Scalar(2) * mag);
  const Scalar sign = theta >= Scalar(0) ? Scalar(1) : Scalar(-1);
  const Scalar t = sign / (std::abs(theta) + std::sqrt(theta * theta + Scalar(1)));
  const Scalar c = Scalar(1) / std::sqrt(t * t + Scalar(1));
  const Scalar s = t * c;
  Eigen::Matrix<Complex<Scalar>, 2, 2> g;
  g << Complex<Scalar>(c), Complex<Scalar>(s), -s * unphase, c * unphase;
  return g;
}

// Columns p,q of m <- [m_p m_q] * g.
template <typename Scalar>
void rotate_columns(CMatrix<Scalar>& m, Eigen::Index p, Eigen::Index q,
                    const Eigen::Matrix<Complex<Scalar>, 2, 2>& g) {
  const CVector<Scalar> col_p = m.col(p);
  const CVector<Scalar> col_q = m.col(q);
  m.col(p) = col_p * g(0, 0) + col_q * g(1, 0);
  m.col(q) = col_p * g(0, 1) + col_q * g(1, 1);
}

// Make the largest-magnitude component (first one on ties) real and positive.
template <typename Scalar>
void fix_phase(CMatrix<Scalar>& vectors) {
  for (Eigen::Index k = 0; k < vectors.cols(); ++k) {
    auto col = vectors.col(k);
    const Scalar peak = col.cwiseAbs().maxCoeff();
    Eigen::Index pivot = 0;
    while (std::abs(col(pivot)) < peak * (Scalar(1) - Scalar(1e-9))) ++pivot;
    if (peak > Scalar(0)) col *= std::conj(col(pivot)) / std::abs(col(pivot));
  }
}

template <typename Scalar>
void require_normalized(const CVector<Scalar>& psi, const char* where) {
  const Scalar drift = std::abs(psi.norm() - Scalar(1));
  if (!(drift <= Scalar(tol::kNormalization))) {
    throw Error(ErrorKind::UnnormalizedState,
                std::string(where) + ": state norm deviates from 1 by " + std::to_string(double(drift)));
  }
}

}  // namespace detail

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi sweeps.
/// Eigenvalues come back ascending; each eigenvector is phase-fixed so its
/// largest component is real positive, which makes the output reproducible.
template <typename Derived>
SpectralDecomposition<typename Eigen::NumTraits<typename Derived::Scalar>::Real>
hermitian_eigendecompose(const Eigen::MatrixBase<Derived>& input) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  using Cplx = Complex<Real>;

  const Eigen::Index n = input.rows();
  if (n != input.cols() || n == 0) {
    throw Error(ErrorKind::DimensionMismatch, "eigendecomposition requires a non-empty square matrix");
  }
  if (n > tol::kMaxDimension) {
    throw Error(ErrorKind::DimensionMismatch, "dimension exceeds " + std::to_string(tol::kMaxDimension));
  }

  CMatrix<Real> a = input.template cast<Cplx>();
  if (!a.allFinite()) {
    throw Error(ErrorKind::NonHermitianInput, "matrix has non-finite entries");
  }
  const Real scale = max_abs(a);
  if (hermitian_check(a) > Real(tol::kStructural) * scale) {
    throw Error(ErrorKind::NonHermitianInput, "matrix is not Hermitian within tolerance");
  }
  a = ((a + a.adjoint()) / Real(2)).eval();

  CMatrix<Real> v = CMatrix<Real>::Identity(n, n);
  // Entries below this are rounded to zero instead of rotated away; their
  // total contribution to the residual stays below eps * ||A||_F.
  const Real negligible = std::numeric_limits<Real>::epsilon() * a.norm() / Real(n);

  bool converged = false;
  for (int sweep = 0; sweep < tol::kMaxJacobiSweeps && !converged; ++sweep) {
    converged = true;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) <= negligible) {
          a(p, q) = a(q, p) = Cplx(0);
          continue;
        }
        converged = false;
        const auto g = detail::jacobi_rotation(a(p, p).real(), a(q, q).real(), a(p, q));
        detail::rotate_columns(a, p, q, g);
        a.adjointInPlace();
        detail::rotate_columns(a, p, q, g);
        a.adjointInPlace();
        a(p, q) = a(q, p) = Cplx(0);
        a(p, p) = Cplx(a(p, p).real());
        a(q, q) = Cplx(a(q, q).real());
        detail::rotate_columns(v, p, q, g);
      }
    }
  }
  if (!converged) {
    throw Error(ErrorKind::NoConvergence, "Jacobi sweep limit reached");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index(0));
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i).real() < a(j, j).real(); });

  SpectralDecomposition<Real> out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto src = order[static_cast<std::size_t>(k)];
    out.eigenvalues(k) = a(src, src).real();
    out.eigenvectors.col(k) = v.col(src);
  }
  detail::fix_phase(out.eigenvectors);
  return out;
}

/// Singular values of a square complex matrix, descending, by one-sided
/// (Hestenes) Jacobi: columns are rotated pairwise until mutually orthogonal,
/// then their norms are the singular values. Accuracy is absolute in the
/// matrix norm, with no squaring of small values.
template <typename Derived>
RVector<typename Eigen::NumTraits<typename Derived::Scalar>::Real>
singular_values(const Eigen::MatrixBase<Derived>& input) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  CMatrix<Real> w = input.template cast<Complex<Real>>();
  const Eigen::Index n = w.cols();
  const Real eps = std::numeric_limits<Real>::epsilon();

  bool converged = false;
  for (int sweep = 0; sweep < tol::kMaxJacobiSweeps && !converged; ++sweep) {
    converged = true;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Real alpha = w.col(p).squaredNorm();
        const Real beta = w.col(q).squaredNorm();
        const Complex<Real> gamma = w.col(p).dot(w.col(q));
        if (std::abs(gamma) <= eps * std::sqrt(alpha * beta) || gamma == Complex<Real>(0)) continue;
        converged = false;
        detail::rotate_columns(w, p, q, detail::jacobi_rotation(alpha, beta, gamma));
      }
    }
  }
  if (!converged) {
    throw Error(ErrorKind::NoConvergence, "one-sided Jacobi sweep limit reached");
  }
  RVector<Real> sv = w.colwise().norm().transpose();
  std::sort(sv.data(), sv.data() + sv.size(), std::greater<Real>());
  return sv;
}

/// max |M - V diag(E) V^H|.
template <typename Derived, typename Real>
Real reconstruction_residual(const Eigen::MatrixBase<Derived>& m, const SpectralDecomposition<Real>& d) {
  const CMatrix<Real> rebuilt =
      d.eigenvectors * d.eigenvalues.template cast<Complex<Real>>().asDiagonal() * d.eigenvectors.adjoint();
  return max_abs(m.template cast<Complex<Real>>() - rebuilt);
}

/// psi(t) = sum_i exp(-i E_i t) <phi_i|psi0> |phi_i>.
template <typename Real>
CVector<Real> evolve_spectral(const SpectralDecomposition<Real>& d, const CVector<Real>& psi0, Real t) {
  if (psi0.size() != d.eigenvalues.size()) {
    throw Error(ErrorKind::DimensionMismatch, "state and decomposition dimensions differ");
  }
  detail::require_normalized(psi0, "evolve_spectral");
  const CVector<Real> coeff = d.eigenvectors.adjoint() * psi0;
  const CVector<Real> phases =
      d.eigenvalues.unaryExpr([t](Real e) { return std::polar(Real(1), -e * t); });
  return d.eigenvectors * phases.cwiseProduct(coeff);
}

/// Classic RK4 for dpsi/dt = -i H psi with a fixed step. The step is shrunk
/// so an integer number of steps lands exactly on t_final. No renormalization.
template <typename Real>
CVector<Real> rk4_schrodinger(const CMatrix<Real>& h, const CVector<Real>& psi0, Real t_final, Real dt) {
  if (h.rows() != h.cols() || h.rows() != psi0.size()) {
    throw Error(ErrorKind::DimensionMismatch, "Hamiltonian and state dimensions differ");
  }
  if (!(dt > Real(0)) || !(t_final >= Real(0)) || (t_final > Real(0) && dt > t_final)) {
    throw Error(ErrorKind::InvalidStep, "need dt > 0, t_final >= 0 and dt <= t_final");
  }
  detail::require_normalized(psi0, "rk4_schrodinger");
  if (t_final == Real(0)) return psi0;

  const auto steps = static_cast<long>(std::ceil(t_final / dt - Real(1e-9)));
  const Real step = t_final / Real(steps);
  const Complex<Real> minus_i(0, -1);
  const CMatrix<Real> gen = minus_i * h;

  CVector<Real> psi = psi0;
  for (long k = 0; k < steps; ++k) {
    const CVector<Real> k1 = gen * psi;
    const CVector<Real> k2 = gen * (psi + (step / 2) * k1);
    const CVector<Real> k3 = gen * (psi + (step / 2) * k2);
    const CVector<Real> k4 = gen * (psi + step * k3);
    psi += (step / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  return psi;
}

}  // namespace marc

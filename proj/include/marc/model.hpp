#pragma once

// Single-excitation Hamiltonians for two two-level atoms sharing one cavity
// photon. Basis order everywhere: (|g,g,1>, |e,g,0>, |g,e,0>).

#include <cmath>
#include <optional>
#include <string>

#include "marc/qmath.hpp"

namespace marc {

namespace basis {
inline constexpr Eigen::Index kPhoton = 0;   // |g,g,1>
inline constexpr Eigen::Index kAtom1 = 1;    // |e,g,0>
inline constexpr Eigen::Index kAtom2 = 2;    // |g,e,0>
inline constexpr Eigen::Index kDim = 3;
}  // namespace basis

/// Couplings in units of g0: atom-1 and atom-2 Rabi frequencies and the
/// resonant dipole-dipole exchange strength.
template <typename Scalar = double>
struct ModelParams {
  Scalar g1{0};
  Scalar g2{0};
  Scalar rddi{0};

  void validate() const {
    auto ok = [](Scalar v) { return std::isfinite(v) && v >= Scalar(0); };
    if (!ok(g1) || !ok(g2) || !ok(rddi)) {
      throw Error(ErrorKind::InvalidParameter, "couplings must be finite and non-negative");
    }
  }

  /// sqrt(g1^2 + rddi^2), the bright-doublet splitting when g2 = 0.
  Scalar omega() const { return std::hypot(g1, rddi); }
};

template <typename Scalar = double>
struct AnalyticSpectrum {
  Scalar omega{};
  CVector<Scalar> dark;
  CVector<Scalar> bright_plus;
  CVector<Scalar> bright_minus;
  std::optional<Scalar> ratio_gamma;  // g1 / rddi, present when rddi > 0
};

template <typename Scalar>
CMatrix<Scalar> build_single_excitation_h(const ModelParams<Scalar>& p) {
  p.validate();
  Eigen::Matrix<Scalar, 3, 3> h;
  h << 0, p.g1, p.g2,
       p.g1, 0, p.rddi,
       p.g2, p.rddi, 0;
  return h.template cast<Complex<Scalar>>();
}

/// Closed-form eigensystem of the g2 = 0 Hamiltonian: eigenvalues {0, +-Omega},
/// dark state (rddi, 0, -g1)/Omega and bright states (g1, +-Omega, rddi)/(sqrt2 Omega).
template <typename Scalar>
AnalyticSpectrum<Scalar> analytic_spectrum(const ModelParams<Scalar>& p) {
  p.validate();
  if (p.g2 != Scalar(0)) {
    throw Error(ErrorKind::InvalidParameter, "closed-form spectrum requires g2 = 0");
  }
  const Scalar omega = p.omega();
  if (omega == Scalar(0)) {
    throw Error(ErrorKind::DegenerateModel, "g1 = rddi = 0 leaves no bright doublet");
  }
  const Scalar norm = std::sqrt(Scalar(2)) * omega;

  AnalyticSpectrum<Scalar> s;
  s.omega = omega;
  s.dark = RVector<Scalar>{{p.rddi / omega, Scalar(0), -p.g1 / omega}}.template cast<Complex<Scalar>>();
  s.bright_plus = RVector<Scalar>{{p.g1 / norm, omega / norm, p.rddi / norm}}.template cast<Complex<Scalar>>();
  s.bright_minus = RVector<Scalar>{{p.g1 / norm, -omega / norm, p.rddi / norm}}.template cast<Complex<Scalar>>();
  if (p.rddi > Scalar(0)) s.ratio_gamma = p.g1 / p.rddi;
  return s;
}

/// The analytic spectrum as a SpectralDecomposition, ascending (-Omega, 0, +Omega).
template <typename Scalar>
SpectralDecomposition<Scalar> analytic_decomposition(const ModelParams<Scalar>& p) {
  const auto s = analytic_spectrum(p);
  SpectralDecomposition<Scalar> d;
  d.eigenvalues = RVector<Scalar>{{-s.omega, Scalar(0), s.omega}};
  d.eigenvectors.resize(basis::kDim, basis::kDim);
  d.eigenvectors << s.bright_minus, s.dark, s.bright_plus;
  return d;
}

/// Single-excitation matrix of the adiabatically simplified Hamiltonian
/// g1 (a s1+ + h.c.) + chi (s1z s2+ s2- - s2z s1+ s1-), chi = 2 sqrt2 rddi^2 / g1.
/// Atom 2 only picks up a diagonal shift, so it never exchanges the excitation.
template <typename Scalar>
CMatrix<Scalar> build_effective_h(const ModelParams<Scalar>& p) {
  p.validate();
  if (p.g1 == Scalar(0)) {
    throw Error(ErrorKind::DivisionByZeroCoupling, "effective Hamiltonian needs g1 > 0");
  }
  const Scalar chi = Scalar(2) * std::sqrt(Scalar(2)) * p.rddi * p.rddi / p.g1;
  Eigen::Matrix<Scalar, 3, 3> h;
  h << 0, p.g1, 0,
       p.g1, chi, 0,
       0, 0, -chi;
  return h.template cast<Complex<Scalar>>();
}

}  // namespace marc

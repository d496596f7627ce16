#pragma once

// Test-only reference routes. Nothing here calls into the Jacobi solver or
// the spectral propagator, so agreement with them is a real cross-check.

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>

namespace oracle {

using cd = std::complex<double>;
using Vector4c = Eigen::Matrix<cd, 4, 1>;
using Matrix4c = Eigen::Matrix<cd, 4, 4>;

struct Amplitudes {
  cd a, b, c;  // |g,g,1>, |e,g,0>, |g,e,0>
};

/// Closed-form solution from (1, 0, 0) with g2 = 0:
/// a = (G^2 + g^2 cos Wt)/W^2, b = -i (g/W) sin Wt, c = (g G/W^2)(cos Wt - 1).
inline Amplitudes photon_start(double g1, double rddi, double t) {
  const double w = std::hypot(g1, rddi);
  const double cw = std::cos(w * t);
  return {cd((rddi * rddi + g1 * g1 * cw) / (w * w)), cd(0, -g1 / w * std::sin(w * t)),
          cd(g1 * rddi / (w * w) * (cw - 1))};
}

/// Pure two-qubit state (ee, eg, ge, gg) amplitudes (a, b, c, d): C = 2|ad - bc|.
inline double pure_concurrence(const Vector4c& psi) {
  return 2 * std::abs(psi(0) * psi(3) - psi(1) * psi(2));
}

inline Eigen::MatrixXcd random_hermitian(int n, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = cd(g(rng), g(rng));
  return (a + a.adjoint()) / 2.0;
}

/// Haar-ish unitary from the QR of a complex Gaussian matrix.
inline Eigen::MatrixXcd random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = cd(g(rng), g(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  return qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
}

inline Vector4c random_pure(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vector4c v;
  for (int i = 0; i < 4; ++i) v(i) = cd(g(rng), g(rng));
  return v.normalized();
}

/// Random full-rank mixed state A A^H / tr.
inline Matrix4c random_mixed(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix4c a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = cd(g(rng), g(rng));
  Matrix4c rho = a * a.adjoint();
  return rho / rho.trace();
}

inline Matrix4c kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

}  // namespace oracle

#include <doctest.h>

#include <numbers>
#include <random>

#include "marc/model.hpp"
#include "marc/qmath.hpp"
#include "oracles.hpp"

using namespace marc;
using cd = std::complex<double>;

namespace {

CMatrix<double> h_of(double g1, double rddi) { return build_single_excitation_h(ModelParams<double>{g1, 0, rddi}); }

CVector<double> photon() { return CVector<double>::Unit(3, 0); }

double orthonormality_error(const CMatrix<double>& v) {
  return max_abs(v.adjoint() * v - CMatrix<double>::Identity(v.cols(), v.cols()));
}

}  // namespace

TEST_CASE("eigendecompose: identity") {
  const auto d = hermitian_eigendecompose(CMatrix<double>::Identity(3, 3));
  CHECK(max_abs(d.eigenvalues - RVector<double>::Ones(3)) == 0.0);
  CHECK(orthonormality_error(d.eigenvectors) <= 1e-15);
}

TEST_CASE("eigendecompose: vacuum Rabi doublet plus decoupled atom") {
  const auto d = hermitian_eigendecompose(h_of(1.0, 0.0));
  CHECK(d.eigenvalues(0) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(std::abs(d.eigenvalues(1)) <= 1e-15);
  CHECK(d.eigenvalues(2) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("eigendecompose: H(g1=1, rddi=0.5)") {
  const auto h = h_of(1.0, 0.5);
  const auto d = hermitian_eigendecompose(h);
  const double omega = 1.118033988749895;
  CHECK(std::abs(d.eigenvalues(0) + omega) <= 1e-12);
  CHECK(std::abs(d.eigenvalues(1)) <= 1e-12);
  CHECK(std::abs(d.eigenvalues(2) - omega) <= 1e-12);
  CHECK(reconstruction_residual(h, d) <= 1e-12 * max_abs(h));
}

TEST_CASE("eigendecompose: errors") {
  CMatrix<double> m = CMatrix<double>::Zero(3, 3);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigendecompose(m), Error);
  try {
    hermitian_eigendecompose(m);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonHermitianInput);
  }
  CHECK_THROWS_AS(hermitian_eigendecompose(CMatrix<double>::Zero(2, 3)), Error);
  CHECK_THROWS_AS(hermitian_eigendecompose(CMatrix<double>::Identity(65, 65)), Error);
  CMatrix<double> nan = CMatrix<double>::Identity(2, 2);
  nan(0, 0) = NAN;
  CHECK_THROWS_AS(hermitian_eigendecompose(nan), Error);
}

TEST_CASE("eigendecompose: random Hermitian 3x3 and 4x4 against contract and Eigen") {
  std::mt19937_64 rng(11);
  double worst_residual = 0, worst_ortho = 0, worst_eig = 0;
  for (int n : {3, 4}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const Eigen::MatrixXcd m = oracle::random_hermitian(n, rng);
      const auto d = hermitian_eigendecompose(m);
      const double scale = max_abs(m);
      worst_residual = std::max(worst_residual, reconstruction_residual(m, d) / scale);
      worst_residual = std::max(worst_residual,
                                max_abs(m * d.eigenvectors - d.eigenvectors * d.eigenvalues.cast<cd>().asDiagonal()) / scale);
      worst_ortho = std::max(worst_ortho, orthonormality_error(d.eigenvectors));
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ref(m);
      worst_eig = std::max(worst_eig, max_abs(ref.eigenvalues() - d.eigenvalues) / scale);
      for (Eigen::Index k = 1; k < n; ++k) REQUIRE(d.eigenvalues(k - 1) <= d.eigenvalues(k));
    }
  }
  CHECK(worst_residual <= 1e-12);
  CHECK(worst_ortho <= 1e-12);
  CHECK(worst_eig <= 1e-12);
}

TEST_CASE("eigendecompose: larger dimensions up to the limit") {
  std::mt19937_64 rng(5);
  for (int n : {8, 16, 64}) {
    const Eigen::MatrixXcd m = oracle::random_hermitian(n, rng);
    const auto d = hermitian_eigendecompose(m);
    CHECK(reconstruction_residual(m, d) <= 1e-12 * max_abs(m));
    CHECK(orthonormality_error(d.eigenvectors) <= 1e-12);
  }
}

TEST_CASE("eigendecompose: degenerate cluster stays orthonormal and deterministic") {
  std::mt19937_64 rng(3);
  const Eigen::MatrixXcd u = oracle::random_unitary(4, rng);
  const Eigen::VectorXd e{{1.0, 1.0, 1.0, 2.0}};
  const Eigen::MatrixXcd m = u * e.cast<cd>().asDiagonal() * u.adjoint();
  const Eigen::MatrixXcd hm = (m + m.adjoint()) / 2.0;
  const auto d1 = hermitian_eigendecompose(hm);
  const auto d2 = hermitian_eigendecompose(hm);
  CHECK(orthonormality_error(d1.eigenvectors) <= 1e-12);
  CHECK(reconstruction_residual(hm, d1) <= 1e-12 * max_abs(hm));
  CHECK((d1.eigenvectors.array() == d2.eigenvectors.array()).all());
  CHECK((d1.eigenvalues.array() == d2.eigenvalues.array()).all());
}

TEST_CASE("eigendecompose: templated on long double") {
  CMatrix<long double> h = h_of(1.0, 0.5).cast<std::complex<long double>>();
  const auto d = hermitian_eigendecompose(h);
  const long double omega = std::sqrt(1.25L);
  CHECK(std::abs(double(d.eigenvalues(2) - omega)) <= 1e-17);
}

TEST_CASE("singular_values: matches Eigen JacobiSVD") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::MatrixXcd m = oracle::random_unitary(4, rng) * oracle::random_hermitian(4, rng);
    const auto sv = singular_values(m);
    Eigen::JacobiSVD<Eigen::MatrixXcd> ref(m);
    REQUIRE(max_abs(sv - ref.singularValues()) <= 1e-13 * ref.singularValues()(0));
  }
}

TEST_CASE("evolve_spectral: t = 0 returns the initial state") {
  const auto d = hermitian_eigendecompose(h_of(1.0, 0.5));
  CVector<double> psi0(3);
  psi0 << cd(0.6, 0), cd(0, 0.8), cd(0, 0);
  CHECK(max_abs(evolve_spectral(d, psi0, 0.0) - psi0) <= 1e-14);
}

TEST_CASE("evolve_spectral: photon start at 2pi/(3 Omega)") {
  const auto d = hermitian_eigendecompose(h_of(1.0, 0.5));
  const double omega = std::sqrt(1.25);
  const auto psi = evolve_spectral(d, photon(), 2 * std::numbers::pi / (3 * omega));
  CHECK(std::abs(psi(0) - cd(-0.2, 0)) <= 1e-12);
  CHECK(std::abs(psi(1) - cd(0, -0.7745966692414834)) <= 1e-12);
  CHECK(std::abs(psi(2) - cd(-0.6, 0)) <= 1e-12);
}

TEST_CASE("evolve_spectral: dark state is stationary") {
  const ModelParams<double> p{1.0, 0.0, 0.5};
  const auto d = hermitian_eigendecompose(build_single_excitation_h(p));
  const CVector<double> dark = analytic_spectrum(p).dark;
  for (double t : {0.3, 7.0, 99.0}) CHECK(max_abs(evolve_spectral(d, dark, t) - dark) <= 1e-12);
}

TEST_CASE("evolve_spectral: norm conservation and group property") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0), t(0.0, 100.0);
  double worst_norm = 0, worst_group = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = hermitian_eigendecompose(h_of(u(rng), u(rng)));
    const double t1 = t(rng), t2 = t(rng) / 2;
    const auto a = evolve_spectral(d, photon(), t1);
    worst_norm = std::max(worst_norm, std::abs(a.norm() - 1.0));
    const auto both = evolve_spectral(d, photon(), t1 + t2);
    const auto chained = evolve_spectral(d, a, t2);
    worst_group = std::max(worst_group, max_abs(both - chained));
  }
  CHECK(worst_norm <= 1e-12);
  CHECK(worst_group <= 1e-11);
}

TEST_CASE("evolve_spectral: errors") {
  const auto d = hermitian_eigendecompose(h_of(1.0, 0.5));
  CHECK_THROWS_AS(evolve_spectral(d, CVector<double>(CVector<double>::Unit(4, 0)), 1.0), Error);
  CHECK_THROWS_AS(evolve_spectral(d, CVector<double>(2.0 * photon()), 1.0), Error);
}

TEST_CASE("rk4: trivial cases") {
  const auto h = h_of(1.0, 0.5);
  CHECK(max_abs(rk4_schrodinger(h, photon(), 0.0, 1e-3) - photon()) == 0.0);
  const CMatrix<double> zero = CMatrix<double>::Zero(3, 3);
  CHECK(max_abs(rk4_schrodinger(zero, photon(), 5.0, 0.1) - photon()) == 0.0);
}

TEST_CASE("rk4: agrees with the spectral route") {
  const auto h = h_of(1.0, 0.5);
  const double omega = std::sqrt(1.25);
  const double t = 2 * std::numbers::pi / (3 * omega);
  const auto a = rk4_schrodinger(h, photon(), t, 1e-3);
  const auto b = evolve_spectral(hermitian_eigendecompose(h), photon(), t);
  CHECK(max_abs(a - b) <= 1e-8);
  CHECK(std::abs(a.norm() - 1.0) <= 1e-10);  // drift is measured, not corrected
}

TEST_CASE("rk4: invalid steps") {
  const auto h = h_of(1.0, 0.5);
  for (double dt : {0.0, -1e-3, 2.0}) {
    try {
      rk4_schrodinger(h, photon(), 1.0, dt);
      FAIL("expected InvalidStep");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidStep);
    }
  }
  CHECK_THROWS_AS(rk4_schrodinger(h, photon(), -1.0, 1e-3), Error);
}

#pragma once

// Time evolution of the single-excitation state, reduction to the two-atom
// density matrix, concurrence time series and the closed-form peak analytics
// for an initially unexcited atom 1 with the photon in the cavity.

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include <boost/math/tools/minima.hpp>

#include "marc/entanglement.hpp"
#include "marc/model.hpp"

namespace marc {

/// |psi(0)> = |g>_2 (alpha |g>_1 |1> + beta |e>_1 |0>).
template <typename Scalar = double>
struct InitialState {
  Complex<Scalar> alpha{1};
  Complex<Scalar> beta{0};

  void validate() const {
    const Scalar n2 = std::norm(alpha) + std::norm(beta);
    if (!std::isfinite(n2) || std::abs(n2 - Scalar(1)) > Scalar(tol::kNormalization)) {
      throw Error(ErrorKind::UnnormalizedState, "|alpha|^2 + |beta|^2 must equal 1");
    }
  }

  CVector<Scalar> to_vector() const {
    validate();
    CVector<Scalar> v = CVector<Scalar>::Zero(basis::kDim);
    v(basis::kPhoton) = alpha;
    v(basis::kAtom1) = beta;
    return v;
  }
};

template <typename Scalar = double>
struct TimeSeries {
  std::vector<Scalar> times;
  std::vector<Scalar> values;
};

template <typename Scalar = double>
struct PeakReport {
  Scalar t_peak{};  // first peak, 2 pi / (3 Omega)
  Scalar c_peak{};
  Scalar period{};  // 2 pi / Omega
  Scalar ratio{};   // rddi / g1
};

template <typename Scalar = double>
struct PeakOptimum {
  Scalar rddi_opt{};
  Scalar c_max{};
};

template <typename Scalar = double>
struct NumericPeak {
  Scalar t{};
  Scalar c{};
};

namespace detail {

template <typename Scalar>
void require_grid(const std::vector<Scalar>& grid, const char* what) {
  if (grid.empty()) throw Error(ErrorKind::InvalidParameter, std::string(what) + " grid is empty");
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!std::isfinite(grid[k]) || (k > 0 && !(grid[k] > grid[k - 1]))) {
      throw Error(ErrorKind::InvalidParameter, std::string(what) + " grid must be finite and strictly ascending");
    }
  }
}

template <typename Scalar>
Scalar require_omega(Scalar g1, Scalar rddi) {
  if (!(g1 >= Scalar(0)) || !(rddi >= Scalar(0)) || !std::isfinite(g1) || !std::isfinite(rddi)) {
    throw Error(ErrorKind::InvalidParameter, "couplings must be finite and non-negative");
  }
  const Scalar omega = std::hypot(g1, rddi);
  if (omega == Scalar(0)) throw Error(ErrorKind::DegenerateModel, "Omega = 0, period undefined");
  return omega;
}

}  // namespace detail

template <typename Scalar>
CVector<Scalar> evolve(const ModelParams<Scalar>& p, const InitialState<Scalar>& init, Scalar t) {
  const auto d = hermitian_eigendecompose(build_single_excitation_h(p));
  return evolve_spectral(d, init.to_vector(), t);
}

/// Trace out the field. Only the eg/ge coherence survives, since the
/// |g,g,1> component is orthogonal in the field to both atomic excitations.
template <typename Scalar>
TwoQubitDensityMatrix<Scalar> reduced_density(const CVector<Scalar>& psi) {
  using namespace qubits;
  if (psi.size() != basis::kDim) {
    throw Error(ErrorKind::DimensionMismatch, "single-excitation state must have 3 amplitudes");
  }
  detail::require_normalized(psi, "reduced_density");
  const Complex<Scalar> a = psi(basis::kPhoton);
  const Complex<Scalar> b = psi(basis::kAtom1);
  const Complex<Scalar> c = psi(basis::kAtom2);
  TwoQubitDensityMatrix<Scalar> rho;
  rho(kEG, kEG) = std::norm(b);
  rho(kGE, kGE) = std::norm(c);
  rho(kGG, kGG) = std::norm(a);
  rho(kEG, kGE) = b * std::conj(c);
  rho(kGE, kEG) = std::conj(rho(kEG, kGE));
  return rho;
}

template <typename Scalar>
TimeSeries<Scalar> concurrence_series(const ModelParams<Scalar>& p, const InitialState<Scalar>& init,
                                      const std::vector<Scalar>& t_grid) {
  detail::require_grid(t_grid, "time");
  const auto d = hermitian_eigendecompose(build_single_excitation_h(p));
  const CVector<Scalar> psi0 = init.to_vector();
  TimeSeries<Scalar> out;
  out.times = t_grid;
  out.values.reserve(t_grid.size());
  for (Scalar t : t_grid) {
    out.values.push_back(wootters_concurrence(reduced_density(evolve_spectral(d, psi0, t))));
  }
  return out;
}

/// C(t) = (2 g1^2 rddi / Omega^3) |sin Omega t| (1 - cos Omega t), for beta = 0.
template <typename Scalar>
Scalar closed_form_concurrence(Scalar g1, Scalar rddi, Scalar t) {
  const Scalar omega = detail::require_omega(g1, rddi);
  const Scalar phase = omega * t;
  return Scalar(2) * g1 * g1 * rddi / (omega * omega * omega) * std::abs(std::sin(phase)) *
         (Scalar(1) - std::cos(phase));
}

/// Peak times (3m -+ 1) pi / (3 Omega) for odd m up to m_max, ascending.
template <typename Scalar>
std::vector<Scalar> peak_times(Scalar g1, Scalar rddi, int m_max) {
  const Scalar omega = detail::require_omega(g1, rddi);
  if (m_max < 1 || m_max % 2 == 0) {
    throw Error(ErrorKind::InvalidParameter, "m_max must be an odd integer >= 1");
  }
  std::vector<Scalar> out;
  for (int m = 1; m <= m_max; m += 2) {
    out.push_back(Scalar(3 * m - 1) * std::numbers::pi_v<Scalar> / (Scalar(3) * omega));
    out.push_back(Scalar(3 * m + 1) * std::numbers::pi_v<Scalar> / (Scalar(3) * omega));
  }
  return out;
}

template <typename Scalar>
PeakReport<Scalar> peak_report(const ModelParams<Scalar>& p) {
  p.validate();
  if (p.g2 != Scalar(0)) {
    throw Error(ErrorKind::InvalidParameter, "closed-form peak requires g2 = 0");
  }
  const Scalar omega = detail::require_omega(p.g1, p.rddi);
  if (p.g1 == Scalar(0)) {
    throw Error(ErrorKind::ZeroCoupling, "g1 = 0 leaves rddi / g1 undefined");
  }
  const Scalar pi = std::numbers::pi_v<Scalar>;
  PeakReport<Scalar> r;
  r.c_peak = Scalar(2) * p.g1 * p.g1 * p.rddi / (omega * omega * omega) *
             (Scalar(3) * std::sqrt(Scalar(3)) / Scalar(4));
  r.t_peak = Scalar(2) * pi / (Scalar(3) * omega);
  r.period = Scalar(2) * pi / omega;
  r.ratio = p.rddi / p.g1;
  return r;
}

/// The peak concurrence is maximal, and equal to 1, at rddi = g1 / sqrt2.
template <typename Scalar>
PeakOptimum<Scalar> peak_optimum(Scalar g1) {
  if (!(g1 > Scalar(0)) || !std::isfinite(g1)) {
    throw Error(ErrorKind::InvalidParameter, "peak_optimum needs g1 > 0");
  }
  return {g1 / std::sqrt(Scalar(2)), Scalar(1)};
}

/// Brent search of the closed-form peak concurrence over rddi in (0, 10 g1].
template <typename Scalar>
PeakOptimum<Scalar> peak_optimum_numeric(Scalar g1) {
  if (!(g1 > Scalar(0)) || !std::isfinite(g1)) {
    throw Error(ErrorKind::InvalidParameter, "peak_optimum needs g1 > 0");
  }
  auto negative_peak = [g1](Scalar rddi) { return -peak_report(ModelParams<Scalar>{g1, 0, rddi}).c_peak; };
  const int bits = std::numeric_limits<Scalar>::digits;
  const auto [rddi, value] =
      boost::math::tools::brent_find_minima(negative_peak, Scalar(1e-12) * g1, Scalar(10) * g1, bits);
  return {rddi, -value};
}

/// Maximum of the full pipeline concurrence within the first period 2 pi / Omega
/// (Omega from g1 and rddi), located on a grid and polished with Brent.
/// Works for g2 != 0, where no closed form exists.
template <typename Scalar>
NumericPeak<Scalar> numeric_peak(const ModelParams<Scalar>& p, const InitialState<Scalar>& init,
                                 int grid_points = 2048) {
  const Scalar omega = detail::require_omega(p.g1, p.rddi);
  const auto d = hermitian_eigendecompose(build_single_excitation_h(p));
  const CVector<Scalar> psi0 = init.to_vector();
  auto conc = [&](Scalar t) { return wootters_concurrence(reduced_density(evolve_spectral(d, psi0, t))); };

  const Scalar period = Scalar(2) * std::numbers::pi_v<Scalar> / omega;
  const Scalar step = period / Scalar(grid_points);
  int best = 0;
  Scalar best_value = conc(Scalar(0));
  for (int k = 1; k <= grid_points; ++k) {
    const Scalar v = conc(step * Scalar(k));
    if (v > best_value) {
      best_value = v;
      best = k;
    }
  }
  const Scalar lo = std::max(Scalar(0), step * Scalar(best - 1));
  const Scalar hi = step * Scalar(best + 1);
  const int bits = std::numeric_limits<Scalar>::digits / 2;
  const auto [t, neg] = boost::math::tools::brent_find_minima([&](Scalar s) { return -conc(s); }, lo, hi, bits);
  if (-neg >= best_value) return {t, -neg};
  return {step * Scalar(best), best_value};
}

/// Indices of strict interior local maxima whose value exceeds floor.
template <typename Scalar>
std::vector<std::size_t> local_maxima(const std::vector<Scalar>& values, Scalar floor) {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k + 1 < values.size(); ++k) {
    if (values[k] > floor && values[k] > values[k - 1] && values[k] >= values[k + 1]) out.push_back(k);
  }
  return out;
}

/// n evenly spaced points from lo to hi inclusive; {lo} when n == 1.
template <typename Scalar>
std::vector<Scalar> linspace(Scalar lo, Scalar hi, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParameter, "grid count must be >= 1");
  std::vector<Scalar> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    out[static_cast<std::size_t>(k)] = n == 1 ? lo : lo + (hi - lo) * Scalar(k) / Scalar(n - 1);
  }
  return out;
}

}  // namespace marc

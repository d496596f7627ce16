#include "marc/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "marc/dynamics.hpp"

namespace marc {

namespace {

using Params = ModelParams<double>;
constexpr double kPi = std::numbers::pi;

CheckResult finish(std::string name, double worst, double tolerance) {
  return {std::move(name), worst <= tolerance, worst, tolerance};
}

Params random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  return {u(rng), 0.0, u(rng)};
}

CheckResult spectrum_check(std::mt19937_64& rng) {
  double worst = 0;
  for (int k = 0; k < 200; ++k) {
    const auto p = random_params(rng);
    const auto h = build_single_excitation_h(p);
    const auto d = hermitian_eigendecompose(h);
    const double omega = p.omega();
    worst = std::max({worst, std::abs(d.eigenvalues(0) + omega), std::abs(d.eigenvalues(1)),
                      std::abs(d.eigenvalues(2) - omega)});
    worst = std::max(worst, max_abs(h * analytic_spectrum(p).dark));
  }
  return finish("jacobi_vs_analytic_spectrum", worst, tol::kStructural);
}

CheckResult rk4_check(std::mt19937_64& rng) {
  double worst = 0;
  for (int k = 0; k < 5; ++k) {
    const auto p = random_params(rng);
    const double omega = p.omega();
    const auto h = build_single_excitation_h(p);
    const auto d = hermitian_eigendecompose(h);
    const CVector<double> psi0 = InitialState<double>{}.to_vector();
    for (double t : {1.0 / omega, 5.0 / omega, 10.0 / omega}) {
      const auto a = evolve_spectral(d, psi0, t);
      const auto b = rk4_schrodinger(h, psi0, t, 1e-3 / omega);
      worst = std::max(worst, max_abs(a - b));
    }
  }
  return finish("rk4_vs_spectral_evolution", worst, tol::kOracle);
}

CheckResult fast_path_check(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> phase(0.0, 2 * kPi);
  std::uniform_real_distribution<double> time(0.0, 50.0);
  double worst = 0;
  for (int k = 0; k < 200; ++k) {
    const auto p = random_params(rng);
    const double theta = phase(rng) / 4;
    const InitialState<double> init{std::polar(std::cos(theta), phase(rng)), std::polar(std::sin(theta), phase(rng))};
    const auto rho = reduced_density(evolve(p, init, time(rng)));
    worst = std::max(worst, std::abs(wootters_concurrence(rho) - xstate_concurrence(rho)));
  }
  return finish("wootters_vs_twice_coherence", worst, tol::kConcurrenceSlack);
}

CheckResult closed_form_check(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> time(0.0, 50.0);
  double worst = 0;
  for (int k = 0; k < 200; ++k) {
    const auto p = random_params(rng);
    const double t = time(rng);
    const double pipeline = wootters_concurrence(reduced_density(evolve(p, InitialState<double>{}, t)));
    worst = std::max(worst, std::abs(pipeline - closed_form_concurrence(p.g1, p.rddi, t)));
  }
  return finish("closed_form_vs_pipeline_concurrence", worst, tol::kConcurrenceSlack);
}

CheckResult peak_time_check(std::mt19937_64& rng) {
  constexpr int kPerPeriod = 10000;
  double worst_steps = 0;
  for (int k = 0; k < 5; ++k) {
    const auto p = random_params(rng);
    const double period = 2 * kPi / p.omega();
    const double step = period / kPerPeriod;
    std::vector<double> grid(kPerPeriod + 1);
    for (int i = 0; i <= kPerPeriod; ++i) grid[static_cast<std::size_t>(i)] = step * i;
    const auto series = concurrence_series(p, InitialState<double>{}, grid);
    const auto peaks = local_maxima(series.values, 1e-9);
    const auto expected = peak_times(p.g1, p.rddi, 1);
    if (peaks.size() != expected.size()) return finish("formula_peaks_vs_grid_argmax", INFINITY, 1.0);
    for (std::size_t i = 0; i < peaks.size(); ++i) {
      worst_steps = std::max(worst_steps, std::abs(grid[peaks[i]] - expected[i]) / step);
    }
  }
  return finish("formula_peaks_vs_grid_argmax", worst_steps, 1.0);
}

CheckResult optimum_check() {
  const auto exact = peak_optimum(1.0);
  const auto found = peak_optimum_numeric(1.0);
  const double worst = std::max(std::abs(exact.rddi_opt - found.rddi_opt), std::abs(exact.c_max - found.c_max));
  return finish("optimum_search_vs_closed_form", worst, 1e-6);
}

CheckResult effective_h_check(std::mt19937_64& rng) {
  double worst = 0;
  for (int k = 0; k < 20; ++k) {
    const auto p = random_params(rng);
    const auto d = hermitian_eigendecompose(build_effective_h(p));
    const CVector<double> psi0 = InitialState<double>{}.to_vector();
    for (int i = 0; i <= 100; ++i) {
      worst = std::max(worst, wootters_concurrence(reduced_density(evolve_spectral(d, psi0, double(i)))));
    }
  }
  return finish("effective_hamiltonian_zero_entanglement", worst, tol::kStructural);
}

}  // namespace

std::vector<CheckResult> run_selftest(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> out;
  out.push_back(spectrum_check(rng));
  out.push_back(rk4_check(rng));
  out.push_back(fast_path_check(rng));
  out.push_back(closed_form_check(rng));
  out.push_back(peak_time_check(rng));
  out.push_back(optimum_check());
  out.push_back(effective_h_check(rng));
  return out;
}

}  // namespace marc

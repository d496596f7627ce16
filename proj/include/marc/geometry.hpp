#pragma once

// Position dependence of the couplings. This is the only place that knows
// about laboratory units (MHz, Hz, micrometres); everything it returns is in
// units of g0 (frequencies) and 1/g0 (times), positions in units of w0.

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "marc/dynamics.hpp"

namespace marc {

struct CavityGeometry {
  double g0_mhz = 400.0;
  double w0_um = 4.0;
  double lambda_um = 0.85;
  double x2 = -5.0;             // atom 2, units of w0
  bool standing_wave = false;   // multiply the envelope by cos(2 pi x / lambda)
  // Dipole-dipole profile A/R + B/R^2 + C3/R^3 with R in micrometres and the
  // result in Hz. When A is unset it is calibrated so that the profile equals
  // gamma_ref_hz at R = r_ref (units of w0).
  std::optional<double> rddi_a;  // Hz um
  double rddi_b = 0.0;           // Hz um^2
  double rddi_c3 = 0.0;          // Hz um^3
  double gamma_ref_hz = 1e5;
  double r_ref = 3.0;

  void validate() const;
  double calibrated_a() const;
};

struct SweepResult {
  std::vector<double> x1;
  std::vector<double> g1;
  std::vector<double> g2;
  std::vector<double> rddi;
  std::vector<double> ratio;
  std::vector<double> c_peak;
  std::vector<double> t_peak;
  std::vector<double> period;
  // Numeric first-period peak with g2 kept; filled only when requested.
  std::vector<double> c_peak_full_g2;

  std::size_t size() const { return x1.size(); }
};

/// Atom-field coupling at x1 (units of w0), in units of g0: exp(-x1^2), times
/// cos(2 pi x1 w0 / lambda) when the standing-wave factor is enabled.
double coupling_at(const CavityGeometry& geo, double x1);

/// Dipole-dipole strength at separation r (units of w0), in units of g0.
double rddi_at(const CavityGeometry& geo, double r);

/// Same, in Hz.
double rddi_hz_at(const CavityGeometry& geo, double r);

/// g1 and g2 from the two positions, rddi from their separation. A negative
/// standing-wave coupling enters through its magnitude; its sign is a local
/// phase of the atomic state and does not affect the dynamics of concurrence.
ModelParams<double> params_at(const CavityGeometry& geo, double x1);

SweepResult sweep_position(const CavityGeometry& geo, const std::vector<double>& x1_grid,
                           bool with_full_g2 = false);

/// Concurrence for beta = 0 on the (x1, t) grid; row i is x1_grid[i].
Eigen::MatrixXd mesh(const CavityGeometry& geo, const std::vector<double>& x1_grid,
                     const std::vector<double>& t_grid);

}  // namespace marc

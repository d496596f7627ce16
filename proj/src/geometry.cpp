#include "marc/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace marc {

namespace {

bool positive(double v) { return std::isfinite(v) && v > 0.0; }
bool nonnegative(double v) { return std::isfinite(v) && v >= 0.0; }

void require_x1_grid(const CavityGeometry& geo, const std::vector<double>& grid) {
  if (grid.empty()) throw Error(ErrorKind::InvalidParameter, "x1 grid is empty");
  for (double x : grid) {
    if (!std::isfinite(x)) throw Error(ErrorKind::InvalidParameter, "x1 grid must be finite");
    if (x == geo.x2) throw Error(ErrorKind::CoincidentAtoms, "x1 grid contains x2");
  }
}

}  // namespace

void CavityGeometry::validate() const {
  if (!positive(g0_mhz) || !positive(w0_um) || !positive(lambda_um) || !positive(gamma_ref_hz) ||
      !positive(r_ref)) {
    throw Error(ErrorKind::InvalidParameter, "g0, w0, lambda, gamma_ref and r_ref must be positive");
  }
  if (!std::isfinite(x2)) throw Error(ErrorKind::InvalidParameter, "x2 must be finite");
  if ((rddi_a && !nonnegative(*rddi_a)) || !nonnegative(rddi_b) || !nonnegative(rddi_c3)) {
    throw Error(ErrorKind::InvalidParameter, "RDDI profile coefficients must be non-negative");
  }
  if (calibrated_a() < 0.0) {
    throw Error(ErrorKind::InvalidParameter, "B and C3 terms alone exceed gamma_ref at r_ref");
  }
}

double CavityGeometry::calibrated_a() const {
  if (rddi_a) return *rddi_a;
  const double r = r_ref * w0_um;
  return gamma_ref_hz * r - rddi_b / r - rddi_c3 / (r * r);
}

double coupling_at(const CavityGeometry& geo, double x1) {
  geo.validate();
  if (!std::isfinite(x1)) throw Error(ErrorKind::InvalidParameter, "position must be finite");
  double g = std::exp(-x1 * x1);
  if (geo.standing_wave) g *= std::cos(2.0 * std::numbers::pi * x1 * geo.w0_um / geo.lambda_um);
  return g;
}

double rddi_hz_at(const CavityGeometry& geo, double r) {
  geo.validate();
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw Error(ErrorKind::NonpositiveSeparation, "separation must be positive");
  }
  const double r_um = r * geo.w0_um;
  return geo.calibrated_a() / r_um + geo.rddi_b / (r_um * r_um) + geo.rddi_c3 / (r_um * r_um * r_um);
}

double rddi_at(const CavityGeometry& geo, double r) { return rddi_hz_at(geo, r) / (geo.g0_mhz * 1e6); }

ModelParams<double> params_at(const CavityGeometry& geo, double x1) {
  if (x1 == geo.x2) throw Error(ErrorKind::CoincidentAtoms, "x1 equals x2");
  return {std::abs(coupling_at(geo, x1)), std::abs(coupling_at(geo, geo.x2)), rddi_at(geo, std::abs(x1 - geo.x2))};
}

SweepResult sweep_position(const CavityGeometry& geo, const std::vector<double>& x1_grid, bool with_full_g2) {
  require_x1_grid(geo, x1_grid);
  SweepResult out;
  for (double x : x1_grid) {
    const auto p = params_at(geo, x);
    // The analytic peak uses the MARC limit g2 = 0.
    const auto report = peak_report(ModelParams<double>{p.g1, 0.0, p.rddi});
    out.x1.push_back(x);
    out.g1.push_back(p.g1);
    out.g2.push_back(p.g2);
    out.rddi.push_back(p.rddi);
    out.ratio.push_back(report.ratio);
    out.c_peak.push_back(report.c_peak);
    out.t_peak.push_back(report.t_peak);
    out.period.push_back(report.period);
    if (with_full_g2) out.c_peak_full_g2.push_back(numeric_peak(p, InitialState<double>{}).c);
  }
  return out;
}

Eigen::MatrixXd mesh(const CavityGeometry& geo, const std::vector<double>& x1_grid,
                     const std::vector<double>& t_grid) {
  require_x1_grid(geo, x1_grid);
  detail::require_grid(t_grid, "time");
  Eigen::MatrixXd out(static_cast<Eigen::Index>(x1_grid.size()), static_cast<Eigen::Index>(t_grid.size()));
  for (std::size_t i = 0; i < x1_grid.size(); ++i) {
    const auto series = concurrence_series(params_at(geo, x1_grid[i]), InitialState<double>{}, t_grid);
    out.row(static_cast<Eigen::Index>(i)) = Eigen::Map<const Eigen::RowVectorXd>(
        series.values.data(), static_cast<Eigen::Index>(series.values.size()));
  }
  return out;
}

}  // namespace marc

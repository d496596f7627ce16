#include "marc/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>

#include <CLI11.hpp>

#include "marc/csv.hpp"
#include "marc/selftest.hpp"
#include "marc/svg.hpp"

namespace marc::cli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Error usage(const std::string& what) { return Error(ErrorKind::InvalidParameter, what); }

bool direct_mode(const RunConfig& c) { return c.g1 || c.g2 || c.rddi; }

void require_position_only(const RunConfig& c) {
  if (direct_mode(c)) throw usage(c.command + " derives couplings from positions; --g1/--g2/--rddi not allowed");
  if (c.x1) throw usage(c.command + " sweeps x1 over --x1-min/--x1-max/--x1-steps; --x1 not allowed");
}

std::vector<double> x1_grid(const RunConfig& c) {
  if (!std::isfinite(c.x1_min) || !std::isfinite(c.x1_max)) throw usage("x1 range must be finite");
  if (c.x1_steps > 1 && !(c.x1_max > c.x1_min)) throw usage("--x1-max must exceed --x1-min");
  return linspace(c.x1_min, c.x1_max, c.x1_steps);
}

std::vector<double> t_grid(const RunConfig& c, double default_t_max) {
  const double t_max = c.t_max.value_or(default_t_max);
  if (!std::isfinite(t_max) || t_max < 0) throw usage("--t-max must be finite and non-negative");
  if (c.t_steps > 1 && !(t_max > 0)) throw usage("--t-max must be positive when --t-steps > 1");
  return linspace(0.0, t_max, c.t_steps);
}

double default_period(const ModelParams<double>& p, const RunConfig& c) {
  if (c.t_max) return *c.t_max;
  if (p.omega() == 0) throw Error(ErrorKind::DegenerateModel, "Omega = 0; pass --t-max explicitly");
  return kTwoPi / p.omega();
}

void require_csv(const RunConfig& c) {
  if (c.format != Format::Csv) throw usage(c.command + " only writes CSV");
}

// ---------------------------------------------------------------- spectrum

CommandOutput cmd_spectrum(const RunConfig& c) {
  require_csv(c);
  const auto p = resolve_params(c);
  const auto h = build_single_excitation_h(p);
  const auto d = hermitian_eigendecompose(h);
  std::optional<SpectralDecomposition<double>> exact;
  if (p.g2 == 0.0) exact = analytic_decomposition(p);

  const double scale = max_abs(h);
  io::CsvWriter csv({"k", "eigenvalue", "analytic_eigenvalue", "v_gg1_re", "v_gg1_im", "v_eg0_re", "v_eg0_im",
                     "v_ge0_re", "v_ge0_im", "analytic_gg1", "analytic_eg0", "analytic_ge0", "residual",
                     "analytic_residual"});
  double worst = 0;
  for (Eigen::Index k = 0; k < basis::kDim; ++k) {
    CVector<double> v = d.eigenvectors.col(k);
    const double e = d.eigenvalues(k);
    const double residual = max_abs(h * v - e * v);
    worst = std::max(worst, residual);
    std::vector<double> row{double(k), e};
    double exact_residual = NAN;
    RVector<double> exact_vec = RVector<double>::Constant(3, NAN);
    if (exact) {
      const CVector<double> u = exact->eigenvectors.col(k);
      const auto overlap = u.dot(v);
      if (std::abs(overlap) > 0) v *= std::conj(overlap) / std::abs(overlap);
      exact_vec = u.real();
      exact_residual = max_abs(h * u - exact->eigenvalues(k) * u);
      worst = std::max(worst, exact_residual);
      row.push_back(exact->eigenvalues(k));
    } else {
      row.push_back(NAN);
    }
    for (Eigen::Index i = 0; i < basis::kDim; ++i) {
      row.push_back(v(i).real());
      row.push_back(v(i).imag());
    }
    for (Eigen::Index i = 0; i < basis::kDim; ++i) row.push_back(exact_vec(i));
    row.push_back(residual);
    row.push_back(exact_residual);
    csv.row(row);
  }
  return {csv.str(), worst <= tol::kStructural * scale ? kOk : kNumerical};
}

// ---------------------------------------------------------------- evolve

CommandOutput cmd_evolve(const RunConfig& c) {
  const auto p = resolve_params(c);
  const auto init = resolve_initial(c);
  const auto grid = t_grid(c, default_period(p, c));
  const auto d = hermitian_eigendecompose(build_single_excitation_h(p));
  const CVector<double> psi0 = init.to_vector();

  io::CsvWriter csv({"t", "a_re", "a_im", "b_re", "b_im", "c_re", "c_im", "norm", "concurrence"});
  io::LineSeries curve;
  for (double t : grid) {
    const CVector<double> psi = evolve_spectral(d, psi0, t);
    const double conc = wootters_concurrence(reduced_density(psi));
    csv.row({t, psi(0).real(), psi(0).imag(), psi(1).real(), psi(1).imag(), psi(2).real(), psi(2).imag(), psi.norm(),
             conc});
    curve.x.push_back(t);
    curve.y.push_back(conc);
  }
  if (c.format == Format::Svg) {
    return {io::line_plot({"Atom-atom concurrence", "t (1/g0)", "C(t)"}, {curve}), kOk};
  }
  return {csv.str(), kOk};
}

// ---------------------------------------------------------------- sweep

CommandOutput cmd_sweep(const RunConfig& c) {
  require_position_only(c);
  const auto r = sweep_position(c.geometry, x1_grid(c), c.full_g2);
  if (c.format == Format::Svg) {
    if (c.figure == "period") {
      return {io::line_plot({"Peak-entanglement period", "x1 (w0)", "period (1/g0)"}, {{r.x1, r.period}}), kOk};
    }
    return {io::line_plot({"Peak entanglement", "x1 (w0)", "peak concurrence"}, {{r.x1, r.c_peak}}), kOk};
  }
  std::vector<std::string> header{"x1", "g1", "g2", "rddi", "ratio", "c_peak", "t_peak", "period"};
  if (c.full_g2) header.emplace_back("c_peak_full_g2");
  io::CsvWriter csv(header);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::vector<double> row{r.x1[i], r.g1[i], r.g2[i], r.rddi[i], r.ratio[i], r.c_peak[i], r.t_peak[i], r.period[i]};
    if (c.full_g2) row.push_back(r.c_peak_full_g2[i]);
    csv.row(row);
  }
  return {csv.str(), kOk};
}

// ---------------------------------------------------------------- mesh

CommandOutput cmd_mesh(const RunConfig& c) {
  require_position_only(c);
  const auto xs = x1_grid(c);
  double longest = 0;
  for (double x : xs) longest = std::max(longest, default_period(params_at(c.geometry, x), c));
  const auto ts = t_grid(c, longest);
  const Eigen::MatrixXd values = mesh(c.geometry, xs, ts);
  if (c.format == Format::Svg) {
    return {io::raster_plot({"Concurrence over position and time", "t (1/g0)", "x1 (w0)"}, ts, xs, values), kOk};
  }
  io::CsvWriter csv({"x1", "t", "concurrence"});
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t k = 0; k < ts.size(); ++k) {
      csv.row({xs[i], ts[k], values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k))});
    }
  }
  return {csv.str(), kOk};
}

// ---------------------------------------------------------------- peaks

CommandOutput cmd_peaks(const RunConfig& c) {
  require_csv(c);
  if (c.scan_rddi && c.rddi) throw usage("--scan-rddi and --rddi are mutually exclusive");
  auto p = resolve_params(c);
  p.g2 = 0.0;  // closed-form peaks live in the g2 = 0 limit

  io::CsvWriter csv({"kind", "g1", "rddi", "ratio", "c_peak", "t_peak", "period"});
  auto emit = [&](std::string_view kind, double rddi) {
    const auto r = peak_report(ModelParams<double>{p.g1, 0.0, rddi});
    csv.row(kind, {p.g1, rddi, r.ratio, r.c_peak, r.t_peak, r.period});
  };

  if (c.scan_rddi) {
    const auto grid = linspace(c.scan_rddi->lo, c.scan_rddi->hi, c.scan_rddi->count);
    double best_rddi = grid.front();
    double best = -1;
    for (double rddi : grid) {
      emit("scan", rddi);
      const double v = peak_report(ModelParams<double>{p.g1, 0.0, rddi}).c_peak;
      if (v > best) {
        best = v;
        best_rddi = rddi;
      }
    }
    emit("scan_argmax", best_rddi);
  } else {
    emit("report", p.rddi);
  }
  if (p.g1 <= 0) throw Error(ErrorKind::ZeroCoupling, "peak optimum needs g1 > 0");
  emit("optimum", peak_optimum(p.g1).rddi_opt);
  emit("optimum_search", peak_optimum_numeric(p.g1).rddi_opt);
  return {csv.str(), kOk};
}

// ---------------------------------------------------------------- selftest

CommandOutput cmd_selftest() {
  std::string text;
  bool ok = true;
  for (const auto& r : run_selftest()) {
    ok = ok && r.passed;
    text += std::string(r.passed ? "PASS " : "FAIL ") + r.name + " measured=" + io::format_double(r.measured) +
            " tolerance=" + io::format_double(r.tolerance) + "\n";
  }
  text += ok ? "selftest: all checks passed\n" : "selftest: FAILED\n";
  return {text, ok ? kOk : kNumerical};
}

CommandOutput cmd_plot(RunConfig c) {
  c.format = Format::Svg;
  if (c.figure == "evolve") return cmd_evolve(c);
  if (c.figure == "peak" || c.figure == "period") return cmd_sweep(c);
  if (c.figure == "mesh") return cmd_mesh(c);
  throw usage("--figure must be one of evolve, peak, period, mesh");
}

}  // namespace

ModelParams<double> resolve_params(const RunConfig& c) {
  if (c.x1 && direct_mode(c)) throw usage("--x1 cannot be combined with --g1/--g2/--rddi");
  if (c.x1) return params_at(c.geometry, *c.x1);
  ModelParams<double> p{c.g1.value_or(1.0), c.g2.value_or(0.0), c.rddi.value_or(0.0)};
  p.validate();
  return p;
}

InitialState<double> resolve_initial(const RunConfig& c) {
  InitialState<double> init{{c.alpha_re, c.alpha_im}, {c.beta_re, c.beta_im}};
  init.validate();
  return init;
}

RddiScan parse_scan(const std::string& text) {
  RddiScan scan;
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  if (second == std::string::npos) throw usage("--scan-rddi expects lo:hi:n");
  auto number = [&](std::string_view s, auto& value) {
    const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) throw usage("--scan-rddi: bad number '" + std::string(s) + "'");
  };
  const std::string_view view(text);
  number(view.substr(0, first), scan.lo);
  number(view.substr(first + 1, second - first - 1), scan.hi);
  number(view.substr(second + 1), scan.count);
  if (!std::isfinite(scan.lo) || !std::isfinite(scan.hi) || scan.lo < 0 || scan.count < 1 ||
      (scan.count > 1 && !(scan.hi > scan.lo))) {
    throw usage("--scan-rddi needs 0 <= lo < hi and n >= 1");
  }
  return scan;
}

CommandOutput run_command(const RunConfig& c) {
  if (c.t_steps < 1 || c.x1_steps < 1) throw usage("grid counts must be >= 1");
  c.geometry.validate();
  if (c.command == "spectrum") return cmd_spectrum(c);
  if (c.command == "evolve") return cmd_evolve(c);
  if (c.command == "sweep") return cmd_sweep(c);
  if (c.command == "mesh") return cmd_mesh(c);
  if (c.command == "peaks") return cmd_peaks(c);
  if (c.command == "selftest") return cmd_selftest();
  if (c.command == "plot") return cmd_plot(c);
  throw usage("unknown command '" + c.command + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Two-atom cavity QED entanglement simulator", args.empty() ? "marc" : args.front()};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key=value file; command-line flags take precedence");
  app.allow_config_extras(CLI::config_extras_mode::error);

  for (const char* name : {"spectrum", "evolve", "sweep", "mesh", "peaks", "selftest", "plot"}) {
    app.add_subcommand(name)->callback([&c, name] { c.command = name; });
  }
  app.get_subcommand("spectrum")->description("eigenvalues and eigenvectors, Jacobi beside closed form");
  app.get_subcommand("evolve")->description("state amplitudes and concurrence over time");
  app.get_subcommand("sweep")->description("peak concurrence, peak time and period over atom-1 position");
  app.get_subcommand("mesh")->description("concurrence over (x1, t)");
  app.get_subcommand("peaks")->description("closed-form peak report and optimum");
  app.get_subcommand("selftest")->description("run the oracle cross-checks");
  app.get_subcommand("plot")->description("SVG figure (--figure evolve|peak|period|mesh)");

  auto* g1 = app.add_option("--g1", c.g1, "atom-1 coupling (g0 units)");
  auto* g2 = app.add_option("--g2", c.g2, "atom-2 coupling (g0 units)");
  auto* rddi = app.add_option("--rddi", c.rddi, "dipole-dipole strength (g0 units)");
  auto* x1 = app.add_option("--x1", c.x1, "atom-1 position (w0 units)");
  x1->excludes(g1)->excludes(g2)->excludes(rddi);
  app.add_option("--alpha-re,--alpha", c.alpha_re, "Re alpha, weight of |g>1|1>");
  app.add_option("--alpha-im", c.alpha_im);
  app.add_option("--beta-re,--beta", c.beta_re, "Re beta, weight of |e>1|0>");
  app.add_option("--beta-im", c.beta_im);
  app.add_option("--t-max", c.t_max, "time span (1/g0); default one period");
  app.add_option("--t-steps", c.t_steps, "number of time points");
  app.add_option("--x1-min", c.x1_min);
  app.add_option("--x1-max", c.x1_max);
  app.add_option("--x1-steps", c.x1_steps);
  std::string scan;
  auto* scan_opt = app.add_option("--scan-rddi", scan, "lo:hi:n scan of rddi for peaks");
  app.add_option("--out", c.out_path, "output file (default stdout)");
  std::string format = "csv";
  app.add_option("--format", format)->check(CLI::IsMember({"csv", "svg"}));
  app.add_option("--figure", c.figure, "plot figure")->check(CLI::IsMember({"evolve", "peak", "period", "mesh"}));
  app.add_flag("--full-g2", c.full_g2, "sweep: add numeric peak with g2 kept");
  app.add_option("--g0-mhz", c.geometry.g0_mhz);
  app.add_option("--w0-um", c.geometry.w0_um);
  app.add_option("--lambda-um", c.geometry.lambda_um);
  app.add_option("--x2", c.geometry.x2, "atom-2 position (w0 units)");
  app.add_option("--gamma-ref-hz", c.geometry.gamma_ref_hz);
  app.add_option("--r-ref", c.geometry.r_ref, "calibration separation (w0 units)");
  app.add_option("--rddi-a", c.geometry.rddi_a, "1/R coefficient (Hz um); default calibrated");
  app.add_option("--rddi-b", c.geometry.rddi_b, "1/R^2 coefficient (Hz um^2)");
  app.add_option("--rddi-c3", c.geometry.rddi_c3, "1/R^3 coefficient (Hz um^3)");
  app.add_flag("--standing-wave", c.geometry.standing_wave);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
    c.format = format == "svg" ? Format::Svg : Format::Csv;
    if (scan_opt->count() > 0) c.scan_rddi = parse_scan(scan);

    const auto result = run_command(c);
    if (c.out_path.empty()) {
      out << result.text;
    } else {
      std::ofstream file(c.out_path, std::ios::binary);
      file << result.text;
      if (!file) {
        err << "error: cannot write " << c.out_path << "\n";
        return kUsage;
      }
    }
    if (result.exit_code != kOk) err << "error: numerical contract violated\n";
    return result.exit_code;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_numerical(e.kind()) ? kNumerical : kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumerical;
  }
}

}  // namespace marc::cli

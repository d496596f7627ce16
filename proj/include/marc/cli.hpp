#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "marc/geometry.hpp"

namespace marc::cli {

enum class Format { Csv, Svg };

struct RddiScan {
  double lo = 0;
  double hi = 0;
  int count = 0;
};

struct RunConfig {
  std::string command;
  CavityGeometry geometry;
  // Direct mode; mutually exclusive with x1.
  std::optional<double> g1;
  std::optional<double> g2;
  std::optional<double> rddi;
  // Position mode, units of w0.
  std::optional<double> x1;
  double alpha_re = 1, alpha_im = 0, beta_re = 0, beta_im = 0;
  std::optional<double> t_max;
  int t_steps = 201;
  double x1_min = -2, x1_max = 2;
  int x1_steps = 41;
  std::optional<RddiScan> scan_rddi;
  std::string out_path;  // empty: standard output
  Format format = Format::Csv;
  std::string figure = "evolve";
  bool full_g2 = false;
};

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kNumerical = 3;

struct CommandOutput {
  std::string text;
  int exit_code = kOk;
};

/// Runs the named subcommand; throws marc::Error on bad input or contract
/// violations.
CommandOutput run_command(const RunConfig& config);

ModelParams<double> resolve_params(const RunConfig& config);
InitialState<double> resolve_initial(const RunConfig& config);
RddiScan parse_scan(const std::string& text);

/// Full front end: parses args (args[0] is the program name), runs, writes
/// the result to --out or `out`, diagnostics to `err`. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace marc::cli

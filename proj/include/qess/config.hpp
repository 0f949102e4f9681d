#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qess {

struct SweepSpec {
  double start = 0.0;
  double end = 0.0;
  std::size_t count = 0;
};

// Resolved run configuration. Precedence: command-line flags override
// config-file values override these built-in defaults.
struct RunConfig {
  std::array<double, 4> game{1.0, 0.0, 0.0, 1.0};  // r, s, t, u

  std::optional<double> gamma;
  std::optional<SweepSpec> gamma_sweep;
  std::vector<std::array<double, 2>> strategy;  // (theta, phi); payoff takes
                                                // one (both players) or two
  std::optional<double> classical;              // classical candidate p
  std::optional<std::array<double, 2>> incumbent;
  std::optional<std::array<double, 2>> mutant;

  double epsilon0 = 0.01;
  double dt = 0.01;
  std::size_t steps = 30000;

  double gap_tol = 1e-9;
  double exclusion_radius = 1e-3;
  std::size_t grid_points = 1001;
  std::size_t theta_points = 181;
  std::size_t phi_points = 91;
  std::size_t refinement_levels = 3;
  double zoom_factor = 10.0;

  std::string out;                            // empty: QESS_OUT_DIR, else "."
  std::vector<std::string> format = {"csv"};  // subset of {csv,json,svg}

  bool closed = false;  // payoff: require the closed form
  bool base2 = false;   // entropy in bits instead of nats
  std::vector<double> mu;
};

// Raw flag values as passed on the command line; unset optionals fall back
// to the config file and then to the defaults.
struct CliOverrides {
  std::optional<std::string> game;
  std::optional<std::string> gamma;
  std::optional<std::string> gamma_sweep;
  std::vector<std::string> strategy;
  std::optional<std::string> classical;
  std::optional<std::string> incumbent;
  std::optional<std::string> mutant;
  std::optional<std::string> epsilon0;
  std::optional<std::string> dt;
  std::optional<std::string> steps;
  std::optional<std::string> gap_tol;
  std::optional<std::string> exclusion_radius;
  std::optional<std::string> grid_points;
  std::optional<std::string> theta_points;
  std::optional<std::string> phi_points;
  std::optional<std::string> refinement_levels;
  std::optional<std::string> zoom_factor;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<std::string> mu;
  bool closed = false;
  bool base2 = false;
};

// Radians, or one of the literal tokens pi, pi/2, pi/4. Throws
// ParameterError on anything else.
double parse_angle(const std::string& token);

// Builds the effective configuration: defaults, then the JSON config file
// (when given), then the flags. Throws ParameterError naming the offending
// field.
RunConfig resolve_config(const CliOverrides& flags,
                         const std::optional<std::string>& config_path);

// Output directory precedence: --out, then QESS_OUT_DIR, then ".".
std::string resolve_out_dir(const RunConfig& config);

}  // namespace qess

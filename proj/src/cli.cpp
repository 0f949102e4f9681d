#include "qess/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"

#include "qess/analytic.hpp"
#include "qess/config.hpp"
#include "qess/dynamics.hpp"
#include "qess/emit.hpp"
#include "qess/equilibrium.hpp"
#include "qess/game.hpp"
#include "qess/reproduce.hpp"
#include "qess/svg.hpp"

namespace qess {

namespace {

namespace fs = std::filesystem;

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool wants_format(const RunConfig& config, const std::string& f) {
  for (const auto& entry : config.format) {
    if (entry == f) return true;
  }
  return false;
}

fs::path prepare_out_dir(const RunConfig& config) {
  const fs::path dir = resolve_out_dir(config);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoFailure("cannot create output directory '" + dir.string() + "'");
  }
  return dir;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailure("cannot open '" + path.string() + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoFailure("failed writing '" + path.string() + "'");
}

template <typename T>
T require_field(const std::optional<T>& field, const char* name) {
  if (!field) {
    throw ParameterError(std::string("missing required field '") + name + "'");
  }
  return *field;
}

GameMatrix make_game(const RunConfig& config, bool require_constrained) {
  return validate_game(config.game[0], config.game[1], config.game[2],
                       config.game[3], require_constrained);
}

bool game_is_constrained(const RunConfig& config) {
  return config.game[1] == config.game[2] && config.game[0] == config.game[3] &&
         config.game[0] - config.game[2] > 0.0;
}

Tolerances make_tolerances(const RunConfig& config) {
  return {config.gap_tol, config.exclusion_radius};
}

GridSpec make_grid(const RunConfig& config) {
  return {config.theta_points, config.phi_points, config.refinement_levels,
          config.zoom_factor};
}

QuantumStrategy make_strategy(const std::array<double, 2>& angles) {
  return {angles[0], angles[1]};
}

int cmd_payoff(const RunConfig& config) {
  if (config.strategy.empty()) {
    throw ParameterError("missing required field 'strategy'");
  }
  const EntanglementLevel gamma(require_field(config.gamma, "gamma"));
  const QuantumStrategy alice = make_strategy(config.strategy[0]);
  const QuantumStrategy bob = make_strategy(
      config.strategy.size() > 1 ? config.strategy[1] : config.strategy[0]);

  const bool use_closed = config.closed || game_is_constrained(config);
  const GameMatrix game = make_game(config, config.closed);

  const PayoffPair numeric = quantum_payoff_numeric(game, gamma, alice, bob);
  std::cout << "gamma=" << format_double(gamma.gamma()) << '\n'
            << "s_a: theta=" << format_double(alice.theta())
            << " phi=" << format_double(alice.phi()) << '\n'
            << "s_b: theta=" << format_double(bob.theta())
            << " phi=" << format_double(bob.phi()) << '\n'
            << "payoff_alice_numeric=" << format_double(numeric.alice) << '\n'
            << "payoff_bob_numeric=" << format_double(numeric.bob) << '\n';
  if (use_closed) {
    const GameMatrix constrained = make_game(config, true);
    const double closed = quantum_payoff_closed(constrained, gamma, alice, bob);
    std::cout << "payoff_closed=" << format_double(closed) << '\n'
              << "abs_difference="
              << format_double(std::abs(numeric.alice - closed)) << '\n';
  }
  return 0;
}

int cmd_classify(const RunConfig& config) {
  ClassificationReport report;
  if (config.classical) {
    const GameMatrix game = make_game(config, false);
    report = classify_classical(game, MixedStrategy(*config.classical),
                                make_tolerances(config), config.grid_points);
  } else {
    if (config.strategy.empty()) {
      throw ParameterError(
          "missing required field 'strategy' (or 'classical')");
    }
    const GameMatrix game = make_game(config, false);
    const EntanglementLevel gamma(require_field(config.gamma, "gamma"));
    report = classify_quantum(game, gamma, make_strategy(config.strategy[0]),
                              make_tolerances(config), make_grid(config));
  }

  const std::string body = report_json(report).dump(2) + "\n";
  std::cout << body;
  if (!config.out.empty()) {
    const fs::path dir = prepare_out_dir(config);
    write_file(dir / "classify.json", body);
  }
  return 0;
}

int cmd_sweep(const RunConfig& config) {
  const SweepSpec spec = require_field(config.gamma_sweep, "gamma_sweep");
  if (config.strategy.empty()) {
    throw ParameterError("missing required field 'strategy'");
  }
  if (spec.count == 0) {
    throw ParameterError("field 'gamma_sweep': count must be >= 1");
  }

  std::vector<EntanglementLevel> gammas;
  gammas.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    const double g =
        (spec.count == 1)
            ? spec.start
            : spec.start + (spec.end - spec.start) * static_cast<double>(i) /
                               static_cast<double>(spec.count - 1);
    gammas.emplace_back(g);
  }

  const GameMatrix game = make_game(config, false);
  const auto rows =
      sweep_gamma(game, make_strategy(config.strategy[0]), gammas,
                  make_tolerances(config), make_grid(config));

  const fs::path dir = prepare_out_dir(config);
  {
    std::ostringstream csv;
    write_sweep_csv(csv, rows);
    write_file(dir / "sweep.csv", csv.str());
    std::cout << "wrote " << (dir / "sweep.csv").string() << '\n';
  }
  if (wants_format(config, "svg")) {
    std::vector<double> xs, ys;
    for (const auto& [gamma, report] : rows) {
      xs.push_back(gamma.gamma());
      ys.push_back(report.strict_margin);
    }
    std::ostringstream svg;
    write_line_chart(svg, "strict margin vs gamma", "gamma", "strict margin",
                     xs, ys);
    write_file(dir / "sweep.svg", svg.str());
    std::cout << "wrote " << (dir / "sweep.svg").string() << '\n';
  }
  return 0;
}

int cmd_invade(const RunConfig& config) {
  const GameMatrix game = make_game(config, false);
  const EntanglementLevel gamma(require_field(config.gamma, "gamma"));
  const QuantumStrategy incumbent =
      make_strategy(require_field(config.incumbent, "incumbent"));
  const QuantumStrategy mutant =
      make_strategy(require_field(config.mutant, "mutant"));

  const Induced2x2 m = induced_matrix(game, gamma, incumbent, mutant);
  const InvasionTrace trace =
      simulate_invasion(m, config.epsilon0, config.dt, config.steps);

  std::ostringstream csv;
  write_invasion_csv(csv, trace);
  std::cout << csv.str();

  if (wants_format(config, "csv")) {
    const fs::path dir = prepare_out_dir(config);
    write_file(dir / "invade.csv", csv.str());
  }
  if (wants_format(config, "svg")) {
    const fs::path dir = prepare_out_dir(config);
    std::vector<double> xs(trace.epsilon_series.size());
    for (std::size_t k = 0; k < xs.size(); ++k) {
      xs[k] = static_cast<double>(k) * trace.dt;
    }
    std::ostringstream svg;
    write_line_chart(svg, "mutant fraction vs time", "time",
                     "mutant fraction", xs, trace.epsilon_series);
    write_file(dir / "invade.svg", svg.str());
  }
  return 0;
}

int cmd_entropy(const RunConfig& config) {
  if (config.mu.empty()) {
    throw ParameterError("missing required field 'mu'");
  }
  const double nats = evolutionary_entropy(config.mu);
  if (config.base2) {
    std::cout << "entropy=" << format_double(nats / std::numbers::ln2)
              << " unit=bits\n";
  } else {
    std::cout << "entropy=" << format_double(nats) << " unit=nats\n";
  }
  return 0;
}

void add_common_flags(CLI::App* cmd, CliOverrides& flags,
                      std::optional<std::string>& config_path) {
  cmd->add_option("--game", flags.game, "payoff constants r,s,t,u");
  cmd->add_option("--gap-tol", flags.gap_tol,
                  "gap below which a payoff difference counts as zero");
  cmd->add_option("--exclusion-radius", flags.exclusion_radius,
                  "distance identifying a probe with the candidate");
  cmd->add_option("--out", flags.out,
                  "output directory (fallback: QESS_OUT_DIR, then '.')");
  cmd->add_option("--format", flags.format,
                  "comma-separated subset of csv,json,svg");
  cmd->add_option("--config", config_path, "JSON config file");
}

void add_grid_flags(CLI::App* cmd, CliOverrides& flags) {
  cmd->add_option("--theta-points", flags.theta_points,
                  "probe count along theta");
  cmd->add_option("--phi-points", flags.phi_points, "probe count along phi");
  cmd->add_option("--refine-levels", flags.refinement_levels,
                  "refinement levels around the running argmax");
  cmd->add_option("--zoom-factor", flags.zoom_factor,
                  "box shrink factor per refinement level");
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{
      "qess: classical and quantum symmetric 2x2 games; payoffs, equilibrium "
      "and evolutionary-stability certification, invasion dynamics"};
  app.require_subcommand(1);

  CliOverrides flags;
  std::optional<std::string> config_path;

  CLI::App* payoff = app.add_subcommand(
      "payoff", "numeric and closed-form payoffs for one strategy profile");
  payoff->add_option("--gamma", flags.gamma, "entanglement (radians or pi/2, pi/4)");
  payoff->add_option("--strategy", flags.strategy,
                     "theta,phi; give once for both players or twice");
  payoff->add_flag("--closed", flags.closed,
                   "require the closed form (game must be constrained)");
  add_common_flags(payoff, flags, config_path);

  CLI::App* classify = app.add_subcommand(
      "classify", "NE / strict NE / ESS report for a candidate strategy");
  classify->add_option("--gamma", flags.gamma, "entanglement level");
  classify->add_option("--strategy", flags.strategy, "quantum candidate theta,phi");
  classify->add_option("--classical", flags.classical,
                       "classical candidate probability p");
  classify->add_option("--grid-points", flags.grid_points,
                       "probe count for the classical interval");
  add_grid_flags(classify, flags);
  add_common_flags(classify, flags, config_path);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "classification as a function of gamma, CSV plus optional SVG");
  sweep->add_option("--gamma-sweep", flags.gamma_sweep, "start,end,count");
  sweep->add_option("--strategy", flags.strategy, "quantum candidate theta,phi");
  add_grid_flags(sweep, flags);
  add_common_flags(sweep, flags, config_path);

  CLI::App* invade = app.add_subcommand(
      "invade", "replicator invasion trace for an incumbent/mutant pair");
  invade->add_option("--gamma", flags.gamma, "entanglement level");
  invade->add_option("--incumbent", flags.incumbent, "incumbent theta,phi");
  invade->add_option("--mutant", flags.mutant, "mutant theta,phi");
  invade->add_option("--epsilon0", flags.epsilon0, "initial mutant fraction");
  invade->add_option("--dt", flags.dt, "integrator step size");
  invade->add_option("--steps", flags.steps, "integrator step count");
  add_common_flags(invade, flags, config_path);

  CLI::App* reproduce = app.add_subcommand(
      "reproduce", "one-shot check of the headline results; exit 0 iff all match");
  reproduce->add_option("--grid-points", flags.grid_points,
                        "probe count for the classical interval");
  reproduce->add_option("--dt", flags.dt, "integrator step size");
  reproduce->add_option("--steps", flags.steps, "integrator step count");
  add_grid_flags(reproduce, flags);
  add_common_flags(reproduce, flags, config_path);

  CLI::App* entropy = app.add_subcommand(
      "entropy", "evolutionary entropy of payoff contributions");
  entropy->add_option("--mu", flags.mu, "comma-separated contributions");
  entropy->add_flag("--base2", flags.base2, "report bits instead of nats");
  add_common_flags(entropy, flags, config_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    const RunConfig config = resolve_config(flags, config_path);
    if (payoff->parsed()) return cmd_payoff(config);
    if (classify->parsed()) return cmd_classify(config);
    if (sweep->parsed()) return cmd_sweep(config);
    if (invade->parsed()) return cmd_invade(config);
    if (entropy->parsed()) return cmd_entropy(config);
    if (reproduce->parsed()) return run_reproduction(config, std::cout);
  } catch (const IoFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace qess

// Acceptance suite: runs every exit criterion at its stated tolerance and
// prints one pass/fail line per criterion. The path of the CLI binary is
// expected as argv[1] (used by the end-to-end criterion).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "qess/analytic.hpp"
#include "qess/dynamics.hpp"
#include "qess/equilibrium.hpp"
#include "qess/game.hpp"

using namespace qess;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

int g_failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", id, name,
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

const QuantumStrategy kStar{half_pi, quarter_pi};
const std::vector<double> kGammaList{0.05, 0.1, pi / 8.0, quarter_pi,
                                     3.0 * pi / 8.0, half_pi};

QuantumStrategy random_strategy(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> theta(0.0, pi);
  std::uniform_real_distribution<double> phi(0.0, half_pi);
  return {theta(rng), phi(rng)};
}

void criterion_1_oracle_equivalence() {
  const auto t0 = clock_type::now();
  const GameMatrix game = default_constrained_game();
  std::mt19937_64 rng(1001);
  std::uniform_real_distribution<double> gam(0.0, half_pi);

  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const EntanglementLevel gamma(gam(rng));
    const QuantumStrategy a = random_strategy(rng);
    const QuantumStrategy b = random_strategy(rng);
    worst = std::max(worst,
                     std::abs(quantum_payoff_closed(game, gamma, a, b) -
                              quantum_payoff_numeric(game, gamma, a, b).alice));
  }
  const double elapsed = seconds_since(t0);

  std::ostringstream detail;
  detail << "max |closed - statevector| = " << worst << " over 10^4 tuples, "
         << elapsed << " s";
  report(1, "oracle equivalence of the two payoff routes",
         worst <= 1e-10 && elapsed < 5.0, detail.str());
}

void criterion_2_classical_non_ess() {
  const GameMatrix game = default_constrained_game();
  const auto rep =
      classify_classical(game, MixedStrategy(0.5), Tolerances{}, 1001);

  const double expected = -(game.r() - game.t()) / 2.0;
  bool ok = rep.is_ne && !rep.is_ess && rep.ess_second_condition_margin &&
            std::abs(*rep.ess_second_condition_margin - expected) <= 1e-12;
  double witness_p = -1.0;
  if (const auto* w = std::get_if<MixedStrategy>(&rep.witness)) {
    witness_p = w->p();
    ok = ok && witness_p == 0.0;
  } else {
    ok = false;
  }

  std::ostringstream detail;
  detail << "NE=" << rep.is_ne << " ESS=" << rep.is_ess
         << " second-condition margin="
         << (rep.ess_second_condition_margin
                 ? *rep.ess_second_condition_margin
                 : std::nan(""))
         << " at p=" << witness_p;
  report(2, "classical p*=1/2 is a NE but not an ESS", ok, detail.str());
}

void criterion_3_quantum_gamma0_non_ess() {
  const auto rep =
      classify_quantum(default_constrained_game(), EntanglementLevel(0.0),
                       kStar, Tolerances{}, GridSpec{});
  const auto witness = std::get<QuantumStrategy>(rep.witness);
  const bool ok = rep.is_ne && !rep.is_strict_ne && !rep.is_ess &&
                  rep.ess_second_condition_margin &&
                  *rep.ess_second_condition_margin < 0.0 &&
                  witness.theta() <= 0.1;

  std::ostringstream detail;
  detail << "NE=" << rep.is_ne << " strict=" << rep.is_strict_ne
         << " ESS=" << rep.is_ess << " margin="
         << (rep.ess_second_condition_margin
                 ? *rep.ess_second_condition_margin
                 : std::nan(""))
         << " witness theta=" << witness.theta();
  report(3, "quantum s* at gamma=0 is a non-strict NE and not an ESS", ok,
         detail.str());
}

void criteria_4_and_5_entanglement_induced_ess() {
  const GameMatrix game = default_constrained_game();
  const Tolerances tol;
  const GridSpec grid;

  bool c4_ok = true;
  std::ostringstream c4_detail;
  double previous_margin = -1e300;

  bool c5_ok = true;
  double c5_worst_min = 1e300;

  // gamma=0 participates only in the nonnegativity check of criterion 5
  std::vector<double> gammas = kGammaList;
  gammas.insert(gammas.begin(), 0.0);

  for (const double g : gammas) {
    const EntanglementLevel gamma(g);
    const BestResponseScan scan = scan_best_response(game, gamma, kStar, grid);

    double closed_min_all = 1e300;
    double closed_min_outside = 1e300;
    for (const QuantumStrategy& probe : scan.probes) {
      const double gap = ne_gap_closed(game, gamma, probe);
      closed_min_all = std::min(closed_min_all, gap);
      const double dist = std::hypot(probe.theta() - kStar.theta(),
                                     probe.phi() - kStar.phi());
      if (dist >= tol.exclusion_radius()) {
        closed_min_outside = std::min(closed_min_outside, gap);
      }
    }
    c5_worst_min = std::min(c5_worst_min, closed_min_all);
    c5_ok = c5_ok && closed_min_all >= -1e-12;

    if (g == 0.0) continue;

    const auto rep = classify_quantum(game, gamma, kStar, tol, grid);
    const bool row_ok =
        rep.is_strict_ne && rep.is_ess &&
        std::abs(rep.strict_margin - closed_min_outside) <= 1e-9 &&
        rep.strict_margin > previous_margin;
    if (!row_ok) {
      c4_detail << " [gamma=" << g << " strict=" << rep.is_strict_ne
                << " ess=" << rep.is_ess << " margin=" << rep.strict_margin
                << " analytic=" << closed_min_outside << "]";
    }
    c4_ok = c4_ok && row_ok;
    previous_margin = rep.strict_margin;
  }

  std::ostringstream c4_summary;
  c4_summary << "6 gamma values strict+ESS, margins match the analytic grid "
                "minimum to 1e-9 and increase monotonically";
  if (!c4_ok) c4_summary << ";" << c4_detail.str();
  report(4, "entanglement turns s* into a strict NE and ESS", c4_ok,
         c4_summary.str());

  // payoff equality at the shared equilibrium value (r+t)/2
  const double target = (game.r() + game.t()) / 2.0;
  const double classical =
      classical_payoff(game, MixedStrategy(0.5), MixedStrategy(0.5));
  const double quantum =
      quantum_payoff_numeric(game, EntanglementLevel(0.0), kStar, kStar).alice;
  const bool pay_ok = std::abs(classical - target) <= 1e-12 &&
                      std::abs(quantum - target) <= 1e-12;
  c5_ok = c5_ok && pay_ok;

  std::ostringstream c5_detail;
  c5_detail << "min closed-form gap over probes = " << c5_worst_min
            << ", classical payoff " << classical << ", quantum payoff "
            << quantum << ", target " << target;
  report(5, "the NE persists for every gamma and pays (r+t)/2", c5_ok,
         c5_detail.str());
}

void criterion_6_classical_limit() {
  const GameMatrix game = default_constrained_game();
  const EntanglementLevel zero(0.0);
  std::mt19937_64 rng(6006);
  std::uniform_real_distribution<double> theta(0.0, pi);
  std::uniform_real_distribution<double> phi(0.0, half_pi);

  double worst_phi_dev = 0.0;
  for (int pair = 0; pair < 10; ++pair) {
    const double ta = theta(rng), tb = theta(rng);
    const double base =
        quantum_payoff_numeric(game, zero, {ta, 0.0}, {tb, 0.0}).alice;
    for (int i = 0; i < 100; ++i) {
      const double v =
          quantum_payoff_numeric(game, zero, {ta, phi(rng)}, {tb, phi(rng)})
              .alice;
      worst_phi_dev = std::max(worst_phi_dev, std::abs(v - base));
    }
  }

  double worst_embed_dev = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double ta = theta(rng), tb = theta(rng);
    const double quantum =
        quantum_payoff_numeric(game, zero, {ta, phi(rng)}, {tb, phi(rng)})
            .alice;
    const double classical = classical_payoff(game, classical_embedding(ta),
                                              classical_embedding(tb));
    worst_embed_dev = std::max(worst_embed_dev, std::abs(quantum - classical));
  }

  std::ostringstream detail;
  detail << "max phi dependence = " << worst_phi_dev
         << ", max deviation from the embedded classical payoff = "
         << worst_embed_dev;
  report(6, "at gamma=0 the quantum game reduces to the classical one",
         worst_phi_dev <= 1e-12 && worst_embed_dev <= 1e-12, detail.str());
}

void criterion_7_second_condition_audit() {
  const GameMatrix game = default_constrained_game();
  std::mt19937_64 rng(7007);
  std::uniform_real_distribution<double> gam(0.0, half_pi);

  double worst_kernel = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const EntanglementLevel gamma(gam(rng));
    const QuantumStrategy s = random_strategy(rng);
    const double kernel_diff =
        quantum_payoff_numeric(game, gamma, kStar, s).alice -
        quantum_payoff_numeric(game, gamma, s, s).alice;
    worst_kernel = std::max(
        worst_kernel, std::abs(ess_gap_closed(game, gamma, s) - kernel_diff));
  }

  // at gamma=0 the gap is -(1/2)(r-t)cos^2(theta), exactly the classical
  // second-condition gap under p = cos^2(theta/2)
  const double rt = game.r() - game.t();
  double worst_gamma0 = 0.0;
  bool signs_agree = true;
  for (int i = 0; i <= 180; ++i) {
    const double theta = (i == 180) ? pi : i * pi / 180.0;
    const double implemented =
        ess_gap_closed(game, EntanglementLevel(0.0), {theta, 0.2});
    const double ct = std::cos(theta);
    worst_gamma0 =
        std::max(worst_gamma0, std::abs(implemented - (-0.5 * rt * ct * ct)));
    // the variant with a doubled first-term coefficient is exactly twice the
    // implemented gap here, so the two sign patterns coincide at gamma=0
    const double doubled = implemented - 0.5 * rt * ct * ct;
    const auto sign = [](double v) { return (v > 1e-15) - (v < -1e-15); };
    signs_agree = signs_agree && sign(implemented) == sign(doubled);
  }

  // the doubled variant fails against the kernel: off by (r-t)/2 at the
  // gamma=0, theta=0 corner
  const double kernel_corner =
      quantum_payoff_numeric(game, EntanglementLevel(0.0), kStar, {0.0, 0.0})
          .alice -
      quantum_payoff_numeric(game, EntanglementLevel(0.0), {0.0, 0.0},
                             {0.0, 0.0})
          .alice;
  const double doubled_corner =
      ess_gap_closed(game, EntanglementLevel(0.0), {0.0, 0.0}) - 0.5 * rt;
  const double doubled_defect = std::abs(doubled_corner - kernel_corner);

  const bool ok = worst_kernel <= 1e-10 && worst_gamma0 <= 1e-12 &&
                  signs_agree && doubled_defect > 0.4;
  std::ostringstream detail;
  detail << "max |closed - kernel| = " << worst_kernel
         << ", max gamma=0 deviation from -(r-t)/2 cos^2 = " << worst_gamma0
         << ", doubled-coefficient variant misses the kernel by "
         << doubled_defect << ", gamma=0 sign patterns agree = "
         << signs_agree;
  report(7, "second-condition closed form audited against the kernel", ok,
         detail.str());
}

void criterion_8_invasion_dynamics() {
  const GameMatrix game = default_constrained_game();
  const QuantumStrategy mutant{0.0, 0.0};
  const double dt = 0.01;
  const std::size_t steps = 30000;

  const Induced2x2 entangled =
      induced_matrix(game, EntanglementLevel(half_pi), kStar, mutant);
  const auto t0 = clock_type::now();
  const InvasionTrace repelled = simulate_invasion(entangled, 0.1, dt, steps);
  const double repelled_s = seconds_since(t0);

  // measure the barrier by bisecting the simulated outcome; the analytic
  // rest point is the reference
  double lo = 0.01, hi = 0.99;
  for (int i = 0; i < 25; ++i) {
    const double mid = 0.5 * (lo + hi);
    const InvasionTrace probe = simulate_invasion(entangled, mid, dt, 5000);
    if (probe.epsilon_series.back() > mid) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const double measured = 0.5 * (lo + hi);

  const Induced2x2 flat =
      induced_matrix(game, EntanglementLevel(0.0), kStar, mutant);
  const auto t1 = clock_type::now();
  const InvasionTrace invaded = simulate_invasion(flat, 0.01, dt, steps);
  const double invaded_s = seconds_since(t1);

  const bool ok = repelled.verdict == InvasionVerdict::repelled &&
                  repelled.epsilon_series.back() < 1e-6 &&
                  std::abs(measured - 0.5) <= 1e-6 &&
                  invaded.verdict == InvasionVerdict::invaded &&
                  invaded.epsilon_series.back() > 1.0 - 1e-6 &&
                  repelled_s < 1.0 && invaded_s < 1.0;

  std::ostringstream detail;
  detail << "gamma=pi/2 final eps = " << repelled.epsilon_series.back()
         << " (" << repelled_s << " s), measured barrier = " << measured
         << ", gamma=0 final eps = " << invaded.epsilon_series.back() << " ("
         << invaded_s << " s)";
  report(8, "entanglement decides the invasion outcome", ok, detail.str());
}

void criterion_9_end_to_end(const std::string& cli_path) {
  namespace fs = std::filesystem;
  const fs::path outfile = fs::temp_directory_path() / "qess_reproduce.txt";

  const auto t0 = clock_type::now();
  const std::string command =
      "\"" + cli_path + "\" reproduce > \"" + outfile.string() + "\" 2>&1";
  const int status = std::system(command.c_str());
  const double elapsed = seconds_since(t0);
  const int exit_code =
      WIFEXITED(status) ? WEXITSTATUS(status) : -1;

  std::string output;
  {
    std::ifstream in(outfile);
    std::ostringstream os;
    os << in.rdbuf();
    output = os.str();
  }

  const bool ok = exit_code == 0 &&
                  output.find("RESULT: REPRODUCED 6/6") != std::string::npos &&
                  elapsed < 30.0;
  std::ostringstream detail;
  detail << "exit code " << exit_code << ", " << elapsed << " s";
  report(9, "the reproduce command replays every headline verdict", ok,
         detail.str());
}

}  // namespace

int main(int argc, char** argv) {
  criterion_1_oracle_equivalence();
  criterion_2_classical_non_ess();
  criterion_3_quantum_gamma0_non_ess();
  criteria_4_and_5_entanglement_induced_ess();
  criterion_6_classical_limit();
  criterion_7_second_condition_audit();
  criterion_8_invasion_dynamics();
  if (argc > 1) {
    criterion_9_end_to_end(argv[1]);
  } else {
    report(9, "the reproduce command replays every headline verdict", false,
           "CLI path missing: pass the qess binary as argv[1]");
  }

  if (g_failures == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}

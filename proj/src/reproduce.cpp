#include "qess/reproduce.hpp"

#include <ostream>
#include <string>

#include "qess/analytic.hpp"
#include "qess/dynamics.hpp"
#include "qess/emit.hpp"
#include "qess/equilibrium.hpp"
#include "qess/game.hpp"

namespace qess {

namespace {

const char* yesno(bool v) { return v ? "yes" : "no"; }

struct Tally {
  int passed = 0;
  int total = 0;

  std::string mark(bool ok) {
    ++total;
    if (ok) ++passed;
    return ok ? "ok" : "MISMATCH";
  }
};

}  // namespace

int run_reproduction(const RunConfig& config, std::ostream& os) {
  const GameMatrix game = validate_game(config.game[0], config.game[1],
                                        config.game[2], config.game[3], true);
  const Tolerances tol(config.gap_tol, config.exclusion_radius);
  const GridSpec grid{config.theta_points, config.phi_points,
                      config.refinement_levels, config.zoom_factor};
  const QuantumStrategy star(half_pi, quarter_pi);
  const QuantumStrategy mutant(0.0, 0.0);

  os << "game (r,s,t,u) = (" << format_double(game.r()) << ','
     << format_double(game.s()) << ',' << format_double(game.t()) << ','
     << format_double(game.u()) << ")  gap_tol=" << format_double(tol.gap_tol())
     << "  exclusion_radius=" << format_double(tol.exclusion_radius()) << "\n"
     << "candidate: classical p*=1/2, quantum s*=(pi/2,pi/4)\n\n";

  Tally tally;

  // classical mixed equilibrium: NE but not evolutionarily stable
  {
    const auto rep =
        classify_classical(game, MixedStrategy(0.5), tol, config.grid_points);
    const bool ok = rep.is_ne && !rep.is_ess;
    os << "[1] classical p*=1/2            expect NE=yes ESS=no"
       << "        -> NE=" << yesno(rep.is_ne) << " ESS=" << yesno(rep.is_ess)
       << "   " << tally.mark(ok) << '\n';
    os << "    min_ne_gap=" << format_double(rep.min_ne_gap);
    if (rep.ess_second_condition_margin) {
      os << "  second_condition_margin="
         << format_double(*rep.ess_second_condition_margin) << " at p="
         << format_double(std::get<MixedStrategy>(rep.witness).p());
    }
    os << '\n';
  }

  // the same candidate embedded in the quantum game, no entanglement:
  // still a NE, still not stable
  {
    const auto rep = classify_quantum(game, EntanglementLevel(0.0), star, tol,
                                      grid);
    const bool ok = rep.is_ne && !rep.is_strict_ne && !rep.is_ess;
    os << "[2] quantum s*, gamma=0         expect NE=yes strict=no ESS=no"
       << " -> NE=" << yesno(rep.is_ne) << " strict=" << yesno(rep.is_strict_ne)
       << " ESS=" << yesno(rep.is_ess) << "   " << tally.mark(ok) << '\n';
    os << "    min_ne_gap=" << format_double(rep.min_ne_gap);
    if (rep.ess_second_condition_margin) {
      const auto& w = std::get<QuantumStrategy>(rep.witness);
      os << "  second_condition_margin="
         << format_double(*rep.ess_second_condition_margin)
         << " at (theta,phi)=(" << format_double(w.theta()) << ','
         << format_double(w.phi()) << ')';
    }
    os << '\n';
  }

  // entanglement switches the same candidate to a strict NE, hence ESS
  for (const double gamma : {quarter_pi, half_pi}) {
    const auto rep =
        classify_quantum(game, EntanglementLevel(gamma), star, tol, grid);
    const bool ok = rep.is_ne && rep.is_strict_ne && rep.is_ess;
    os << '[' << (gamma == quarter_pi ? 3 : 4) << "] quantum s*, gamma="
       << (gamma == quarter_pi ? "pi/4" : "pi/2")
       << "      expect strict=yes ESS=yes"
       << "    -> NE=" << yesno(rep.is_ne) << " strict="
       << yesno(rep.is_strict_ne) << " ESS=" << yesno(rep.is_ess) << "   "
       << tally.mark(ok) << '\n';
    os << "    strict_margin=" << format_double(rep.strict_margin) << '\n';
  }

  // invasion demonstrations: the entangled incumbent repels the mutant the
  // unentangled one cannot
  {
    const auto m = induced_matrix(game, EntanglementLevel(half_pi), star,
                                  mutant);
    const auto trace = simulate_invasion(m, 0.1, config.dt, config.steps);
    const bool ok = trace.verdict == InvasionVerdict::repelled;
    os << "[5] invasion gamma=pi/2 eps0=0.1   expect repelled"
       << "           -> " << to_string(trace.verdict) << "   "
       << tally.mark(ok) << '\n';
    os << "    induced (a,b,c,d)=(" << format_double(m.a) << ','
       << format_double(m.b) << ',' << format_double(m.c) << ','
       << format_double(m.d) << ")  final_eps="
       << format_double(trace.epsilon_series.back());
    if (const auto barrier = invasion_threshold(m)) {
      os << "  barrier=" << format_double(*barrier);
    }
    os << '\n';
  }
  {
    const auto m =
        induced_matrix(game, EntanglementLevel(0.0), star, mutant);
    const auto trace = simulate_invasion(m, 0.01, config.dt, config.steps);
    const bool ok = trace.verdict == InvasionVerdict::invaded;
    os << "[6] invasion gamma=0    eps0=0.01  expect invaded"
       << "            -> " << to_string(trace.verdict) << "   "
       << tally.mark(ok) << '\n';
    os << "    induced (a,b,c,d)=(" << format_double(m.a) << ','
       << format_double(m.b) << ',' << format_double(m.c) << ','
       << format_double(m.d) << ")  final_eps="
       << format_double(trace.epsilon_series.back()) << '\n';
  }

  const bool reproduced = tally.passed == tally.total;
  os << "\nRESULT: " << (reproduced ? "REPRODUCED " : "MISMATCH ")
     << tally.passed << '/' << tally.total << '\n';
  return reproduced ? 0 : 1;
}

}  // namespace qess

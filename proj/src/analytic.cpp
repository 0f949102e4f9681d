#include "qess/analytic.hpp"

#include <cmath>

namespace qess {

namespace {

void require_constrained_game(const GameMatrix& game) {
  if (!game.constrained()) {
    throw ConstraintViolation(
        "closed form requires the constrained family (s=t, r=u, (r-t)>0)");
  }
}

}  // namespace

double quantum_payoff_closed(const GameMatrix& game, EntanglementLevel gamma,
                             QuantumStrategy alice, QuantumStrategy bob) {
  require_constrained_game(game);
  const double bracket =
      1.0 + std::cos(alice.theta()) * std::cos(bob.theta()) +
      std::sin(alice.theta()) * std::sin(bob.theta()) *
          std::sin(gamma.gamma()) * std::sin(alice.phi() + bob.phi());
  return 0.5 * (game.r() - game.t()) * bracket + game.t();
}

double ne_gap_closed(const GameMatrix& game, EntanglementLevel gamma,
                     QuantumStrategy s) {
  require_constrained_game(game);
  return 0.5 * (game.r() - game.t()) * std::sin(gamma.gamma()) *
         (1.0 - std::sin(s.phi() + quarter_pi) * std::sin(s.theta()));
}

double ess_gap_closed(const GameMatrix& game, EntanglementLevel gamma,
                      QuantumStrategy s) {
  require_constrained_game(game);
  const double rt = game.r() - game.t();
  const double ct = std::cos(s.theta());
  const double st = std::sin(s.theta());
  return -0.5 * rt * ct * ct +
         0.5 * rt * std::sin(gamma.gamma()) * st *
             (std::sin(s.phi() + quarter_pi) - st * std::sin(2.0 * s.phi()));
}

MixedStrategy classical_embedding(double theta) {
  if (!std::isfinite(theta) || theta < 0.0 || theta > pi) {
    throw RangeError("embedding angle theta must lie in [0,pi]");
  }
  const double c = std::cos(theta / 2.0);
  return MixedStrategy(c * c);
}

}  // namespace qess

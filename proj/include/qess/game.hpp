#pragma once

#include <cstddef>

#include "qess/types.hpp"

namespace qess {

// Validates the four payoff constants and returns the game. The constrained
// flag is set iff require_constrained was passed and the family conditions
// (s=t, r=u, r-t>0) hold; a required-but-failed condition throws
// ConstraintViolation naming the clause. NaN/infinite entries throw
// NonFiniteInput.
GameMatrix validate_game(double r, double s, double t, double u,
                         bool require_constrained);

// The canonical constrained instance (r,s,t,u) = (1,0,0,1): the smallest
// integer game in the family, so every derived number is auditable by hand.
GameMatrix default_constrained_game();

// Row player's expected payoff when she plays S1 with probability p against
// an opponent playing S1 with probability q:
//   r p q + s p (1-q) + t (1-p) q + u (1-p)(1-q)
// The game is symmetric, so the column player's payoff is the same function
// with the arguments swapped.
double classical_payoff(const GameMatrix& game, MixedStrategy p,
                        MixedStrategy q);

// Nash gap P(p*,p*) - P(p,p*), evaluated directly from the payoff function.
double classical_ne_gap(const GameMatrix& game, MixedStrategy p_star,
                        MixedStrategy p);

// Second-condition gap P(p*,p) - P(p,p), evaluated directly.
double classical_ess_gap(const GameMatrix& game, MixedStrategy p_star,
                         MixedStrategy p);

// Closed form of the Nash gap for the constrained family:
//   (p* - p)(r - t)(2 p* - 1).
// Throws ConstraintViolation if the game is not constrained.
double classical_ne_gap_closed(const GameMatrix& game, MixedStrategy p_star,
                               MixedStrategy p);

// Closed form of the second-condition gap for the constrained family at the
// mixed equilibrium p* = 1/2:
//   (r - t) { 2 p (1-p) - 1/2 }.
double classical_ess_gap_closed(const GameMatrix& game, MixedStrategy p);

// Certifies NE / strict NE / ESS for the candidate p* by evaluating the Nash
// gap on a uniform grid of grid_points probabilities over [0,1] (endpoints
// included). Strictness requires a positive gap for every probe at distance
// >= exclusion_radius from the candidate; when the candidate is a non-strict
// NE, the second condition P(p*,p) > P(p,p) is checked over all probes whose
// Nash gap is within gap_tol of zero. Ties are broken toward the smaller p.
ClassificationReport classify_classical(const GameMatrix& game,
                                        MixedStrategy p_star,
                                        const Tolerances& tol,
                                        std::size_t grid_points);

}  // namespace qess

#pragma once

#include "qess/types.hpp"

namespace qess {

// Closed-form payoff for the constrained family (s=t, r=u, r-t>0):
//   (1/2)(r-t){ 1 + cos(tA) cos(tB) + sin(tA) sin(tB) sin(gamma)
//               sin(pA + pB) } + t
// Serves as the independent analytic route against the state-vector kernel.
// Throws ConstraintViolation if the game is not constrained.
double quantum_payoff_closed(const GameMatrix& game, EntanglementLevel gamma,
                             QuantumStrategy alice, QuantumStrategy bob);

// Nash gap of the candidate s* = (pi/2, pi/4) against a deviation s:
//   P(s*,s*) - P(s,s*) = (1/2)(r-t) sin(gamma) { 1 - sin(phi+pi/4) sin(theta) }
// Nonnegative on the whole strategy space; zero only at s* once gamma > 0.
double ne_gap_closed(const GameMatrix& game, EntanglementLevel gamma,
                     QuantumStrategy s);

// Second-condition gap of s* = (pi/2, pi/4):
//   P(s*,s) - P(s,s) = -(1/2)(r-t) cos^2(theta)
//                      + (1/2)(r-t) sin(gamma) sin(theta)
//                        { sin(phi+pi/4) - sin(theta) sin(2 phi) }
// The first-term coefficient (r-t)/2 is fixed jointly by the state-vector
// kernel and by the classical limit under p = cos^2(theta/2); the
// correctness contract is agreement with the kernel difference
// P(s*,s) - P(s,s) to within 1e-10.
double ess_gap_closed(const GameMatrix& game, EntanglementLevel gamma,
                      QuantumStrategy s);

// The map p = cos^2(theta/2) identifying gamma=0 strategies with classical
// mixed strategies. Throws RangeError outside [0,pi].
MixedStrategy classical_embedding(double theta);

}  // namespace qess

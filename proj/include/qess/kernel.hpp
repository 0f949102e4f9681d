#pragma once

#include <array>
#include <complex>

#include "qess/types.hpp"

namespace qess {

using complex_t = std::complex<double>;

// 2x2 complex operator, row-major.
struct Operator2 {
  std::array<complex_t, 4> m{};

  complex_t& operator()(int row, int col) { return m[2 * row + col]; }
  const complex_t& operator()(int row, int col) const {
    return m[2 * row + col];
  }
};

// 4x4 complex operator on the two-qubit space, row-major.
struct Operator4 {
  std::array<complex_t, 16> m{};

  complex_t& operator()(int row, int col) { return m[4 * row + col]; }
  const complex_t& operator()(int row, int col) const {
    return m[4 * row + col];
  }
};

// Amplitudes over the ordered basis (|S1 S1>, |S1 S2>, |S2 S1>, |S2 S2>).
struct TwoQubitState {
  std::array<complex_t, 4> amplitudes{};

  double norm_squared() const;
};

struct PayoffPair {
  double alice = 0.0;
  double bob = 0.0;
};

// One-qubit strategy unitary
//   [ e^{i phi} cos(theta/2)      sin(theta/2)           ]
//   [ -sin(theta/2)               e^{-i phi} cos(theta/2) ]
Operator2 strategy_unitary(QuantumStrategy s);

// Entangling operator J = cos(gamma/2) I(x)I + i sin(gamma/2) X(x)X, where X
// is the bit flip on the {|S1>, |S2>} basis. J|S1 S1> =
// cos(gamma/2)|S1 S1> + i sin(gamma/2)|S2 S2>; gamma=0 gives the identity.
Operator4 entangling_operator(EntanglementLevel gamma);

// Adjoint of the entangling operator, applied before readout.
Operator4 disentangling_operator(EntanglementLevel gamma);

Operator4 kron(const Operator2& a, const Operator2& b);
Operator4 adjoint(const Operator4& op);
TwoQubitState apply(const Operator4& op, const TwoQubitState& state);

// max_ij |(U'U - I)_ij|; zero for exactly unitary operators.
double unitarity_defect(const Operator2& op);
double unitarity_defect(const Operator4& op);

// |psi> = J' (U_A (x) U_B) J |S1 S1>. Throws NormalizationError if the
// resulting norm deviates from 1 by more than 1e-9 (internal defect).
TwoQubitState final_state(EntanglementLevel gamma, QuantumStrategy alice,
                          QuantumStrategy bob);

// Projection payoffs of the final state:
//   P_A = r|f00|^2 + s|f01|^2 + t|f10|^2 + u|f11|^2,
// and P_B the same with s and t exchanged. Works for any valid game; the
// constrained family is not required.
PayoffPair quantum_payoff_numeric(const GameMatrix& game,
                                  EntanglementLevel gamma,
                                  QuantumStrategy alice, QuantumStrategy bob);

}  // namespace qess

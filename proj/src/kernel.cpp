#include "qess/kernel.hpp"

#include <cmath>

namespace qess {

double TwoQubitState::norm_squared() const {
  double n = 0.0;
  for (const complex_t& a : amplitudes) n += std::norm(a);
  return n;
}

Operator2 strategy_unitary(QuantumStrategy s) {
  const double c = std::cos(s.theta() / 2.0);
  const double sn = std::sin(s.theta() / 2.0);
  const complex_t phase = std::polar(1.0, s.phi());

  Operator2 u;
  u(0, 0) = phase * c;
  u(0, 1) = sn;
  u(1, 0) = -sn;
  u(1, 1) = std::conj(phase) * c;
  return u;
}

Operator4 entangling_operator(EntanglementLevel gamma) {
  const double c = std::cos(gamma.gamma() / 2.0);
  const complex_t is{0.0, std::sin(gamma.gamma() / 2.0)};

  // cos(g/2) on the diagonal, i sin(g/2) on the anti-diagonal (X(x)X swaps
  // |S1 S1> <-> |S2 S2> and |S1 S2> <-> |S2 S1>).
  Operator4 j;
  j(0, 0) = c;
  j(1, 1) = c;
  j(2, 2) = c;
  j(3, 3) = c;
  j(0, 3) = is;
  j(1, 2) = is;
  j(2, 1) = is;
  j(3, 0) = is;
  return j;
}

Operator4 disentangling_operator(EntanglementLevel gamma) {
  return adjoint(entangling_operator(gamma));
}

Operator4 kron(const Operator2& a, const Operator2& b) {
  Operator4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

Operator4 adjoint(const Operator4& op) {
  Operator4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = std::conj(op(j, i));
  return out;
}

TwoQubitState apply(const Operator4& op, const TwoQubitState& state) {
  TwoQubitState out;
  for (int i = 0; i < 4; ++i) {
    complex_t acc{0.0, 0.0};
    for (int j = 0; j < 4; ++j) acc += op(i, j) * state.amplitudes[j];
    out.amplitudes[i] = acc;
  }
  return out;
}

namespace {

template <typename Op, int N>
double defect(const Op& op) {
  double worst = 0.0;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      complex_t acc{0.0, 0.0};
      for (int k = 0; k < N; ++k) acc += std::conj(op(k, i)) * op(k, j);
      if (i == j) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

}  // namespace

double unitarity_defect(const Operator2& op) { return defect<Operator2, 2>(op); }
double unitarity_defect(const Operator4& op) { return defect<Operator4, 4>(op); }

TwoQubitState final_state(EntanglementLevel gamma, QuantumStrategy alice,
                          QuantumStrategy bob) {
  TwoQubitState state;
  state.amplitudes[0] = 1.0;  // |S1 S1>

  state = apply(entangling_operator(gamma), state);
  state = apply(kron(strategy_unitary(alice), strategy_unitary(bob)), state);
  state = apply(disentangling_operator(gamma), state);

  if (std::abs(state.norm_squared() - 1.0) > 1e-9) {
    throw NormalizationError("final state lost unit norm");
  }
  return state;
}

PayoffPair quantum_payoff_numeric(const GameMatrix& game,
                                  EntanglementLevel gamma,
                                  QuantumStrategy alice, QuantumStrategy bob) {
  const TwoQubitState f = final_state(gamma, alice, bob);
  const double p00 = std::norm(f.amplitudes[0]);
  const double p01 = std::norm(f.amplitudes[1]);
  const double p10 = std::norm(f.amplitudes[2]);
  const double p11 = std::norm(f.amplitudes[3]);

  PayoffPair out;
  out.alice = game.r() * p00 + game.s() * p01 + game.t() * p10 + game.u() * p11;
  out.bob = game.r() * p00 + game.t() * p01 + game.s() * p10 + game.u() * p11;
  return out;
}

}  // namespace qess

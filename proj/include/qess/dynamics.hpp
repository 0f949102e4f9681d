#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qess/kernel.hpp"

namespace qess {

// Pairwise payoffs of the symmetric two-strategy contest induced by an
// incumbent and a mutant strategy:
//   a = P(inc,inc), b = P(inc,mut), c = P(mut,inc), d = P(mut,mut).
struct Induced2x2 {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  std::string incumbent_label = "incumbent";
  std::string mutant_label = "mutant";
};

enum class InvasionVerdict { repelled, invaded, bistable_threshold, neutral };

const char* to_string(InvasionVerdict v);

// Time series of the mutant population fraction under replicator dynamics.
// boundary_start flags traces that began exactly on a simplex corner
// (epsilon0 in {0,1}), which the dynamics never leave.
struct InvasionTrace {
  std::vector<double> epsilon_series;  // length steps + 1
  double dt = 0.0;
  std::size_t steps = 0;
  InvasionVerdict verdict = InvasionVerdict::neutral;
  bool boundary_start = false;
  Induced2x2 matrix;
};

// Evaluates the four pairwise payoffs through the state-vector kernel.
Induced2x2 induced_matrix(const GameMatrix& game, EntanglementLevel gamma,
                          QuantumStrategy incumbent, QuantumStrategy mutant);

// Integrates d(eps)/dt = eps (1-eps) [W_mut(eps) - W_inc(eps)] with
// W_inc(eps) = a(1-eps) + b eps and W_mut(eps) = c(1-eps) + d eps, by
// fixed-step classical Runge-Kutta; eps is clamped to [0,1] after each step.
// Verdict: repelled if the final eps < 1e-6, invaded if it exceeds 1 - 1e-6,
// neutral if |d(eps)/dt| stayed below 1e-12 throughout, bistable_threshold
// otherwise. Throws ParameterError on epsilon0 outside [0,1], dt <= 0 or
// steps == 0.
InvasionTrace simulate_invasion(const Induced2x2& m, double epsilon0,
                                double dt, std::size_t steps);

// Interior rest point eps* = (a-c) / ((a-c) + (d-b)) of the replicator
// field, returned only when the dynamics are bistable (a > c and d > b) so
// that eps* is a genuine invasion barrier; nullopt otherwise.
std::optional<double> invasion_threshold(const Induced2x2& m);

// Evolutionary entropy -sum_i mu_i ln(mu_i) in nats, with 0 ln 0 = 0. The
// contributions must be nonnegative (NegativeContribution) and are expected
// to sum to 1 within 1e-9; otherwise they are normalized and a warning is
// written to stderr.
double evolutionary_entropy(std::span<const double> contributions);

}  // namespace qess

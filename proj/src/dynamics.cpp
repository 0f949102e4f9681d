#include "qess/dynamics.hpp"

#include <charconv>
#include <cmath>
#include <iostream>

namespace qess {

const char* to_string(InvasionVerdict v) {
  switch (v) {
    case InvasionVerdict::repelled:
      return "repelled";
    case InvasionVerdict::invaded:
      return "invaded";
    case InvasionVerdict::bistable_threshold:
      return "bistable-threshold";
    case InvasionVerdict::neutral:
      return "neutral";
  }
  return "unknown";
}

namespace {

std::string angle_string(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string strategy_label(QuantumStrategy s) {
  return "(theta=" + angle_string(s.theta()) + ",phi=" +
         angle_string(s.phi()) + ")";
}

}  // namespace

Induced2x2 induced_matrix(const GameMatrix& game, EntanglementLevel gamma,
                          QuantumStrategy incumbent, QuantumStrategy mutant) {
  Induced2x2 m;
  m.a = quantum_payoff_numeric(game, gamma, incumbent, incumbent).alice;
  m.b = quantum_payoff_numeric(game, gamma, incumbent, mutant).alice;
  m.c = quantum_payoff_numeric(game, gamma, mutant, incumbent).alice;
  m.d = quantum_payoff_numeric(game, gamma, mutant, mutant).alice;
  m.incumbent_label = strategy_label(incumbent);
  m.mutant_label = strategy_label(mutant);
  return m;
}

InvasionTrace simulate_invasion(const Induced2x2& m, double epsilon0,
                                double dt, std::size_t steps) {
  if (!(std::isfinite(m.a) && std::isfinite(m.b) && std::isfinite(m.c) &&
        std::isfinite(m.d))) {
    throw ParameterError("induced payoff matrix must be finite");
  }
  if (!std::isfinite(epsilon0) || epsilon0 < 0.0 || epsilon0 > 1.0) {
    throw ParameterError("epsilon0 must lie in [0,1]");
  }
  if (!std::isfinite(dt) || dt <= 0.0) {
    throw ParameterError("dt must be a finite real > 0");
  }
  if (steps < 1) {
    throw ParameterError("steps must be >= 1");
  }

  // Replicator field for the mutant share: selection is proportional to the
  // payoff advantage over the incumbent.
  const auto field = [&m](double e) {
    const double w_inc = m.a * (1.0 - e) + m.b * e;
    const double w_mut = m.c * (1.0 - e) + m.d * e;
    return e * (1.0 - e) * (w_mut - w_inc);
  };

  InvasionTrace trace;
  trace.dt = dt;
  trace.steps = steps;
  trace.matrix = m;
  trace.boundary_start = (epsilon0 == 0.0 || epsilon0 == 1.0);
  trace.epsilon_series.reserve(steps + 1);
  trace.epsilon_series.push_back(epsilon0);

  double e = epsilon0;
  double max_abs_rate = std::abs(field(e));
  for (std::size_t k = 0; k < steps; ++k) {
    const double k1 = field(e);
    const double k2 = field(e + 0.5 * dt * k1);
    const double k3 = field(e + 0.5 * dt * k2);
    const double k4 = field(e + dt * k3);
    e += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    e = std::clamp(e, 0.0, 1.0);
    trace.epsilon_series.push_back(e);
    max_abs_rate = std::max(max_abs_rate, std::abs(field(e)));
  }

  const double final_eps = trace.epsilon_series.back();
  if (final_eps < 1e-6) {
    trace.verdict = InvasionVerdict::repelled;
  } else if (final_eps > 1.0 - 1e-6) {
    trace.verdict = InvasionVerdict::invaded;
  } else if (max_abs_rate < 1e-12) {
    trace.verdict = InvasionVerdict::neutral;
  } else {
    trace.verdict = InvasionVerdict::bistable_threshold;
  }
  return trace;
}

std::optional<double> invasion_threshold(const Induced2x2& m) {
  const double incumbent_edge = m.a - m.c;  // advantage near eps = 0
  const double mutant_edge = m.d - m.b;     // advantage near eps = 1
  if (!(incumbent_edge > 0.0 && mutant_edge > 0.0)) return std::nullopt;
  const double eps = incumbent_edge / (incumbent_edge + mutant_edge);
  if (!(eps > 0.0 && eps < 1.0)) return std::nullopt;
  return eps;
}

double evolutionary_entropy(std::span<const double> contributions) {
  double sum = 0.0;
  for (const double mu : contributions) {
    if (!std::isfinite(mu)) {
      throw ParameterError("entropy contributions must be finite");
    }
    if (mu < 0.0) {
      throw NegativeContribution("entropy contributions must be >= 0");
    }
    sum += mu;
  }
  if (sum <= 0.0) {
    throw ParameterError("entropy contributions must not all be zero");
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    std::cerr << "warning: entropy contributions sum to " << sum
              << "; normalizing\n";
  }

  double entropy = 0.0;
  for (const double mu : contributions) {
    const double p = mu / sum;
    if (p > 0.0) entropy -= p * std::log(p);
  }
  return entropy;
}

}  // namespace qess

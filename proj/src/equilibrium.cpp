#include "qess/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qess {

void GridSpec::validate() const {
  if (theta_points < 3 || phi_points < 3) {
    throw ParameterError("grid needs at least 3 points per axis");
  }
  if (!std::isfinite(zoom_factor) || zoom_factor <= 1.0) {
    throw ParameterError("zoom_factor must be a finite real > 1");
  }
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Box {
  double theta_lo, theta_hi, phi_lo, phi_hi;
};

double axis_value(double lo, double hi, std::size_t i, std::size_t n) {
  if (i == 0) return lo;
  if (i + 1 == n) return hi;
  const double v =
      lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return std::clamp(v, lo, hi);
}

void append_level_probes(std::vector<QuantumStrategy>& probes, const Box& box,
                         const GridSpec& grid) {
  for (std::size_t i = 0; i < grid.theta_points; ++i) {
    const double theta = axis_value(box.theta_lo, box.theta_hi, i,
                                    grid.theta_points);
    for (std::size_t j = 0; j < grid.phi_points; ++j) {
      probes.emplace_back(theta,
                          axis_value(box.phi_lo, box.phi_hi, j,
                                     grid.phi_points));
    }
  }
}

// Recenters the box around `center` after shrinking each side by `zoom`,
// shifting as needed to stay inside [0,pi] x [0,pi/2] at full width.
Box shrink_around(const Box& box, QuantumStrategy center, double zoom) {
  const double tw = (box.theta_hi - box.theta_lo) / zoom;
  const double pw = (box.phi_hi - box.phi_lo) / zoom;
  const double tlo = std::clamp(center.theta() - tw / 2.0, 0.0, pi - tw);
  const double plo = std::clamp(center.phi() - pw / 2.0, 0.0, half_pi - pw);
  return {tlo, tlo + tw, plo, plo + pw};
}

// Fills values[first..last) with P(probes[i], candidate). The parallel path
// writes exactly the same per-element values as the serial one; every
// reduction over them happens sequentially afterwards.
void evaluate_probe_payoffs(const GameMatrix& game, EntanglementLevel gamma,
                            QuantumStrategy candidate,
                            const std::vector<QuantumStrategy>& probes,
                            std::vector<double>& values, std::size_t first,
                            std::size_t last, Execution exec) {
  const auto lo = static_cast<std::ptrdiff_t>(first);
  const auto hi = static_cast<std::ptrdiff_t>(last);
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = lo; i < hi; ++i) {
      values[static_cast<std::size_t>(i)] =
          quantum_payoff_numeric(game, gamma,
                                 probes[static_cast<std::size_t>(i)],
                                 candidate)
              .alice;
    }
  } else {
    for (std::ptrdiff_t i = lo; i < hi; ++i) {
      values[static_cast<std::size_t>(i)] =
          quantum_payoff_numeric(game, gamma,
                                 probes[static_cast<std::size_t>(i)],
                                 candidate)
              .alice;
    }
  }
}

bool lex_less(QuantumStrategy a, QuantumStrategy b) {
  if (a.theta() != b.theta()) return a.theta() < b.theta();
  return a.phi() < b.phi();
}

// Larger value wins; exact ties go to the lexicographically smaller probe.
bool better_max(double v, QuantumStrategy s, double best_v,
                QuantumStrategy best_s) {
  if (v != best_v) return v > best_v;
  return lex_less(s, best_s);
}

// Smaller value wins; exact ties go to the lexicographically smaller probe.
bool better_min(double v, QuantumStrategy s, double best_v,
                QuantumStrategy best_s) {
  if (v != best_v) return v < best_v;
  return lex_less(s, best_s);
}

double probe_distance(QuantumStrategy a, QuantumStrategy b) {
  return std::hypot(a.theta() - b.theta(), a.phi() - b.phi());
}

}  // namespace

BestResponseScan scan_best_response(const GameMatrix& game,
                                    EntanglementLevel gamma,
                                    QuantumStrategy candidate,
                                    const GridSpec& grid, Execution exec) {
  grid.validate();

  BestResponseScan scan;
  scan.candidate_payoff =
      quantum_payoff_numeric(game, gamma, candidate, candidate).alice;

  const std::size_t per_level = grid.theta_points * grid.phi_points;
  scan.probes.reserve(per_level * (grid.refinement_levels + 1));

  Box box{0.0, pi, 0.0, half_pi};
  bool have_best = false;
  for (std::size_t level = 0; level <= grid.refinement_levels; ++level) {
    const std::size_t first = scan.probes.size();
    append_level_probes(scan.probes, box, grid);
    scan.probe_payoff.resize(scan.probes.size());
    evaluate_probe_payoffs(game, gamma, candidate, scan.probes,
                           scan.probe_payoff, first, scan.probes.size(), exec);

    for (std::size_t i = first; i < scan.probes.size(); ++i) {
      if (!have_best ||
          better_max(scan.probe_payoff[i], scan.probes[i],
                     scan.probe_payoff[scan.best_index],
                     scan.probes[scan.best_index])) {
        scan.best_index = i;
        have_best = true;
      }
    }
    if (level < grid.refinement_levels) {
      box = shrink_around(box, scan.probes[scan.best_index], grid.zoom_factor);
    }
  }
  return scan;
}

std::pair<double, QuantumStrategy> best_response_gap(const GameMatrix& game,
                                                     EntanglementLevel gamma,
                                                     QuantumStrategy candidate,
                                                     const GridSpec& grid,
                                                     Execution exec) {
  const BestResponseScan scan =
      scan_best_response(game, gamma, candidate, grid, exec);
  return {scan.probe_payoff[scan.best_index] - scan.candidate_payoff,
          scan.probes[scan.best_index]};
}

ClassificationReport classify_quantum(const GameMatrix& game,
                                      EntanglementLevel gamma,
                                      QuantumStrategy candidate,
                                      const Tolerances& tol,
                                      const GridSpec& grid, Execution exec) {
  const BestResponseScan scan =
      scan_best_response(game, gamma, candidate, grid, exec);
  const std::size_t n = scan.probes.size();

  ClassificationReport report;
  report.probes_evaluated = n;

  const double g = scan.probe_payoff[scan.best_index] - scan.candidate_payoff;
  report.min_ne_gap = -g;
  report.is_ne = g <= tol.gap_tol();

  // Nash-gap minimum over probes outside the exclusion ball.
  double strict = kInf;
  std::size_t strict_idx = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (probe_distance(scan.probes[i], candidate) < tol.exclusion_radius()) {
      continue;
    }
    const double gap = scan.candidate_payoff - scan.probe_payoff[i];
    if (strict_idx == n ||
        better_min(gap, scan.probes[i], strict, scan.probes[strict_idx])) {
      strict = gap;
      strict_idx = i;
    }
  }
  report.strict_margin = (strict_idx == n) ? kInf : strict;
  report.is_strict_ne =
      report.is_ne && strict_idx != n && strict > tol.gap_tol();

  if (!report.is_ne) {
    report.witness = scan.probes[scan.best_index];
    return report;
  }
  if (report.is_strict_ne) {
    report.is_ess = true;  // strict NE satisfies the first ESS condition
    report.witness = scan.probes[strict_idx];
    return report;
  }

  // Second condition over the tied best responses outside the exclusion
  // ball: the candidate must strictly beat each of them in the contest
  // against that response.
  std::vector<std::size_t> tied;
  for (std::size_t i = 0; i < n; ++i) {
    if (probe_distance(scan.probes[i], candidate) < tol.exclusion_radius()) {
      continue;
    }
    if (std::abs(scan.probe_payoff[i] - scan.candidate_payoff) <=
        tol.gap_tol()) {
      tied.push_back(i);
    }
  }
  report.alt_best_responses = tied.size();
  if (tied.empty()) {
    // Vacuously stable on the probe set.
    report.is_ess = true;
    report.witness = (strict_idx == n) ? candidate : scan.probes[strict_idx];
    return report;
  }

  std::vector<double> second_gap(tied.size());
  const auto m = static_cast<std::ptrdiff_t>(tied.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < m; ++k) {
      const QuantumStrategy s = scan.probes[tied[static_cast<std::size_t>(k)]];
      second_gap[static_cast<std::size_t>(k)] =
          quantum_payoff_numeric(game, gamma, candidate, s).alice -
          quantum_payoff_numeric(game, gamma, s, s).alice;
    }
  } else {
    for (std::ptrdiff_t k = 0; k < m; ++k) {
      const QuantumStrategy s = scan.probes[tied[static_cast<std::size_t>(k)]];
      second_gap[static_cast<std::size_t>(k)] =
          quantum_payoff_numeric(game, gamma, candidate, s).alice -
          quantum_payoff_numeric(game, gamma, s, s).alice;
    }
  }

  double margin = kInf;
  std::size_t margin_k = 0;
  for (std::size_t k = 0; k < tied.size(); ++k) {
    if (k == 0 || better_min(second_gap[k], scan.probes[tied[k]], margin,
                             scan.probes[tied[margin_k]])) {
      margin = second_gap[k];
      margin_k = k;
    }
  }
  report.ess_second_condition_margin = margin;
  report.is_ess = margin > tol.gap_tol();
  report.witness = scan.probes[tied[margin_k]];
  return report;
}

std::vector<std::pair<EntanglementLevel, ClassificationReport>> sweep_gamma(
    const GameMatrix& game, QuantumStrategy candidate,
    const std::vector<EntanglementLevel>& gamma_values, const Tolerances& tol,
    const GridSpec& grid, Execution exec) {
  if (gamma_values.empty()) {
    throw EmptySweep("gamma sweep requires at least one value");
  }
  for (std::size_t i = 1; i < gamma_values.size(); ++i) {
    if (!(gamma_values[i - 1].gamma() < gamma_values[i].gamma())) {
      throw ParameterError("gamma sweep values must be strictly increasing");
    }
  }

  std::vector<std::pair<EntanglementLevel, ClassificationReport>> out;
  out.reserve(gamma_values.size());
  for (const EntanglementLevel gamma : gamma_values) {
    out.emplace_back(gamma,
                     classify_quantum(game, gamma, candidate, tol, grid, exec));
  }
  return out;
}

}  // namespace qess

#include "qess/game.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace qess {

GameMatrix validate_game(double r, double s, double t, double u,
                         bool require_constrained) {
  return {r, s, t, u, require_constrained};
}

GameMatrix default_constrained_game() { return {1.0, 0.0, 0.0, 1.0, true}; }

double classical_payoff(const GameMatrix& game, MixedStrategy p,
                        MixedStrategy q) {
  const double pp = p.p();
  const double qq = q.p();
  return game.r() * pp * qq + game.s() * pp * (1.0 - qq) +
         game.t() * (1.0 - pp) * qq + game.u() * (1.0 - pp) * (1.0 - qq);
}

double classical_ne_gap(const GameMatrix& game, MixedStrategy p_star,
                        MixedStrategy p) {
  return classical_payoff(game, p_star, p_star) -
         classical_payoff(game, p, p_star);
}

double classical_ess_gap(const GameMatrix& game, MixedStrategy p_star,
                         MixedStrategy p) {
  return classical_payoff(game, p_star, p) - classical_payoff(game, p, p);
}

namespace {

void require_constrained_game(const GameMatrix& game) {
  if (!game.constrained()) {
    throw ConstraintViolation(
        "closed form requires the constrained family (s=t, r=u, (r-t)>0)");
  }
}

}  // namespace

double classical_ne_gap_closed(const GameMatrix& game, MixedStrategy p_star,
                               MixedStrategy p) {
  require_constrained_game(game);
  return (p_star.p() - p.p()) * (game.r() - game.t()) *
         (2.0 * p_star.p() - 1.0);
}

double classical_ess_gap_closed(const GameMatrix& game, MixedStrategy p) {
  require_constrained_game(game);
  return (game.r() - game.t()) * (2.0 * p.p() * (1.0 - p.p()) - 0.5);
}

ClassificationReport classify_classical(const GameMatrix& game,
                                        MixedStrategy p_star,
                                        const Tolerances& tol,
                                        std::size_t grid_points) {
  if (grid_points < 3) {
    throw ParameterError("classification grid needs at least 3 points");
  }

  const std::size_t n = grid_points;
  std::vector<double> probes(n);
  std::vector<double> ne_gap(n);
  for (std::size_t i = 0; i < n; ++i) {
    probes[i] =
        (i + 1 == n) ? 1.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    ne_gap[i] = classical_ne_gap(game, p_star, MixedStrategy(probes[i]));
  }

  ClassificationReport report;
  report.probes_evaluated = n;

  constexpr double inf = std::numeric_limits<double>::infinity();

  // Grid minimum of the Nash gap; ties go to the smaller probe.
  double min_gap = inf;
  std::size_t min_idx = 0;
  double strict = inf;
  std::size_t strict_idx = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (ne_gap[i] < min_gap) {
      min_gap = ne_gap[i];
      min_idx = i;
    }
    if (std::abs(probes[i] - p_star.p()) >= tol.exclusion_radius() &&
        ne_gap[i] < strict) {
      strict = ne_gap[i];
      strict_idx = i;
    }
  }
  report.min_ne_gap = min_gap;
  report.is_ne = min_gap >= -tol.gap_tol();
  report.strict_margin = (strict_idx == n) ? inf : strict;
  report.is_strict_ne =
      report.is_ne && strict_idx != n && strict > tol.gap_tol();

  if (!report.is_ne) {
    report.witness = MixedStrategy(probes[min_idx]);
    return report;
  }
  if (report.is_strict_ne) {
    report.is_ess = true;  // a strict NE is an ESS by the first condition
    report.witness = MixedStrategy(probes[strict_idx]);
    return report;
  }

  // Second condition over the tied best responses outside the exclusion
  // ball: p* must beat every such probe in the contest against it.
  double margin = inf;
  std::size_t margin_idx = n;
  std::size_t tied = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(probes[i] - p_star.p()) < tol.exclusion_radius()) continue;
    if (std::abs(ne_gap[i]) > tol.gap_tol()) continue;
    ++tied;
    const double e = classical_ess_gap(game, p_star, MixedStrategy(probes[i]));
    if (e < margin) {
      margin = e;
      margin_idx = i;
    }
  }
  report.alt_best_responses = tied;
  if (tied == 0) {
    // No alternative best response on the grid; the second condition is
    // vacuously satisfied.
    report.is_ess = true;
    report.witness = (strict_idx == n) ? p_star : MixedStrategy(probes[strict_idx]);
    return report;
  }
  report.ess_second_condition_margin = margin;
  report.is_ess = margin > tol.gap_tol();
  report.witness = MixedStrategy(probes[margin_idx]);
  return report;
}

}  // namespace qess

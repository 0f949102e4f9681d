#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <variant>

#include "qess/errors.hpp"

namespace qess {

inline constexpr double pi = std::numbers::pi;
inline constexpr double half_pi = pi / 2.0;
inline constexpr double quarter_pi = pi / 4.0;

// Payoff constants of a symmetric 2x2 bimatrix game:
//
//              S1       S2
//     S1    (r, r)   (s, t)
//     S2    (t, s)   (u, u)
//
// The constrained family additionally satisfies s = t, r = u and r - t > 0.
class GameMatrix {
 public:
  GameMatrix(double r, double s, double t, double u, bool constrained = false)
      : r_(r), s_(s), t_(t), u_(u), constrained_(constrained) {
    if (!(std::isfinite(r) && std::isfinite(s) && std::isfinite(t) &&
          std::isfinite(u))) {
      throw NonFiniteInput("game entries must be finite reals");
    }
    if (constrained_) {
      if (s_ != t_) throw ConstraintViolation("constraint s=t violated");
      if (r_ != u_) throw ConstraintViolation("constraint r=u violated");
      if (!(r_ - t_ > 0.0))
        throw ConstraintViolation("constraint (r-t)>0 violated");
    }
  }

  double r() const { return r_; }
  double s() const { return s_; }
  double t() const { return t_; }
  double u() const { return u_; }
  bool constrained() const { return constrained_; }

  // Same game from the column player's perspective (s and t exchanged).
  GameMatrix swapped() const { return {r_, t_, s_, u_, false}; }

 private:
  double r_, s_, t_, u_;
  bool constrained_;
};

// Probability of playing the first pure strategy S1.
class MixedStrategy {
 public:
  MixedStrategy() = default;
  explicit MixedStrategy(double p) : p_(p) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
      throw RangeError("mixed strategy probability must lie in [0,1]");
    }
  }

  double p() const { return p_; }

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;

 private:
  double p_ = 0.0;
};

// Two-parameter unitary strategy (theta, phi), theta in [0,pi], phi in
// [0,pi/2]. Out-of-range values are rejected, never wrapped.
class QuantumStrategy {
 public:
  QuantumStrategy() = default;
  QuantumStrategy(double theta, double phi) : theta_(theta), phi_(phi) {
    if (!std::isfinite(theta) || theta < 0.0 || theta > pi) {
      throw RangeError("strategy angle theta must lie in [0,pi]");
    }
    if (!std::isfinite(phi) || phi < 0.0 || phi > half_pi) {
      throw RangeError("strategy angle phi must lie in [0,pi/2]");
    }
  }

  double theta() const { return theta_; }
  double phi() const { return phi_; }

  friend bool operator==(const QuantumStrategy&,
                         const QuantumStrategy&) = default;

 private:
  double theta_ = 0.0;
  double phi_ = 0.0;
};

// Entanglement measure gamma in [0,pi/2]; gamma=0 is the classical game,
// gamma=pi/2 maximal entanglement.
class EntanglementLevel {
 public:
  EntanglementLevel() = default;
  explicit EntanglementLevel(double gamma) : gamma_(gamma) {
    if (!std::isfinite(gamma) || gamma < 0.0 || gamma > half_pi) {
      throw RangeError("entanglement gamma must lie in [0,pi/2]");
    }
  }

  double gamma() const { return gamma_; }

  friend bool operator==(const EntanglementLevel&,
                         const EntanglementLevel&) = default;

 private:
  double gamma_ = 0.0;
};

// Numeric conventions for equilibrium certification: gap_tol is the
// threshold below which a payoff gap counts as zero; exclusion_radius is
// the distance below which a probe is identified with the candidate.
class Tolerances {
 public:
  Tolerances() = default;
  Tolerances(double gap_tol, double exclusion_radius)
      : gap_tol_(gap_tol), exclusion_radius_(exclusion_radius) {
    if (!std::isfinite(gap_tol) || gap_tol < 0.0) {
      throw ParameterError("gap_tol must be a finite real >= 0");
    }
    if (!std::isfinite(exclusion_radius) || exclusion_radius <= 0.0) {
      throw ParameterError("exclusion_radius must be a finite real > 0");
    }
  }

  double gap_tol() const { return gap_tol_; }
  double exclusion_radius() const { return exclusion_radius_; }

 private:
  double gap_tol_ = 1e-9;
  double exclusion_radius_ = 1e-3;
};

// Certification verdicts for a candidate strategy, with the numeric gap
// evidence they rest on.
//
//  - min_ne_gap: minimum over all probes of P(c,c) - P(s,c).
//  - strict_margin: the same minimum restricted to probes at distance
//    >= exclusion_radius from the candidate.
//  - ess_second_condition_margin: min over tied best responses s of
//    P(c,s) - P(s,s); present only when that condition was examined.
//  - witness: the probe achieving the decisive extremum.
//  - alt_best_responses: size of the tied-best-response set examined by
//    the second condition (0 when the strict condition already decided;
//    nonzero flags that the finite probe set stood in for the universal
//    quantifier).
struct ClassificationReport {
  bool is_ne = false;
  bool is_strict_ne = false;
  bool is_ess = false;
  double min_ne_gap = 0.0;
  double strict_margin = 0.0;
  std::optional<double> ess_second_condition_margin;
  std::variant<MixedStrategy, QuantumStrategy> witness;
  std::size_t probes_evaluated = 0;
  std::size_t alt_best_responses = 0;
};

}  // namespace qess

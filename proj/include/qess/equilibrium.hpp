#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qess/kernel.hpp"

namespace qess {

// Probe-grid layout for the best-response search. Level 0 covers the full
// strategy space [0,pi] x [0,pi/2] with theta_points x phi_points probes
// (endpoints included on both axes); each refinement level re-grids a
// zoom_factor-shrunken box around the running argmax.
struct GridSpec {
  std::size_t theta_points = 181;
  std::size_t phi_points = 91;
  std::size_t refinement_levels = 3;
  double zoom_factor = 10.0;

  void validate() const;  // throws ParameterError
};

// Probe evaluations are independent; the parallel path fills the same value
// array as the serial one and both reduce sequentially, so results are
// identical regardless of thread count.
enum class Execution { serial, parallel };

// Full record of one refinement scan: every probe visited (in evaluation
// order, lexicographic (theta, phi) within each level) and its payoff
// against the candidate.
struct BestResponseScan {
  std::vector<QuantumStrategy> probes;
  std::vector<double> probe_payoff;   // P(probe, candidate)
  double candidate_payoff = 0.0;      // P(candidate, candidate)
  std::size_t best_index = 0;         // argmax of probe_payoff; exact ties
                                      // broken by lexicographic (theta, phi)
};

BestResponseScan scan_best_response(const GameMatrix& game,
                                    EntanglementLevel gamma,
                                    QuantumStrategy candidate,
                                    const GridSpec& grid,
                                    Execution exec = Execution::parallel);

// (g, s_hat): g = max over probes of P(s, candidate) - P(candidate,
// candidate) and s_hat attains it. g <= gap_tol certifies the candidate as a
// best response to itself on the probe set.
std::pair<double, QuantumStrategy> best_response_gap(
    const GameMatrix& game, EntanglementLevel gamma, QuantumStrategy candidate,
    const GridSpec& grid, Execution exec = Execution::parallel);

// NE / strict NE / ESS certification of the candidate at the given
// entanglement level. Strictness demands a Nash gap > gap_tol for every
// probe at Euclidean (theta, phi)-distance >= exclusion_radius from the
// candidate; a non-strict NE is an ESS iff P(candidate,s) - P(s,s) > gap_tol
// for every tied best response s on the probe set.
ClassificationReport classify_quantum(const GameMatrix& game,
                                      EntanglementLevel gamma,
                                      QuantumStrategy candidate,
                                      const Tolerances& tol,
                                      const GridSpec& grid,
                                      Execution exec = Execution::parallel);

// One independent report per gamma. The sequence must be nonempty
// (EmptySweep) and strictly increasing (ParameterError).
std::vector<std::pair<EntanglementLevel, ClassificationReport>> sweep_gamma(
    const GameMatrix& game, QuantumStrategy candidate,
    const std::vector<EntanglementLevel>& gamma_values, const Tolerances& tol,
    const GridSpec& grid, Execution exec = Execution::parallel);

}  // namespace qess

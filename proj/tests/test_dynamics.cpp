#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "qess/dynamics.hpp"
#include "qess/equilibrium.hpp"
#include "qess/game.hpp"

using namespace qess;

namespace {

const QuantumStrategy kStar{half_pi, quarter_pi};

Induced2x2 matrix(double a, double b, double c, double d) {
  Induced2x2 m;
  m.a = a;
  m.b = b;
  m.c = c;
  m.d = d;
  return m;
}

}  // namespace

TEST_CASE("induced matrix of s* vs the pure mutant") {
  const GameMatrix g = default_constrained_game();
  const QuantumStrategy mutant{0.0, 0.0};

  // gamma=0: the cross terms die with cos(theta*)=0
  const Induced2x2 flat = induced_matrix(g, EntanglementLevel(0.0), kStar,
                                         mutant);
  CHECK(flat.a == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(flat.b == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(flat.c == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(flat.d == doctest::Approx(1.0).epsilon(1e-12));

  // gamma=pi/2: the incumbent's self-payoff gains the entanglement term
  const Induced2x2 edge = induced_matrix(g, EntanglementLevel(half_pi), kStar,
                                         mutant);
  CHECK(edge.a == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(edge.b == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(edge.c == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(edge.d == doctest::Approx(1.0).epsilon(1e-12));

  // identical strategies induce a flat matrix, entry for entry
  const Induced2x2 same =
      induced_matrix(g, EntanglementLevel(0.9), kStar, kStar);
  CHECK(same.a == same.b);
  CHECK(same.a == same.c);
  CHECK(same.a == same.d);
}

TEST_CASE("parameter validation of the invasion simulation") {
  const Induced2x2 m = matrix(1, 0.5, 0.5, 1);
  CHECK_THROWS_AS(simulate_invasion(m, -0.1, 0.01, 10), ParameterError);
  CHECK_THROWS_AS(simulate_invasion(m, 1.1, 0.01, 10), ParameterError);
  CHECK_THROWS_AS(simulate_invasion(m, 0.5, 0.0, 10), ParameterError);
  CHECK_THROWS_AS(simulate_invasion(m, 0.5, -1.0, 10), ParameterError);
  CHECK_THROWS_AS(simulate_invasion(m, 0.5, 0.01, 0), ParameterError);
}

TEST_CASE("simplex corners are exact fixed points") {
  const Induced2x2 m = matrix(1, 0.5, 0.5, 1);

  const InvasionTrace zero = simulate_invasion(m, 0.0, 0.01, 500);
  CHECK(zero.boundary_start);
  CHECK(zero.verdict == InvasionVerdict::repelled);
  for (const double e : zero.epsilon_series) CHECK(e == 0.0);
  CHECK(zero.epsilon_series.size() == 501);

  const InvasionTrace one = simulate_invasion(m, 1.0, 0.01, 500);
  CHECK(one.boundary_start);
  CHECK(one.verdict == InvasionVerdict::invaded);
  for (const double e : one.epsilon_series) CHECK(e == 1.0);
}

TEST_CASE("bistable matrix repels small invasions") {
  // incumbent advantage 0.5 - eps stays positive below the barrier
  const InvasionTrace trace =
      simulate_invasion(matrix(1, 0.5, 0.5, 1), 0.1, 0.01, 5000);
  CHECK(trace.verdict == InvasionVerdict::repelled);
  CHECK(trace.epsilon_series.back() < 1e-6);
  CHECK_FALSE(trace.boundary_start);
}

TEST_CASE("a mutant with a quadratic edge eventually takes over") {
  // mutant advantage 0.5 eps is positive for every eps > 0, but the
  // takeoff is quadratic: at dt=0.01 it needs ~22500 steps to round the
  // corner, so the 5000-step horizon still sits in the slow phase
  const Induced2x2 m = matrix(0.5, 0.5, 0.5, 1);

  const InvasionTrace slow = simulate_invasion(m, 0.01, 0.01, 5000);
  CHECK(slow.verdict == InvasionVerdict::bistable_threshold);
  CHECK(slow.epsilon_series.back() > 0.01);
  CHECK(slow.epsilon_series.back() < 0.05);

  const InvasionTrace full = simulate_invasion(m, 0.01, 0.01, 30000);
  CHECK(full.verdict == InvasionVerdict::invaded);
  CHECK(full.epsilon_series.back() > 1.0 - 1e-6);
}

TEST_CASE("a flat matrix is neutral everywhere") {
  const InvasionTrace trace =
      simulate_invasion(matrix(0.7, 0.7, 0.7, 0.7), 0.3, 0.01, 1000);
  CHECK(trace.verdict == InvasionVerdict::neutral);
  for (const double e : trace.epsilon_series) CHECK(e == 0.3);
}

TEST_CASE("invasion threshold of reference matrices") {
  const auto mid = invasion_threshold(matrix(1, 0.5, 0.5, 1));
  REQUIRE(mid.has_value());
  CHECK(*mid == doctest::Approx(0.5).epsilon(1e-15));

  // no barrier when the incumbent has no edge at eps=0
  CHECK_FALSE(invasion_threshold(matrix(0.5, 0.5, 0.5, 1)).has_value());

  // a = d, b = c, a > b forces the midpoint
  const auto sym = invasion_threshold(matrix(2, 1, 1, 2));
  REQUIRE(sym.has_value());
  CHECK(*sym == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("trace stays inside the simplex") {
  std::mt19937_64 rng(8888);
  std::uniform_real_distribution<double> entry(-5.0, 5.0);
  std::uniform_real_distribution<double> eps(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const InvasionTrace trace = simulate_invasion(
        matrix(entry(rng), entry(rng), entry(rng), entry(rng)), eps(rng), 0.05,
        400);
    CHECK(trace.epsilon_series.size() == 401);
    for (const double e : trace.epsilon_series) {
      CHECK(e >= 0.0);
      CHECK(e <= 1.0);
    }
  }
}

TEST_CASE("a strict NE incumbent repels every small mutant invasion") {
  const GameMatrix g = default_constrained_game();
  const QuantumStrategy mutants[] = {
      {0.0, 0.0}, {pi, 0.0}, {1.0, 0.2}, {2.2, half_pi}};
  for (const double gamma : {0.3, half_pi}) {
    const EntanglementLevel level(gamma);
    const auto rep = classify_quantum(g, level, kStar, Tolerances{},
                                      GridSpec{37, 19, 1, 10.0});
    REQUIRE(rep.is_strict_ne);
    for (const QuantumStrategy& mutant : mutants) {
      const InvasionTrace trace = simulate_invasion(
          induced_matrix(g, level, kStar, mutant), 0.01, 0.01, 30000);
      CAPTURE(gamma);
      CAPTURE(mutant.theta());
      CHECK(trace.verdict == InvasionVerdict::repelled);
    }
  }
}

TEST_CASE("simulated outcomes bracket the analytic barrier") {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> edge(0.3, 1.5);
  std::uniform_real_distribution<double> base(-1.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const double offset = base(rng);
    const double inc_edge = edge(rng), mut_edge = edge(rng);
    const Induced2x2 m = matrix(offset + inc_edge, offset, offset,
                                offset + mut_edge);
    const auto barrier = invasion_threshold(m);
    REQUIRE(barrier.has_value());

    const InvasionTrace below =
        simulate_invasion(m, *barrier * 0.9, 0.01, 20000);
    CHECK(below.verdict == InvasionVerdict::repelled);

    const InvasionTrace above = simulate_invasion(
        m, std::min(*barrier * 1.1, 0.999), 0.01, 20000);
    CHECK(above.verdict == InvasionVerdict::invaded);
  }
}

TEST_CASE("halving the step size barely moves the endpoint") {
  const Induced2x2 cases[] = {matrix(1, 0.5, 0.5, 1),
                              matrix(0.5, 0.5, 0.5, 1)};
  const double eps0[] = {0.1, 0.01};
  for (int i = 0; i < 2; ++i) {
    const double coarse =
        simulate_invasion(cases[i], eps0[i], 0.01, 5000).epsilon_series.back();
    const double fine =
        simulate_invasion(cases[i], eps0[i], 0.005, 10000).epsilon_series.back();
    CHECK(std::abs(coarse - fine) < 1e-8);
  }
}

TEST_CASE("evolutionary entropy of reference distributions") {
  const double uniform[] = {0.5, 0.5};
  CHECK(evolutionary_entropy(uniform) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-15));

  const double degenerate[] = {1.0, 0.0};
  CHECK(evolutionary_entropy(degenerate) == 0.0);

  // -0.25 ln 0.25 - 0.75 ln 0.75
  const double skewed[] = {0.25, 0.75};
  CHECK(evolutionary_entropy(skewed) ==
        doctest::Approx(0.5623351446188083).epsilon(1e-12));
}

TEST_CASE("entropy rejects negative and degenerate inputs") {
  const double negative[] = {0.5, -0.5};
  CHECK_THROWS_AS(evolutionary_entropy(negative), NegativeContribution);
  const double zeros[] = {0.0, 0.0};
  CHECK_THROWS_AS(evolutionary_entropy(zeros), ParameterError);
}

TEST_CASE("entropy normalizes off-scale contributions") {
  const double doubled[] = {1.0, 1.0};
  CHECK(evolutionary_entropy(doubled) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-15));
}

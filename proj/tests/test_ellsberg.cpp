#include <cmath>
#include <vector>

#include "doctest.h"
#include "hsdt/ellsberg.hpp"
#include "test_support.hpp"

using namespace hsdt;
using hsdt::testing::TestRng;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Ellsberg behavior decided through the generic moderation pipeline instead
// of the closed form, with explicit payoff vectors per bet.
bool predicate_via_pipeline(double x, double y, double d,
                            const std::vector<double>& black_payoffs,
                            const std::vector<double>& white_payoffs) {
  const MindState mind = mind2_state(y, d);
  const StateVector state = urn2_state(x);
  const StateVector urn1 = urn1_state();
  const MindState certain(urn1);
  const PayoffAction black_bet{"b", black_payoffs};
  const PayoffAction white_bet{"w", white_payoffs};
  const double urn1_black = moderated_expected_utility(certain, urn1, black_bet);
  const double urn1_white = moderated_expected_utility(certain, urn1, white_bet);
  return urn1_black > moderated_expected_utility(mind, state, black_bet) &&
         urn1_white > moderated_expected_utility(mind, state, white_bet);
}

}  // namespace

TEST_CASE("urn states") {
  const StateVector urn1 = urn1_state();
  CHECK(urn1[0].real() == doctest::Approx(kInvSqrt2).epsilon(1e-15));
  CHECK(urn1[1].real() == doctest::Approx(kInvSqrt2).epsilon(1e-15));
  const auto probs = outcome_probabilities(urn1);
  CHECK(probs[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(expected_utility({"b", {1.0, 0.0}}, urn1) ==
        doctest::Approx(0.5).epsilon(1e-14));

  CHECK(urn2_state(0.0)[0] == Complex(0.0, 0.0));
  CHECK(urn2_state(0.0)[1] == Complex(1.0, 0.0));
  CHECK(urn2_state(1.0)[0] == Complex(1.0, 0.0));
  CHECK(outcome_probabilities(urn2_state(0.6))[0] ==
        doctest::Approx(0.36).epsilon(1e-14));

  CHECK_THROWS_AS(urn2_state(1.2), DomainError);
  CHECK_THROWS_AS(urn2_state(-0.1), DomainError);
}

TEST_CASE("mind2_state") {
  const MindState certain_black = mind2_state(1.0, 2.0);
  CHECK(certain_black.vector()[0] == Complex(1.0, 0.0));
  CHECK(std::abs(certain_black.vector()[1]) == 0.0);

  // projector matches [[y^2, e^{-id} y w], [e^{id} y w, 1-y^2]]
  const double y = 0.45, d = 1.8;
  const double w = std::sqrt(1.0 - y * y);
  const MindState mind = mind2_state(y, d);
  const LinearOperator& pm = mind.projector();
  CHECK(std::abs(pm.at(0, 0) - Complex(y * y, 0.0)) <= 1e-15);
  CHECK(std::abs(pm.at(0, 1) - y * w * Complex(std::cos(d), -std::sin(d))) <= 1e-15);
  CHECK(std::abs(pm.at(1, 0) - y * w * Complex(std::cos(d), std::sin(d))) <= 1e-15);
  CHECK(std::abs(pm.at(1, 1) - Complex(1.0 - y * y, 0.0)) <= 1e-15);

  // (1/sqrt(2), 0) is the urn-1 state
  const StateVector m = mind2_state(kInvSqrt2, 0.0).vector();
  CHECK(std::abs(inner(m, urn1_state()) - Complex(1.0, 0.0)) <= 1e-12);

  CHECK_THROWS_AS(mind2_state(1.1, 0.0), DomainError);
  CHECK_THROWS_AS(mind2_state(0.5, -0.2), DomainError);
  CHECK_THROWS_AS(mind2_state(0.5, 3.5), DomainError);
}

TEST_CASE("overlap_sq closed form") {
  for (double v : {0.0, 0.3, 0.8, 1.0})
    CHECK(overlap_sq({v, v, 0.0}) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(overlap_sq({kInvSqrt2, kInvSqrt2, kPi / 2.0}) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(overlap_sq({0.0, 1.0, 1.0}) == doctest::Approx(0.0));

  CHECK_THROWS_AS(overlap_sq({-0.1, 0.5, 0.0}), DomainError);
  CHECK_THROWS_AS(overlap_sq({0.5, 0.5, 4.0}), DomainError);
}

TEST_CASE("overlap_sq equals the squared inner product over 10k points") {
  TestRng rng(41);
  for (int trial = 0; trial < 10000; ++trial) {
    const double x = rng.u01();
    const double y = rng.u01();
    const double d = rng.uniform(0.0, kPi);
    const double closed = overlap_sq({x, y, d});
    const double via_inner =
        std::norm(overlap_coefficient(mind2_state(y, d), urn2_state(x)));
    CHECK(std::abs(closed - via_inner) <= 1e-12);
  }
}

TEST_CASE("phase pi/2 removes the interference term") {
  TestRng rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    const double x = rng.u01();
    const double y = rng.u01();
    const double no_interference =
        1.0 - x * x - y * y + 2.0 * x * x * y * y;
    CHECK(std::abs(overlap_sq({x, y, kPi / 2.0}) - no_interference) <= 1e-12);
  }
}

TEST_CASE("bet utilities") {
  const EllsbergPoint p{kInvSqrt2, kInvSqrt2, kPi / 2.0};
  CHECK(bet_utility(Urn::urn1, Bet::black, p) == doctest::Approx(0.5));
  CHECK(bet_utility(Urn::urn1, Bet::white, p) == doctest::Approx(0.5));
  CHECK(bet_utility(Urn::urn2, Bet::black, p) ==
        doctest::Approx(0.25).epsilon(1e-12));

  // general utilities: urn 1 pays the midpoint
  const EllsbergPoint scaled{0.4, 0.3, 1.0, -2.0, 6.0};
  CHECK(bet_utility(Urn::urn1, Bet::white, scaled) == doctest::Approx(2.0));

  // mind certain of black: the white bet is worth |c|^2 * u0 = 0
  const EllsbergPoint certain{0.5, 1.0, 0.0};
  CHECK(bet_utility(Urn::urn2, Bet::white, certain) == doctest::Approx(0.0));

  CHECK_THROWS_AS(bet_utility(Urn::urn2, Bet::black, {0.5, 0.5, 0.5, 1.0, 0.0}),
                  DomainError);  // u100 <= u0
}

TEST_CASE("bet utilities match the generic moderation pipeline") {
  TestRng rng(43);
  for (int trial = 0; trial < 2000; ++trial) {
    const EllsbergPoint p{rng.u01(), rng.u01(), rng.uniform(0.0, kPi)};
    const MindState mind = mind2_state(p.y, p.d);
    const StateVector state = urn2_state(p.x);
    const double black = moderated_expected_utility(mind, state, {"b", {1.0, 0.0}});
    const double white = moderated_expected_utility(mind, state, {"w", {0.0, 1.0}});
    CHECK(std::abs(bet_utility(Urn::urn2, Bet::black, p) - black) <= 1e-12);
    CHECK(std::abs(bet_utility(Urn::urn2, Bet::white, p) - white) <= 1e-12);
  }
}

TEST_CASE("classical_condition") {
  const ClassicalPreference mid = classical_condition(0.5);
  CHECK(mid.prefers_urn1_black);
  CHECK_FALSE(mid.prefers_urn1_white);

  // x^2 = 1/2 has no exact double representative; the strict inequalities
  // flip across the two neighbours of sqrt(1/2) and never hold together.
  const ClassicalPreference below = classical_condition(1.0 / std::sqrt(2.0));
  CHECK(below.prefers_urn1_black);  // squares to 0.4999999999999999
  CHECK_FALSE(below.prefers_urn1_white);
  const ClassicalPreference above = classical_condition(std::sqrt(0.5));
  CHECK_FALSE(above.prefers_urn1_black);  // squares to 0.5000000000000001
  CHECK(above.prefers_urn1_white);

  const ClassicalPreference high = classical_condition(0.9);
  CHECK_FALSE(high.prefers_urn1_black);
  CHECK(high.prefers_urn1_white);

  CHECK_THROWS_AS(classical_condition(1.5), DomainError);
}

TEST_CASE("classical_condition never grants both preferences") {
  for (double x : discrete_compositions(100)) {
    const ClassicalPreference pref = classical_condition(x);
    CHECK_FALSE((pref.prefers_urn1_black && pref.prefers_urn1_white));
  }
  TestRng rng(44);
  for (int trial = 0; trial < 2000; ++trial) {
    const ClassicalPreference pref = classical_condition(rng.u01());
    CHECK_FALSE((pref.prefers_urn1_black && pref.prefers_urn1_white));
  }
}

TEST_CASE("ellsberg_predicate") {
  CHECK(ellsberg_predicate({0.5, 0.5, kPi / 2.0}));
  CHECK_FALSE(ellsberg_predicate({0.0, 0.0, 0.7}));
  // boundary: both sides exactly 1/2, strict comparison fails
  CHECK_FALSE(ellsberg_predicate({kInvSqrt2, kInvSqrt2, 0.0}));

  CHECK_THROWS_AS(ellsberg_predicate({0.5, 0.5, -1.0}), DomainError);
}

TEST_CASE("ellsberg_predicate matches the pipeline with swapped payoffs at the "
          "mirrored point") {
  TestRng rng(45);
  for (int trial = 0; trial < 1000; ++trial) {
    const double x = rng.u01();
    const double y = rng.u01();
    const double d = rng.uniform(0.0, kPi);
    // relabeling black <-> white swaps the payoff vectors and maps
    // (x, y) -> (sqrt(1-x^2), sqrt(1-y^2))
    const bool swapped = predicate_via_pipeline(x, y, d, {0.0, 1.0}, {1.0, 0.0});
    const bool mirrored = ellsberg_predicate(
        {std::sqrt(1.0 - x * x), std::sqrt(1.0 - y * y), d});
    CHECK(swapped == mirrored);
  }
}

TEST_CASE("discrete_compositions") {
  const std::vector<double> xs = discrete_compositions(100);
  CHECK(xs.size() == 101);
  CHECK(xs[0] == 0.0);
  CHECK(xs[100] == 1.0);
  CHECK(xs[50] == doctest::Approx(kInvSqrt2).epsilon(1e-15));
  CHECK(xs[36] == doctest::Approx(0.6).epsilon(1e-15));
  for (std::size_t k = 0; k < xs.size(); ++k)
    CHECK(std::abs(xs[k] * xs[k] - double(k) / 100.0) <= 1e-15);

  CHECK_THROWS_AS(discrete_compositions(0), DomainError);
}

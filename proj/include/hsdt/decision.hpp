#pragma once
//
// Decision problems over a Hilbert possibility space: actions as payoff
// vectors over outcomes, expected utility U(a, v) = <v|A_a|v> =
// sum_i payoff_i |v_i|^2, and deterministic argmax choice.

#include <span>
#include <string>
#include <vector>

#include "hsdt/hilbert.hpp"

namespace hsdt {

// Utilities closer together than this are treated as tied by choose().
inline constexpr double kTieTolerance = 1e-12;

// An action: one utility payoff per outcome. Payoffs are already in utility
// units; a utility function is applied only where actions are generated
// (see portfolio_action).
struct PayoffAction {
  std::string label;
  std::vector<double> payoffs;
};

struct DecisionProblem {
  std::vector<std::string> outcome_labels;
  StateVector world_state;
  std::vector<PayoffAction> actions;
};

// Validates dimensions, label uniqueness and payoff finiteness.
DecisionProblem make_problem(std::vector<std::string> outcome_labels,
                             StateVector world_state,
                             std::vector<PayoffAction> actions);

struct ChoiceResult {
  std::vector<double> utilities;
  std::vector<int> best_indices;  // ascending; all within kTieTolerance of the max
  int reported_choice = 0;        // smallest member of best_indices
};

// diag(payoffs): the action as a payoff-weighted sum of basis projectors.
LinearOperator action_operator(const PayoffAction& action);

// sum_i payoffs[i] * |state_i|^2; agrees with
// expectation(state, action_operator(action)) to 1e-12.
double expected_utility(const PayoffAction& action, const StateVector& state);

// p_i = |state_i|^2.
std::vector<double> outcome_probabilities(const StateVector& state);

ChoiceResult choose_from_utilities(std::span<const double> utilities);
ChoiceResult choose(const DecisionProblem& problem);

// Named utility functions for the portfolio generator.
class UtilityFn {
 public:
  static UtilityFn linear();
  // u(z) = z^gamma for z >= 0, gamma in (0, 1].
  static UtilityFn power(double gamma);
  // u(z) = ln z for z > 0.
  static UtilityFn logarithmic();
  // Accepts "linear", "power" (needs gamma) and "log".
  static UtilityFn by_name(const std::string& name, double gamma = 1.0);

  double operator()(double payoff) const;
  const std::string& name() const { return name_; }

 private:
  enum class Kind { linear, power, log };
  UtilityFn(Kind kind, double gamma, std::string name)
      : kind_(kind), gamma_(gamma), name_(std::move(name)) {}
  Kind kind_;
  double gamma_;
  std::string name_;
};

// Two-outcome portfolio: `a` units of a stock returning r1 or r2 per unit,
// `b` units of a bond returning r, bought at stock price q0 under the budget
// q0*a + b = w0.
struct PortfolioParams {
  double q0 = 1.0;
  double a = 0.0;
  double b = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  double r = 0.0;
  double w0 = 0.0;
};

// Payoffs (utility(r1*a + r*b), utility(r2*a + r*b)). Throws BudgetError
// when q0*a + b is not within 1e-9 of w0.
PayoffAction portfolio_action(const PortfolioParams& params, const UtilityFn& utility,
                              std::string label);

}  // namespace hsdt

#include "hsdt/decision.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace hsdt {

namespace {

void require_finite_payoffs(const PayoffAction& action) {
  for (double p : action.payoffs) {
    if (!std::isfinite(p))
      throw DomainError("action '" + action.label + "': non-finite payoff");
  }
}

}  // namespace

DecisionProblem make_problem(std::vector<std::string> outcome_labels,
                             StateVector world_state,
                             std::vector<PayoffAction> actions) {
  const int dim = world_state.dim();
  if (static_cast<int>(outcome_labels.size()) != dim)
    throw DimMismatch("make_problem: outcome label count != state dimension");
  std::set<std::string> seen(outcome_labels.begin(), outcome_labels.end());
  if (static_cast<int>(seen.size()) != dim)
    throw SchemaError("make_problem: outcome labels are not unique");
  if (actions.empty()) throw EmptyActionSet("make_problem: no actions");
  for (const PayoffAction& a : actions) {
    if (static_cast<int>(a.payoffs.size()) != dim)
      throw DimMismatch("make_problem: action '" + a.label +
                        "' payoff length != state dimension");
    require_finite_payoffs(a);
  }
  return DecisionProblem{std::move(outcome_labels), std::move(world_state),
                         std::move(actions)};
}

LinearOperator action_operator(const PayoffAction& action) {
  require_finite_payoffs(action);
  const int dim = static_cast<int>(action.payoffs.size());
  LinearOperator op(dim);
  for (int i = 0; i < dim; ++i)
    op.at(i, i) = Complex(action.payoffs[static_cast<std::size_t>(i)], 0.0);
  return op;
}

double expected_utility(const PayoffAction& action, const StateVector& state) {
  if (static_cast<int>(action.payoffs.size()) != state.dim())
    throw DimMismatch("expected_utility: payoff length != state dimension");
  require_finite_payoffs(action);
  double acc = 0.0;
  for (int i = 0; i < state.dim(); ++i)
    acc += action.payoffs[static_cast<std::size_t>(i)] * std::norm(state[i]);
  return acc;
}

std::vector<double> outcome_probabilities(const StateVector& state) {
  std::vector<double> probs(static_cast<std::size_t>(state.dim()));
  for (int i = 0; i < state.dim(); ++i)
    probs[static_cast<std::size_t>(i)] = std::norm(state[i]);
  return probs;
}

ChoiceResult choose_from_utilities(std::span<const double> utilities) {
  if (utilities.empty()) throw EmptyActionSet("choose: no actions");
  const double best = *std::max_element(utilities.begin(), utilities.end());
  ChoiceResult result;
  result.utilities.assign(utilities.begin(), utilities.end());
  for (int i = 0; i < static_cast<int>(utilities.size()); ++i) {
    if (utilities[static_cast<std::size_t>(i)] >= best - kTieTolerance)
      result.best_indices.push_back(i);
  }
  result.reported_choice = result.best_indices.front();
  return result;
}

ChoiceResult choose(const DecisionProblem& problem) {
  if (problem.actions.empty()) throw EmptyActionSet("choose: no actions");
  std::vector<double> utilities;
  utilities.reserve(problem.actions.size());
  for (const PayoffAction& a : problem.actions)
    utilities.push_back(expected_utility(a, problem.world_state));
  return choose_from_utilities(utilities);
}

UtilityFn UtilityFn::linear() { return UtilityFn(Kind::linear, 1.0, "linear"); }

UtilityFn UtilityFn::power(double gamma) {
  if (!(gamma > 0.0) || gamma > 1.0)
    throw DomainError("power utility: gamma must lie in (0, 1]");
  return UtilityFn(Kind::power, gamma, "power");
}

UtilityFn UtilityFn::logarithmic() { return UtilityFn(Kind::log, 1.0, "log"); }

UtilityFn UtilityFn::by_name(const std::string& name, double gamma) {
  if (name == "linear") return linear();
  if (name == "power") return power(gamma);
  if (name == "log") return logarithmic();
  throw DomainError("unknown utility function '" + name + "'");
}

double UtilityFn::operator()(double payoff) const {
  if (!std::isfinite(payoff)) throw DomainError("utility: non-finite payoff");
  switch (kind_) {
    case Kind::linear:
      return payoff;
    case Kind::power:
      if (payoff < 0.0)
        throw DomainError("power utility: payoff must be non-negative");
      return std::pow(payoff, gamma_);
    case Kind::log:
      if (!(payoff > 0.0))
        throw DomainError("log utility: payoff must be positive");
      return std::log(payoff);
  }
  throw DomainError("utility: unreachable kind");
}

PayoffAction portfolio_action(const PortfolioParams& params, const UtilityFn& utility,
                              std::string label) {
  for (double v : {params.q0, params.a, params.b, params.r1, params.r2, params.r,
                   params.w0}) {
    if (!std::isfinite(v)) throw DomainError("portfolio: non-finite parameter");
  }
  const double cost = params.q0 * params.a + params.b;
  if (std::abs(cost - params.w0) > 1e-9) {
    throw BudgetError("portfolio '" + label + "': cost " + std::to_string(cost) +
                      " violates budget " + std::to_string(params.w0));
  }
  return PayoffAction{std::move(label),
                      {utility(params.r1 * params.a + params.r * params.b),
                       utility(params.r2 * params.a + params.r * params.b)}};
}

}  // namespace hsdt

#include "hsdt/mind.hpp"

#include <cmath>
#include <string>

namespace hsdt {

Complex overlap_coefficient(const MindState& mind, const StateVector& state) {
  return inner(mind.vector(), state);
}

double moderated_weight(const MindState& mind, const StateVector& state,
                        int basis_index) {
  const StateVector& m = mind.vector();
  if (m.dim() != state.dim())
    throw DimMismatch("moderated_weight: mind/state dimension mismatch");
  if (basis_index < 0 || basis_index >= m.dim())
    throw DimMismatch("moderated_weight: basis index " +
                      std::to_string(basis_index) + " out of range");
  const double overlap_sq = std::norm(inner(m, state));
  return overlap_sq * std::norm(m[basis_index]);
}

double moderated_expected_utility(const MindState& mind, const StateVector& state,
                                  const PayoffAction& action) {
  const StateVector& m = mind.vector();
  if (m.dim() != state.dim())
    throw DimMismatch("moderated_expected_utility: mind/state dimension mismatch");
  if (static_cast<int>(action.payoffs.size()) != m.dim())
    throw DimMismatch("moderated_expected_utility: payoff length != dimension");
  const double overlap_sq = std::norm(inner(m, state));
  double acc = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    acc += action.payoffs[static_cast<std::size_t>(i)] * std::norm(m[i]);
  return overlap_sq * acc;
}

std::vector<double> moderated_distribution(const MindState& mind,
                                           const StateVector& state,
                                           WeightMode mode) {
  const StateVector& m = mind.vector();
  if (m.dim() != state.dim())
    throw DimMismatch("moderated_distribution: mind/state dimension mismatch");
  const double overlap_sq = std::norm(inner(m, state));
  std::vector<double> weights(static_cast<std::size_t>(m.dim()));
  for (int i = 0; i < m.dim(); ++i)
    weights[static_cast<std::size_t>(i)] = overlap_sq * std::norm(m[i]);
  if (mode == WeightMode::normalized) {
    if (overlap_sq <= kOrthogonalOverlapFloor)
      throw OrthogonalMindError(
          "moderated_distribution: mind state is orthogonal to the information "
          "state; the normalized distribution is undefined");
    for (double& w : weights) w /= overlap_sq;
  }
  return weights;
}

}  // namespace hsdt

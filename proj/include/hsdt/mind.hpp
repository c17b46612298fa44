#pragma once
//
// Subjective mind-state moderation. A mind state M with projector
// P_M = |M><M| moderates how an information state v is perceived:
//
//   <v|P_M P_i P_M|v> = |c|^2 <M|P_i|M>,   c = <M|v>,
//
// so the perceived weight of outcome i is the mind's own outcome probability
// scaled by the squared overlap |c|^2 between mind and information state.
// The moderated weights are deliberately left unnormalized (they sum to
// |c|^2, not 1): moderated utilities carry that factor.

#include <vector>

#include "hsdt/decision.hpp"
#include "hsdt/hilbert.hpp"

namespace hsdt {

// Below this squared overlap the mind and the state are treated as
// orthogonal; normalized distributions are undefined there.
inline constexpr double kOrthogonalOverlapFloor = 1e-15;

class MindState {
 public:
  explicit MindState(StateVector vector)
      : vector_(std::move(vector)), projector_(projector_onto(vector_)) {}

  const StateVector& vector() const { return vector_; }
  const LinearOperator& projector() const { return projector_; }

 private:
  StateVector vector_;
  LinearOperator projector_;  // cached |M><M|
};

// c = <M|state>; |c| <= 1 up to rounding.
Complex overlap_coefficient(const MindState& mind, const StateVector& state);

// |c|^2 * <M|P_i|M>: the moderated (unnormalized) weight of basis outcome i.
double moderated_weight(const MindState& mind, const StateVector& state,
                        int basis_index);

// sum_i payoffs[i] * moderated_weight(i) = |c|^2 * expected_utility(action,
// mind.vector()).
double moderated_expected_utility(const MindState& mind, const StateVector& state,
                                  const PayoffAction& action);

enum class WeightMode {
  raw,         // weights as-is; they sum to |c|^2
  normalized,  // divided by |c|^2; throws OrthogonalMindError when |c|^2 ~ 0
};

std::vector<double> moderated_distribution(const MindState& mind,
                                           const StateVector& state,
                                           WeightMode mode);

}  // namespace hsdt

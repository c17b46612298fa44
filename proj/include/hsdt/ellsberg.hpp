#pragma once
//
// Closed-form two-urn Ellsberg model on a two-outcome basis {black, white}.
//
// Urn 1 (known 50/50):        urn1 = (1/sqrt(2), 1/sqrt(2))
// Urn 2 (unknown mix):        urn2(x) = (x, sqrt(1-x^2))
// Mind state about Urn 2:     mind2(y, d) = (y, e^{id} sqrt(1-y^2))
//
// The squared overlap between mind and urn-2 state carries an interference
// term in the phase d:
//
//   |c_x|^2 = 1 - x^2 - y^2 + 2 x^2 y^2
//             + 2 x y sqrt((1-x^2)(1-y^2)) cos d.
//
// Ellsberg behavior (both bets placed on the known urn) occurs exactly when
// the urn-1 utility (u100+u0)/2 strictly exceeds both moderated urn-2 bet
// utilities; for payoffs (0, 1) this is the pair of conditions
// 1/2 > |c_x|^2 y^2 and 1/2 > |c_x|^2 (1-y^2).
//
// ellsberg_predicate is evaluated tens of millions of times by the region
// quadrature; it is pure, reentrant and allocation-free.

#include <vector>

#include "hsdt/hilbert.hpp"
#include "hsdt/mind.hpp"

namespace hsdt {

inline constexpr double kPi = 3.14159265358979323846;

// One point of the model's parameter box [0,1] x [0,1] x [0,pi], plus the
// two bet payoffs in utility units (u100 for the winning color, u0
// otherwise).
struct EllsbergPoint {
  double x = 0.0;  // objective urn-2 black amplitude
  double y = 0.0;  // subjective mind amplitude
  double d = 0.0;  // mind phase, radians
  double u0 = 0.0;
  double u100 = 1.0;

  // Throws DomainError when outside the parameter box or u100 <= u0.
  void validate() const;
};

enum class Urn { urn1, urn2 };
enum class Bet { black, white };

StateVector urn1_state();

// (x, sqrt(1-x^2)); black-ball probability x^2.
StateVector urn2_state(double x);

// (y, e^{id} sqrt(1-y^2)) with its cached projector.
MindState mind2_state(double y, double d);

// |c_x|^2 in closed form; matches |inner(mind2(y,d), urn2(x))|^2 to 1e-12.
double overlap_sq(const EllsbergPoint& p);

// Mind-moderated expected utility of a bet. Urn 1 is judged through a mind
// of subjective certainty (mind = urn1 state), giving (u100+u0)/2 for either
// bet; urn 2 gives |c_x|^2 (y^2 u_win + (1-y^2) u_lose).
double bet_utility(Urn urn, Bet bet, const EllsbergPoint& p);

// The no-mind-state comparison: preferring urn 1 for the black bet needs
// 1/2 > x^2, preferring it for the white bet needs 1/2 < x^2. Both can never
// hold at once, which is exactly why the observed both-bets-on-urn-1 pattern
// has no expected-utility rationalization.
struct ClassicalPreference {
  bool prefers_urn1_black = false;
  bool prefers_urn1_white = false;
};
ClassicalPreference classical_condition(double x);

// True iff the point produces Ellsberg behavior: urn 1 strictly preferred
// for both bets.
bool ellsberg_predicate(const EllsbergPoint& p);

// x_k = sqrt(k/n) for k = 0..n: the urn-2 amplitudes whose black-ball
// probability is exactly k/n, for an urn of n balls.
std::vector<double> discrete_compositions(int n = 100);

}  // namespace hsdt

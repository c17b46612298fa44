#include "hsdt/ellsberg.hpp"

#include <cmath>
#include <string>

namespace hsdt {

namespace {

void require_unit_interval(double v, const char* name) {
  if (!std::isfinite(v) || v < 0.0 || v > 1.0)
    throw DomainError(std::string(name) + " must lie in [0, 1], got " +
                      std::to_string(v));
}

void require_phase(double d) {
  if (!std::isfinite(d) || d < 0.0 || d > kPi)
    throw DomainError("phase d must lie in [0, pi], got " + std::to_string(d));
}

}  // namespace

void EllsbergPoint::validate() const {
  require_unit_interval(x, "x");
  require_unit_interval(y, "y");
  require_phase(d);
  if (!std::isfinite(u0) || !std::isfinite(u100) || !(u100 > u0))
    throw DomainError("payoff utilities must satisfy u100 > u0");
}

StateVector urn1_state() {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return make_state({Complex(inv_sqrt2, 0.0), Complex(inv_sqrt2, 0.0)});
}

StateVector urn2_state(double x) {
  require_unit_interval(x, "x");
  return make_state({Complex(x, 0.0), Complex(std::sqrt(1.0 - x * x), 0.0)});
}

MindState mind2_state(double y, double d) {
  require_unit_interval(y, "y");
  require_phase(d);
  const double white_amp = std::sqrt(1.0 - y * y);
  return MindState(make_state(
      {Complex(y, 0.0), Complex(white_amp * std::cos(d), white_amp * std::sin(d))}));
}

double overlap_sq(const EllsbergPoint& p) {
  p.validate();
  const double cross =
      2.0 * p.x * p.y * std::sqrt((1.0 - p.x * p.x) * (1.0 - p.y * p.y));
  return 1.0 - p.x * p.x - p.y * p.y + 2.0 * p.x * p.x * p.y * p.y +
         cross * std::cos(p.d);
}

double bet_utility(Urn urn, Bet bet, const EllsbergPoint& p) {
  p.validate();
  if (urn == Urn::urn1) return 0.5 * (p.u100 + p.u0);
  const double c2 = overlap_sq(p);
  const double black_weight = p.y * p.y;
  return bet == Bet::black
             ? c2 * (black_weight * p.u100 + (1.0 - black_weight) * p.u0)
             : c2 * (black_weight * p.u0 + (1.0 - black_weight) * p.u100);
}

ClassicalPreference classical_condition(double x) {
  require_unit_interval(x, "x");
  return ClassicalPreference{0.5 > x * x, 0.5 < x * x};
}

bool ellsberg_predicate(const EllsbergPoint& p) {
  const double urn1 = bet_utility(Urn::urn1, Bet::black, p);
  const double c2 = overlap_sq(p);
  const double black_weight = p.y * p.y;
  const double urn2_black =
      c2 * (black_weight * p.u100 + (1.0 - black_weight) * p.u0);
  const double urn2_white =
      c2 * (black_weight * p.u0 + (1.0 - black_weight) * p.u100);
  return urn1 > urn2_black && urn1 > urn2_white;
}

std::vector<double> discrete_compositions(int n) {
  if (n < 1) throw DomainError("discrete_compositions: n must be >= 1");
  std::vector<double> xs(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    xs[static_cast<std::size_t>(k)] =
        std::sqrt(static_cast<double>(k) / static_cast<double>(n));
  return xs;
}

}  // namespace hsdt

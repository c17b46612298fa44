#include <cmath>
#include <vector>

#include "doctest.h"
#include "hsdt/hilbert.hpp"
#include "test_support.hpp"

using namespace hsdt;
using hsdt::testing::TestRng;
using hsdt::testing::random_hermitian;
using hsdt::testing::random_state;
using hsdt::testing::with_global_phase;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kPiLocal = 3.14159265358979323846;

StateVector two_state(double a0, double a1) {
  return make_state({Complex(a0, 0.0), Complex(a1, 0.0)});
}

// (y, e^{id} sqrt(1-y^2)) built by hand, independent of the ellsberg module.
StateVector mind_vector(double y, double d) {
  const double w = std::sqrt(1.0 - y * y);
  return make_state({Complex(y, 0.0), Complex(w * std::cos(d), w * std::sin(d))});
}

}  // namespace

TEST_CASE("make_state basis and renormalization") {
  const StateVector black = two_state(1.0, 0.0);
  CHECK(black.dim() == 2);
  CHECK(black[0] == Complex(1.0, 0.0));
  CHECK(black[1] == Complex(0.0, 0.0));
  CHECK_FALSE(black.was_renormalized());

  const StateVector urn1 = two_state(kInvSqrt2, kInvSqrt2);
  CHECK(urn1[0].real() == doctest::Approx(kInvSqrt2).epsilon(1e-15));

  const StateVector scaled = two_state(2.0, 0.0);
  CHECK(scaled[0] == Complex(1.0, 0.0));
  CHECK(scaled.was_renormalized());
}

TEST_CASE("make_state rejects bad input") {
  CHECK_THROWS_AS(make_state({Complex(0.0, 0.0), Complex(0.0, 0.0)}),
                  NormalizationError);
  CHECK_THROWS_AS(make_state({Complex(std::nan(""), 0.0)}), InvalidAmplitude);
  CHECK_THROWS_AS(make_state({}), DimMismatch);
}

TEST_CASE("make_state normalizes random vectors to 1e-12") {
  TestRng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = rng.uniform_int(1, 8);
    const StateVector v = random_state(rng, dim);
    double norm_sq = 0.0;
    for (int i = 0; i < v.dim(); ++i) norm_sq += std::norm(v[i]);
    CHECK(std::abs(norm_sq - 1.0) <= 1e-12);
  }
}

TEST_CASE("inner products in Dirac convention") {
  const StateVector black = two_state(1.0, 0.0);
  const StateVector white = two_state(0.0, 1.0);
  CHECK(inner(black, white) == Complex(0.0, 0.0));
  CHECK(inner(white, black) == Complex(0.0, 0.0));

  const StateVector urn1 = two_state(kInvSqrt2, kInvSqrt2);
  CHECK(std::abs(inner(urn1, urn1) - Complex(1.0, 0.0)) <= 1e-15);

  // <mind(0.8, d)|urn2(0.6)> = 0.48 + 0.48 e^{-id}
  const StateVector urn2 = two_state(0.6, 0.8);
  for (double d : {0.0, 1.1, 2.7}) {
    const Complex c = inner(mind_vector(0.8, d), urn2);
    const Complex expected = 0.48 + 0.48 * Complex(std::cos(d), -std::sin(d));
    CHECK(std::abs(c - expected) <= 1e-14);
  }
  CHECK(inner(mind_vector(0.8, 0.0), urn2).real() == doctest::Approx(0.96));

  CHECK_THROWS_AS(inner(black, make_state({Complex(1.0, 0.0)})), DimMismatch);
}

TEST_CASE("inner is conjugate-symmetric") {
  TestRng rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const int dim = rng.uniform_int(1, 8);
    const StateVector a = random_state(rng, dim);
    const StateVector b = random_state(rng, dim);
    CHECK(std::abs(inner(a, b) - std::conj(inner(b, a))) <= 1e-14);
  }
}

TEST_CASE("projector_onto matches the closed forms") {
  const LinearOperator pb = projector_onto(two_state(1.0, 0.0));
  CHECK(pb.at(0, 0) == Complex(1.0, 0.0));
  CHECK(pb.at(0, 1) == Complex(0.0, 0.0));
  CHECK(pb.at(1, 0) == Complex(0.0, 0.0));
  CHECK(pb.at(1, 1) == Complex(0.0, 0.0));

  const LinearOperator pw = projector_onto(two_state(0.0, 1.0));
  CHECK(pw.at(1, 1) == Complex(1.0, 0.0));
  CHECK(pw.at(0, 0) == Complex(0.0, 0.0));

  const double y = 0.35, d = 2.1;
  const LinearOperator pm = projector_onto(mind_vector(y, d));
  const double w = std::sqrt(1.0 - y * y);
  CHECK(std::abs(pm.at(0, 0) - Complex(y * y, 0.0)) <= 1e-15);
  CHECK(std::abs(pm.at(1, 1) - Complex(1.0 - y * y, 0.0)) <= 1e-15);
  CHECK(std::abs(pm.at(0, 1) - y * w * Complex(std::cos(d), -std::sin(d))) <= 1e-15);
  CHECK(std::abs(pm.at(1, 0) - y * w * Complex(std::cos(d), std::sin(d))) <= 1e-15);
}

TEST_CASE("projectors of random unit vectors have unit trace and P^2 = P") {
  TestRng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const int dim = rng.uniform_int(1, 8);
    const LinearOperator p = projector_onto(random_state(rng, dim));
    Complex trace(0.0, 0.0);
    for (int i = 0; i < dim; ++i) trace += p.at(i, i);
    CHECK(std::abs(trace - Complex(1.0, 0.0)) <= 1e-12);
    CHECK(is_projector(p));
  }
}

TEST_CASE("basis projectors and completeness") {
  const LinearOperator pb = basis_projector(0, 2);
  CHECK(pb.at(0, 0) == Complex(1.0, 0.0));
  CHECK(pb.at(1, 1) == Complex(0.0, 0.0));
  const LinearOperator pw = basis_projector(1, 2);
  CHECK(pw.at(1, 1) == Complex(1.0, 0.0));

  for (int dim : {1, 2, 3, 7}) {
    LinearOperator sum(dim);
    for (int i = 0; i < dim; ++i) sum = sum + basis_projector(i, dim);
    CHECK(max_abs_entry_diff(sum, LinearOperator::identity(dim)) == 0.0);
  }

  CHECK_THROWS_AS(basis_projector(2, 2), DimMismatch);
  CHECK_THROWS_AS(basis_projector(-1, 2), DimMismatch);
}

TEST_CASE("apply projects without renormalizing") {
  const StateVector urn1 = two_state(kInvSqrt2, kInvSqrt2);
  const auto projected = apply(basis_projector(0, 2), urn1);
  CHECK(std::abs(projected[0] - Complex(kInvSqrt2, 0.0)) <= 1e-15);
  CHECK(projected[1] == Complex(0.0, 0.0));
  // shrunken, not unit length
  CHECK(std::norm(projected[0]) + std::norm(projected[1]) ==
        doctest::Approx(0.5).epsilon(1e-12));

  const StateVector urn2 = two_state(0.6, 0.8);
  const auto same = apply(LinearOperator::identity(2), urn2);
  CHECK(same[0] == urn2[0]);
  CHECK(same[1] == urn2[1]);

  // P_M |urn2(x)> = c |M> with c = x y + sqrt(1-x^2) sqrt(1-y^2) at d = 0.
  for (double x : {0.2, 0.6, 0.9}) {
    for (double y : {0.1, 0.5, 0.8}) {
      const StateVector state = two_state(x, std::sqrt(1.0 - x * x));
      const StateVector mind = mind_vector(y, 0.0);
      const auto moderated = apply(projector_onto(mind), state);
      const double c = x * y + std::sqrt((1.0 - x * x) * (1.0 - y * y));
      CHECK(std::abs(moderated[0] - c * mind[0]) <= 1e-14);
      CHECK(std::abs(moderated[1] - c * mind[1]) <= 1e-14);
    }
  }

  CHECK_THROWS_AS(apply(basis_projector(0, 3), urn1), DimMismatch);
}

TEST_CASE("expectation values") {
  const StateVector urn1 = two_state(kInvSqrt2, kInvSqrt2);
  CHECK(expectation(urn1, basis_projector(0, 2)) ==
        doctest::Approx(0.5).epsilon(1e-14));

  for (double x : {0.0, 0.3, 0.6, 1.0}) {
    const StateVector urn2 = two_state(x, std::sqrt(1.0 - x * x));
    CHECK(std::abs(expectation(urn2, basis_projector(0, 2)) - x * x) <= 1e-14);
  }

  const StateVector white = two_state(0.0, 1.0);
  CHECK(expectation(white, basis_projector(0, 2)) == 0.0);

  LinearOperator skew(2);
  skew.at(0, 1) = Complex(1.0, 0.0);  // not Hermitian
  CHECK_THROWS_AS(expectation(white, skew), HermiticityError);
  CHECK_THROWS_AS(expectation(make_state({Complex(1.0, 0.0)}), basis_projector(0, 2)),
                  DimMismatch);
}

TEST_CASE("expectation is invariant under a global phase") {
  TestRng rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const int dim = rng.uniform_int(1, 8);
    const StateVector v = random_state(rng, dim);
    const LinearOperator op = random_hermitian(rng, dim);
    const double phi = rng.uniform(0.0, 2.0 * kPiLocal);
    CHECK(std::abs(expectation(with_global_phase(v, phi), op) -
                   expectation(v, op)) <= 1e-12);
  }
}

TEST_CASE("expectations over the basis projectors sum to one") {
  TestRng rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = rng.uniform_int(1, 8);
    const StateVector v = random_state(rng, dim);
    double total = 0.0;
    for (int i = 0; i < dim; ++i) total += expectation(v, basis_projector(i, dim));
    CHECK(std::abs(total - 1.0) <= 1e-12);
  }
}

TEST_CASE("weighted projector sums") {
  const std::vector<LinearOperator> basis = {basis_projector(0, 2),
                                             basis_projector(1, 2)};
  const std::vector<double> bet_black = {1.0, 0.0};
  const LinearOperator a_b = weighted_projector_sum(bet_black, basis);
  CHECK(a_b.at(0, 0) == Complex(1.0, 0.0));
  CHECK(a_b.at(1, 1) == Complex(0.0, 0.0));

  const std::vector<double> ones = {1.0, 1.0};
  CHECK(max_abs_entry_diff(weighted_projector_sum(ones, basis),
                           LinearOperator::identity(2)) == 0.0);

  // 100 on even indices over a dim-100 basis
  std::vector<LinearOperator> projs;
  std::vector<double> weights;
  for (int i = 0; i < 100; ++i) {
    projs.push_back(basis_projector(i, 100));
    weights.push_back(i % 2 == 0 ? 100.0 : 0.0);
  }
  const LinearOperator even_bet = weighted_projector_sum(weights, projs);
  CHECK(even_bet.at(0, 0) == Complex(100.0, 0.0));
  CHECK(even_bet.at(1, 1) == Complex(0.0, 0.0));
  CHECK(even_bet.at(98, 98) == Complex(100.0, 0.0));

  const std::vector<double> short_weights = {1.0};
  CHECK_THROWS_AS(weighted_projector_sum(short_weights, basis), DimMismatch);
}

TEST_CASE("is_projector") {
  CHECK(is_projector(basis_projector(0, 2)));

  TestRng rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const double y = rng.u01();
    const double d = rng.uniform(0.0, kPiLocal);
    CHECK(is_projector(projector_onto(mind_vector(y, d))));
  }

  LinearOperator diag1(2);
  diag1.at(0, 0) = Complex(1.0, 0.0);
  CHECK(is_projector(diag1));
  LinearOperator diag2(2);
  diag2.at(0, 0) = Complex(2.0, 0.0);
  CHECK_FALSE(is_projector(diag2));
}

#pragma once
//
// Finite-dimensional complex Hilbert space primitives: normalized state
// vectors over an outcome basis, projectors, Hermitian operators, and
// expectation values.
//
// Dirac convention throughout:
//   inner(bra, ket) = sum_i conj(bra_i) * ket_i
// (conjugate-linear in the first argument), so that for a normalized v the
// expectation <v|P_i|v> of a basis projector is the probability |v_i|^2.
//
// All values are immutable after construction and every operation is a pure
// function; instances can be shared freely across threads.

#include <complex>
#include <span>
#include <vector>

#include "hsdt/errors.hpp"

namespace hsdt {

using Complex = std::complex<double>;

// Numeric slack for contracts that hold exactly in the algebra:
// normalization of states, Hermiticity of operators, idempotence of
// projectors.
struct Tolerances {
  double norm_tol = 1e-12;
  double herm_tol = 1e-10;
  double idem_tol = 1e-12;
};

class StateVector;
StateVector make_state(std::vector<Complex> amplitudes, const Tolerances& tol);

// Unit-norm complex amplitude vector over the outcome basis.
// Obtain instances through make_state, which validates and renormalizes;
// the normalization invariant (sum |amp|^2 = 1 within norm_tol) then holds
// by construction.
class StateVector {
 public:
  int dim() const { return static_cast<int>(amps_.size()); }
  const Complex& operator[](int i) const { return amps_[static_cast<std::size_t>(i)]; }
  std::span<const Complex> amplitudes() const { return amps_; }

  // True when make_state had to rescale by more than norm_tol.
  bool was_renormalized() const { return renormalized_; }

 private:
  friend StateVector make_state(std::vector<Complex> amplitudes, const Tolerances& tol);
  StateVector(std::vector<Complex> amps, bool renormalized)
      : amps_(std::move(amps)), renormalized_(renormalized) {}

  std::vector<Complex> amps_;
  bool renormalized_ = false;
};

// Square complex matrix on the outcome space (projectors, payoff-weighted
// action operators). Row-major dense storage; dimensions stay small (the
// shipped scenarios use 2 and 100).
class LinearOperator {
 public:
  explicit LinearOperator(int dim);
  static LinearOperator identity(int dim);

  int dim() const { return dim_; }
  Complex& at(int r, int c) { return entries_[index(r, c)]; }
  const Complex& at(int r, int c) const { return entries_[index(r, c)]; }
  std::span<const Complex> entries() const { return entries_; }

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(dim_) +
           static_cast<std::size_t>(c);
  }
  int dim_ = 0;
  std::vector<Complex> entries_;
};

LinearOperator operator+(const LinearOperator& a, const LinearOperator& b);
LinearOperator operator*(const LinearOperator& a, const LinearOperator& b);
LinearOperator operator*(double scale, const LinearOperator& op);

bool is_hermitian(const LinearOperator& op, double tol = Tolerances{}.herm_tol);

// Largest entrywise |a_ij - b_ij|; the matrix norm used by the idempotence
// check.
double max_abs_entry_diff(const LinearOperator& a, const LinearOperator& b);

// Scales the input to unit norm. Throws InvalidAmplitude on non-finite
// entries, NormalizationError on the zero vector, DimMismatch on an empty
// vector.
StateVector make_state(std::vector<Complex> amplitudes, const Tolerances& tol = {});

// <bra|ket>, conjugate-linear in the first argument.
Complex inner(const StateVector& bra, const StateVector& ket);

// Rank-1 projector |v><v|; Hermitian with unit trace.
LinearOperator projector_onto(const StateVector& v);

// P_i = |i><i| for the i-th basis outcome; summing over all i gives the
// identity exactly (entries are 0 and 1).
LinearOperator basis_projector(int i, int dim);

// op|v> as a raw amplitude vector. Deliberately not renormalized: projected
// states carry their shrunken length, which downstream moderation relies on.
std::vector<Complex> apply(const LinearOperator& op, const StateVector& v);

// Real part of <v|op|v> for Hermitian op. Throws HermiticityError when op
// fails the Hermiticity tolerance or the residual imaginary part exceeds
// herm_tol.
double expectation(const StateVector& v, const LinearOperator& op,
                   const Tolerances& tol = {});

// sum_k weights[k] * projectors[k]; the payoff-weighted operator form of an
// action.
LinearOperator weighted_projector_sum(std::span<const double> weights,
                                      std::span<const LinearOperator> projectors);

// True iff op is Hermitian within herm_tol and satisfies op*op = op within
// idem_tol (max-entry norm).
bool is_projector(const LinearOperator& op, const Tolerances& tol = {});

}  // namespace hsdt

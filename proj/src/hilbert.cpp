#include "hsdt/hilbert.hpp"

#include <cmath>
#include <string>

namespace hsdt {

namespace {

bool finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

void require_same_dim(int a, int b, const char* what) {
  if (a != b) {
    throw DimMismatch(std::string(what) + ": dimension mismatch (" +
                      std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

LinearOperator::LinearOperator(int dim) : dim_(dim) {
  if (dim < 1) throw DimMismatch("LinearOperator: dim must be >= 1");
  entries_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim),
                  Complex(0.0, 0.0));
}

LinearOperator LinearOperator::identity(int dim) {
  LinearOperator op(dim);
  for (int i = 0; i < dim; ++i) op.at(i, i) = Complex(1.0, 0.0);
  return op;
}

LinearOperator operator+(const LinearOperator& a, const LinearOperator& b) {
  require_same_dim(a.dim(), b.dim(), "operator+");
  LinearOperator out(a.dim());
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) out.at(r, c) = a.at(r, c) + b.at(r, c);
  return out;
}

LinearOperator operator*(const LinearOperator& a, const LinearOperator& b) {
  require_same_dim(a.dim(), b.dim(), "operator*");
  const int n = a.dim();
  LinearOperator out(n);
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      const Complex arc = a.at(r, k);
      if (arc == Complex(0.0, 0.0)) continue;
      for (int c = 0; c < n; ++c) out.at(r, c) += arc * b.at(k, c);
    }
  }
  return out;
}

LinearOperator operator*(double scale, const LinearOperator& op) {
  LinearOperator out(op.dim());
  for (int r = 0; r < op.dim(); ++r)
    for (int c = 0; c < op.dim(); ++c) out.at(r, c) = scale * op.at(r, c);
  return out;
}

bool is_hermitian(const LinearOperator& op, double tol) {
  for (int r = 0; r < op.dim(); ++r) {
    for (int c = r; c < op.dim(); ++c) {
      const Complex diff = op.at(r, c) - std::conj(op.at(c, r));
      if (std::abs(diff) > tol) return false;
    }
  }
  return true;
}

double max_abs_entry_diff(const LinearOperator& a, const LinearOperator& b) {
  require_same_dim(a.dim(), b.dim(), "max_abs_entry_diff");
  double worst = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c)
      worst = std::max(worst, std::abs(a.at(r, c) - b.at(r, c)));
  return worst;
}

StateVector make_state(std::vector<Complex> amplitudes, const Tolerances& tol) {
  if (amplitudes.empty()) throw DimMismatch("make_state: empty amplitude vector");
  double norm_sq = 0.0;
  for (std::size_t i = 0; i < amplitudes.size(); ++i) {
    if (!finite(amplitudes[i])) {
      throw InvalidAmplitude("make_state: non-finite amplitude at index " +
                             std::to_string(i));
    }
    norm_sq += std::norm(amplitudes[i]);
  }
  const double norm = std::sqrt(norm_sq);
  if (!(norm > 0.0)) throw NormalizationError("make_state: zero vector");
  const bool renormalized = std::abs(norm - 1.0) > tol.norm_tol;
  if (norm != 1.0) {
    const double scale = 1.0 / norm;
    for (Complex& a : amplitudes) a *= scale;
  }
  return StateVector(std::move(amplitudes), renormalized);
}

Complex inner(const StateVector& bra, const StateVector& ket) {
  require_same_dim(bra.dim(), ket.dim(), "inner");
  Complex acc(0.0, 0.0);
  for (int i = 0; i < bra.dim(); ++i) acc += std::conj(bra[i]) * ket[i];
  return acc;
}

LinearOperator projector_onto(const StateVector& v) {
  LinearOperator p(v.dim());
  for (int r = 0; r < v.dim(); ++r)
    for (int c = 0; c < v.dim(); ++c) p.at(r, c) = v[r] * std::conj(v[c]);
  return p;
}

LinearOperator basis_projector(int i, int dim) {
  if (dim < 1) throw DimMismatch("basis_projector: dim must be >= 1");
  if (i < 0 || i >= dim) {
    throw DimMismatch("basis_projector: index " + std::to_string(i) +
                      " out of range for dim " + std::to_string(dim));
  }
  LinearOperator p(dim);
  p.at(i, i) = Complex(1.0, 0.0);
  return p;
}

std::vector<Complex> apply(const LinearOperator& op, const StateVector& v) {
  require_same_dim(op.dim(), v.dim(), "apply");
  std::vector<Complex> out(static_cast<std::size_t>(op.dim()), Complex(0.0, 0.0));
  for (int r = 0; r < op.dim(); ++r) {
    Complex acc(0.0, 0.0);
    for (int c = 0; c < op.dim(); ++c) acc += op.at(r, c) * v[c];
    out[static_cast<std::size_t>(r)] = acc;
  }
  return out;
}

double expectation(const StateVector& v, const LinearOperator& op,
                   const Tolerances& tol) {
  require_same_dim(op.dim(), v.dim(), "expectation");
  if (!is_hermitian(op, tol.herm_tol))
    throw HermiticityError("expectation: operator is not Hermitian");
  Complex acc(0.0, 0.0);
  for (int r = 0; r < op.dim(); ++r) {
    Complex row(0.0, 0.0);
    for (int c = 0; c < op.dim(); ++c) row += op.at(r, c) * v[c];
    acc += std::conj(v[r]) * row;
  }
  if (std::abs(acc.imag()) > tol.herm_tol) {
    throw HermiticityError("expectation: residual imaginary part " +
                           std::to_string(acc.imag()));
  }
  return acc.real();
}

LinearOperator weighted_projector_sum(std::span<const double> weights,
                                      std::span<const LinearOperator> projectors) {
  if (weights.size() != projectors.size())
    throw DimMismatch("weighted_projector_sum: weights/projectors length mismatch");
  if (projectors.empty())
    throw DimMismatch("weighted_projector_sum: empty operator list");
  const int n = projectors.front().dim();
  LinearOperator out(n);
  for (std::size_t k = 0; k < projectors.size(); ++k) {
    require_same_dim(projectors[k].dim(), n, "weighted_projector_sum");
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        out.at(r, c) += weights[k] * projectors[k].at(r, c);
  }
  return out;
}

bool is_projector(const LinearOperator& op, const Tolerances& tol) {
  if (!is_hermitian(op, tol.herm_tol)) return false;
  return max_abs_entry_diff(op * op, op) <= tol.idem_tol;
}

}  // namespace hsdt

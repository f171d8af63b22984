#pragma once

#include "rbmod/matrix.hpp"
#include "rbmod/polynomial.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace rbmod {

/// Basis of the null space, one vector per free column in ascending order,
/// with a 1 in the free position and the negated reduced entries at pivots.
std::vector<Vector> kernel_basis(const DenseMatrix& m);

std::size_t rank(const DenseMatrix& m);

/// Throws NonSquare / Singular.
DenseMatrix inverse(const DenseMatrix& m);

/// det(xI - m), monic of degree rows(m). Faddeev-LeVerrier.
Polynomial char_poly(const DenseMatrix& m);

struct RootMultiplicity {
  Rational root;
  std::size_t multiplicity;
  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

/// Rational roots in ascending order. Candidates come from the rational root
/// test on the primitive integer form; each is confirmed by exact deflation.
std::vector<RootMultiplicity> rational_roots(const Polynomial& p);

/// True when char_poly(m) factors into rational linear factors.
bool has_rational_spectrum(const DenseMatrix& m);

struct JordanBlock {
  Rational eigenvalue;
  std::size_t size;
  friend bool operator==(const JordanBlock&, const JordanBlock&) = default;
};

/// m = basis * J * basis^{-1}, J the block-diagonal assembly of `blocks`
/// (eigenvalue ascending, then size descending).
struct JordanDecomposition {
  DenseMatrix basis;
  std::vector<JordanBlock> blocks;
};

DenseMatrix assemble_jordan(std::span<const JordanBlock> blocks);

/// Throws NonSquare, or IrrationalSpectrum when the spectrum is not rational.
JordanDecomposition jordan_form(const DenseMatrix& m);

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

/// Dimension of the span of `vectors`, each of size `length`.
std::size_t span_rank(std::span<const Vector> vectors, std::size_t length);
/// span(a) == span(b), decided by rank(a) == rank(b) == rank(a ∪ b).
bool same_span(std::span<const Vector> a, std::span<const Vector> b, std::size_t length);
/// span(outer) contains span(inner).
bool span_contains(std::span<const Vector> outer, std::span<const Vector> inner,
                   std::size_t length);

}  // namespace rbmod

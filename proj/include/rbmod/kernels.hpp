#pragma once

// Hot loops of the exact engine: matrix product and Gauss-Jordan reduction.
// `parallel` spreads independent rows over OpenMP threads; `serial` is the
// reference implementation kept for testing and benchmarking. Both produce
// bit-identical results because the arithmetic is exact and the pivot rule
// does not depend on scheduling.

#include "rbmod/matrix.hpp"

#include <cstddef>
#include <vector>

namespace rbmod::kernels {

struct EchelonForm {
  DenseMatrix reduced;               // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

namespace serial {
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
EchelonForm rref(DenseMatrix m);
}  // namespace serial

namespace parallel {
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
EchelonForm rref(DenseMatrix m);
}  // namespace parallel

// Rows below this count are not worth a parallel region.
inline constexpr std::size_t kParallelRowThreshold = 24;

/// Dispatching entry points used by the library.
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
EchelonForm rref(DenseMatrix m);

}  // namespace rbmod::kernels

#include "rbmod/kernels.hpp"

#include "rbmod/error.hpp"

#include <string>
#include <utility>

namespace rbmod::kernels {

namespace {

void require_conformable(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("product of " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
}

// c.row(i) = a.row(i) * b
void multiply_row(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c, std::size_t i) {
  auto out = c.row(i);
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const Rational& aik = a(i, k);
    if (aik.is_zero()) continue;
    const auto brow = b.row(k);
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (!brow[j].is_zero()) out[j] += aik * brow[j];
    }
  }
}

// Moves a pivot into row `r` for column `c` and scales it to 1.
// Returns false when the column has no nonzero entry at or below `r`.
bool prepare_pivot(DenseMatrix& m, std::size_t r, std::size_t c) {
  std::size_t p = r;
  while (p < m.rows() && m(p, c).is_zero()) ++p;
  if (p == m.rows()) return false;
  if (p != r) {
    auto a = m.row(p);
    auto b = m.row(r);
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(a[j], b[j]);
  }
  const Rational inv = m(r, c).inverse();
  auto pivot_row = m.row(r);
  for (std::size_t j = c; j < m.cols(); ++j) {
    if (!pivot_row[j].is_zero()) pivot_row[j] *= inv;
  }
  return true;
}

void eliminate_row(DenseMatrix& m, std::size_t target, std::size_t r, std::size_t c) {
  if (target == r || m(target, c).is_zero()) return;
  const Rational factor = m(target, c);
  const auto pivot_row = m.row(r);
  auto row = m.row(target);
  for (std::size_t j = c; j < m.cols(); ++j) {
    if (!pivot_row[j].is_zero()) row[j] -= factor * pivot_row[j];
  }
}

}  // namespace

namespace serial {

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  require_conformable(a, b);
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) multiply_row(a, b, c, i);
  return c;
}

EchelonForm rref(DenseMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    if (!prepare_pivot(m, r, c)) continue;
    for (std::size_t i = 0; i < m.rows(); ++i) eliminate_row(m, i, r, c);
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace serial

namespace parallel {

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  require_conformable(a, b);
  DenseMatrix c(a.rows(), b.cols());
  const auto n = static_cast<long>(a.rows());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) multiply_row(a, b, c, static_cast<std::size_t>(i));
  return c;
}

EchelonForm rref(DenseMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const auto n = static_cast<long>(m.rows());
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    if (!prepare_pivot(m, r, c)) continue;
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) eliminate_row(m, static_cast<std::size_t>(i), r, c);
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace parallel

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  return a.rows() >= kParallelRowThreshold ? parallel::multiply(a, b) : serial::multiply(a, b);
}

EchelonForm rref(DenseMatrix m) {
  return m.rows() >= kParallelRowThreshold ? parallel::rref(std::move(m))
                                           : serial::rref(std::move(m));
}

}  // namespace rbmod::kernels

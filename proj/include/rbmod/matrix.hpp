#pragma once

#include "rbmod/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

namespace rbmod {

using Vector = std::vector<Rational>;

/// Row-major dense matrix of exact rationals.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);
  DenseMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static DenseMatrix diagonal(std::span<const Rational> entries);
  /// Matrix unit: 1 at (r, c), zero elsewhere.
  static DenseMatrix unit(std::size_t rows, std::size_t cols, std::size_t r, std::size_t c);
  /// Vectors become columns; all must have length `rows`.
  static DenseMatrix from_columns(std::span<const Vector> columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;
  std::span<const Rational> entries() const { return data_; }

  DenseMatrix transpose() const;
  /// Submatrix of `nrows` x `ncols` starting at (r0, c0).
  DenseMatrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t r0, std::size_t c0, const DenseMatrix& m);

  bool is_zero() const;
  Rational trace() const;
  DenseMatrix pow(unsigned exponent) const;

  DenseMatrix& operator+=(const DenseMatrix& other);
  DenseMatrix& operator-=(const DenseMatrix& other);
  DenseMatrix& operator*=(const Rational& scalar);

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(DenseMatrix a, const Rational& s) { return a *= s; }
  friend DenseMatrix operator*(const Rational& s, DenseMatrix a) { return a *= s; }
  DenseMatrix operator-() const;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend Vector operator*(const DenseMatrix& a, const Vector& v);

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const DenseMatrix& m);

/// J_k(b): b on the diagonal, ones on the superdiagonal.
DenseMatrix jordan_block(std::size_t size, const Rational& eigenvalue);

/// Block-diagonal assembly in the given order.
DenseMatrix direct_sum(std::span<const DenseMatrix> blocks);

/// Column-stacking vectorization.
Vector vec(const DenseMatrix& m);
DenseMatrix unvec(const Vector& v, std::size_t rows, std::size_t cols);

bool is_zero(const Vector& v);
Vector scaled(const Vector& v, const Rational& s);

}  // namespace rbmod

#include "rbmod/matrix.hpp"

#include "rbmod/error.hpp"
#include "rbmod/kernels.hpp"

#include <string>

namespace rbmod {

namespace {

void require_same_shape(const DenseMatrix& a, const DenseMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(op) + ": " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                            "x" + std::to_string(b.cols()));
  }
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw DimensionMismatch("row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                              " entries, expected " + std::to_string(cols_));
    }
    data_.insert(data_.end(), row.begin(), row.end());
    ++r;
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const Rational> entries) {
  DenseMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

DenseMatrix DenseMatrix::unit(std::size_t rows, std::size_t cols, std::size_t r, std::size_t c) {
  DenseMatrix m(rows, cols);
  m(r, c) = 1;
  return m;
}

DenseMatrix DenseMatrix::from_columns(std::span<const Vector> columns, std::size_t rows) {
  DenseMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) {
      throw DimensionMismatch("column " + std::to_string(c) + " has length " +
                              std::to_string(columns[c].size()) + ", expected " +
                              std::to_string(rows));
    }
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector DenseMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

DenseMatrix DenseMatrix::block(std::size_t r0, std::size_t c0, std::size_t nrows,
                               std::size_t ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_) throw DimensionMismatch("block out of range");
  DenseMatrix b(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t c = 0; c < ncols; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void DenseMatrix::set_block(std::size_t r0, std::size_t c0, const DenseMatrix& m) {
  if (r0 + m.rows() > rows_ || c0 + m.cols() > cols_) {
    throw DimensionMismatch("set_block out of range");
  }
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

bool DenseMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Rational DenseMatrix::trace() const {
  if (!square()) throw NonSquare("trace of non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

DenseMatrix DenseMatrix::pow(unsigned exponent) const {
  if (!square()) throw NonSquare("power of non-square matrix");
  DenseMatrix result = identity(rows_);
  DenseMatrix base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& other) {
  require_same_shape(*this, other, "add");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& other) {
  require_same_shape(*this, other, "subtract");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(const Rational& scalar) {
  for (auto& x : data_) x *= scalar;
  return *this;
}

DenseMatrix DenseMatrix::operator-() const {
  DenseMatrix m = *this;
  for (auto& x : m.data_) x = -x;
  return m;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  return kernels::multiply(a, b);
}

Vector operator*(const DenseMatrix& a, const Vector& v) {
  if (a.cols() != v.size()) {
    throw DimensionMismatch("matrix-vector product: " + std::to_string(a.cols()) + " columns vs " +
                            std::to_string(v.size()) + " entries");
  }
  Vector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!a(r, c).is_zero() && !v[c].is_zero()) out[r] += a(r, c) * v[c];
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const DenseMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

DenseMatrix jordan_block(std::size_t size, const Rational& eigenvalue) {
  DenseMatrix j(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    j(i, i) = eigenvalue;
    if (i + 1 < size) j(i, i + 1) = 1;
  }
  return j;
}

DenseMatrix direct_sum(std::span<const DenseMatrix> blocks) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  DenseMatrix m(rows, cols);
  std::size_t r = 0;
  std::size_t c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

Vector vec(const DenseMatrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) v.push_back(m(r, c));
  return v;
}

DenseMatrix unvec(const Vector& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw DimensionMismatch("unvec: length mismatch");
  DenseMatrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = v[c * rows + r];
  return m;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector scaled(const Vector& v, const Rational& s) {
  Vector out = v;
  for (auto& x : out) x *= s;
  return out;
}

}  // namespace rbmod

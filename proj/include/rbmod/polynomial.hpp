#pragma once

#include "rbmod/matrix.hpp"
#include "rbmod/rational.hpp"

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace rbmod {

/// Univariate polynomial with rational coefficients, index = degree.
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(std::size_t degree, const Rational& c = 1);
  /// x - root
  static Polynomial linear_factor(const Rational& root);

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Zero beyond the degree.
  Rational coefficient(std::size_t n) const;
  std::span<const Rational> coefficients() const { return coeffs_; }
  Rational leading() const;
  Rational constant_term() const { return coefficient(0); }

  Rational evaluate(const Rational& x) const;
  /// f(M) by Horner; constants act as multiples of the identity.
  DenseMatrix evaluate(const DenseMatrix& m) const;

  /// Divides by (x - root); returns the quotient and stores the remainder.
  Polynomial deflate(const Rational& root, Rational& remainder) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace rbmod

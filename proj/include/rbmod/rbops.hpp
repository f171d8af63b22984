#pragma once

// Monomial Rota-Baxter operators on the truncated polynomial ring and the
// checks that tie them to matrix pairs (A acts as x, B acts as p).

#include "rbmod/matrix.hpp"
#include "rbmod/polynomial.hpp"
#include "rbmod/rational.hpp"

#include <functional>
#include <optional>
#include <string_view>
#include <utility>

namespace rbmod {

inline constexpr unsigned kDefaultTruncation = 12;

/// Operator families on k[x] (P1..P4) and the restriction to x k[x] (XKx).
///   P1: x^n -> (-w)^{1-n} b^n        P2: x^n -> -w x^n
///   P3: 1 -> 0, x^n -> -w x^n        P4: 1 -> -w, x^n -> 0
///   XKx: x^n -> -w x^n on n >= 1
enum class Family { P1, P2, P3, P4, XKx };

/// Which matrix equations apply to a module pair.
enum class Flavor { KxP1, KxP2, KxP3, KxP4, XKx };

std::string_view to_string(Family f);
std::string_view to_string(Flavor f);
Family family_of(Flavor f);
Flavor flavor_of(Family f);

struct RBOperator {
  Family family = Family::P2;
  Rational weight = 1;
  std::optional<Rational> b;  // P1 only
  unsigned truncation = kDefaultTruncation;

  /// Validates weight != 0, b present and nonzero exactly for P1, N >= 1.
  static RBOperator make(Family family, Rational weight, std::optional<Rational> b = std::nullopt,
                         unsigned truncation = kDefaultTruncation);

  /// Lowest degree in the domain: 1 for XKx, 0 otherwise.
  unsigned first_degree() const { return family == Family::XKx ? 1U : 0U; }
  Polynomial image_of_monomial(unsigned n) const;
};

struct ModulePair {
  DenseMatrix A;
  DenseMatrix B;
  Flavor flavor = Flavor::XKx;

  /// Throws NonSquare / DimensionMismatch.
  static ModulePair make(DenseMatrix A, DenseMatrix B, Flavor flavor);
  std::size_t dim() const { return A.rows(); }
};

/// Throws TruncationExceeded (deg f > N) and ConstantTermNotAllowed (XKx).
Polynomial apply_operator(const RBOperator& op, const Polynomial& f);

/// Image of x^n under a monomial-wise linear operator. Used for perturbed
/// operators in negative controls.
using MonomialImage = std::function<Polynomial(unsigned)>;

struct IdentityReport {
  bool holds = true;
  std::optional<std::pair<unsigned, unsigned>> first_failure;
};

/// P(r)P(s) = P(P(r)s) + P(rP(s)) + w P(rs) on all (x^m, x^n), m + n <= N,
/// scanned with m ascending, then n ascending.
IdentityReport verify_rb_identity(const RBOperator& op);
IdentityReport verify_rb_identity(const MonomialImage& image, const Rational& weight,
                                  unsigned first_degree, unsigned truncation);

/// (lambda^{-1} P, B / lambda). P1's constant becomes b / lambda.
std::pair<RBOperator, ModulePair> normalize_weight(const RBOperator& op, const ModulePair& mp);
/// Inverse of normalize_weight: takes a weight-1 operator to weight lambda.
std::pair<RBOperator, ModulePair> rescale_weight(const RBOperator& unit_op, const ModulePair& mp,
                                                 const Rational& lambda);

struct AxiomReport {
  bool holds = true;
  std::optional<unsigned> first_failure;  // degree m of the failing x^m
};

/// P(f) p(v) = p(P(f) v) + p(f p(v)) + w p(f v) with f = x^m for every m in
/// the operator's domain up to its truncation, x^m acting as A^m and p as B.
/// Works for any weight; throws FlavorMismatch when the pair's flavor does
/// not belong to the operator family.
AxiomReport verify_module_axiom(const RBOperator& op, const ModulePair& mp);

/// Rota-Baxter identity for P + p on the truncated semidirect algebra
/// k[x]_{<=N} (+) M with (f,u)(g,v) = (fg, f.v + g.u).
bool semidirect_sum_check(const RBOperator& op, const ModulePair& mp);

/// Identities implied in the quotient algebras, as matrix equations:
///   KxP1/KxP4:          B A^m (-B)^k = B A^m
///   KxP2/KxP3/XKx:      (-B)^k A^m B = A^m B
/// for 1 <= k <= max_power and m up to max_degree (m >= 1 for XKx).
bool verify_derived_identities(const ModulePair& mp, unsigned max_degree, unsigned max_power);

}  // namespace rbmod

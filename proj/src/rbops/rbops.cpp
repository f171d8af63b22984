#include "rbmod/rbops.hpp"

#include "rbmod/error.hpp"

#include <string>
#include <vector>

namespace rbmod {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::P1: return "P1";
    case Family::P2: return "P2";
    case Family::P3: return "P3";
    case Family::P4: return "P4";
    case Family::XKx: return "XKx";
  }
  return "?";
}

std::string_view to_string(Flavor f) {
  switch (f) {
    case Flavor::KxP1: return "KxP1";
    case Flavor::KxP2: return "KxP2";
    case Flavor::KxP3: return "KxP3";
    case Flavor::KxP4: return "KxP4";
    case Flavor::XKx: return "XKx";
  }
  return "?";
}

Family family_of(Flavor f) {
  switch (f) {
    case Flavor::KxP1: return Family::P1;
    case Flavor::KxP2: return Family::P2;
    case Flavor::KxP3: return Family::P3;
    case Flavor::KxP4: return Family::P4;
    case Flavor::XKx: return Family::XKx;
  }
  return Family::XKx;
}

Flavor flavor_of(Family f) {
  switch (f) {
    case Family::P1: return Flavor::KxP1;
    case Family::P2: return Flavor::KxP2;
    case Family::P3: return Flavor::KxP3;
    case Family::P4: return Flavor::KxP4;
    case Family::XKx: return Flavor::XKx;
  }
  return Flavor::XKx;
}

RBOperator RBOperator::make(Family family, Rational weight, std::optional<Rational> b,
                            unsigned truncation) {
  if (weight.is_zero()) throw InvalidArgument("operator weight must be nonzero");
  if (truncation < 1) throw InvalidArgument("truncation degree must be at least 1");
  if (family == Family::P1) {
    if (!b || b->is_zero()) throw InvalidArgument("family P1 needs a nonzero constant b");
  } else if (b) {
    throw InvalidArgument("constant b is only meaningful for family P1");
  }
  return RBOperator{family, std::move(weight), std::move(b), truncation};
}

Polynomial RBOperator::image_of_monomial(unsigned n) const {
  switch (family) {
    case Family::P1:
      return Polynomial::constant((-weight).pow(1L - static_cast<long>(n)) *
                                  b.value_or(Rational(1)).pow(n));
    case Family::P2:
      return Polynomial::monomial(n, -weight);
    case Family::P3:
      return n == 0 ? Polynomial{} : Polynomial::monomial(n, -weight);
    case Family::P4:
      return n == 0 ? Polynomial::constant(-weight) : Polynomial{};
    case Family::XKx:
      if (n == 0) throw ConstantTermNotAllowed("x k[x] has no constant monomial");
      return Polynomial::monomial(n, -weight);
  }
  return {};
}

ModulePair ModulePair::make(DenseMatrix A, DenseMatrix B, Flavor flavor) {
  if (!A.square()) {
    throw NonSquare("A is " + std::to_string(A.rows()) + "x" + std::to_string(A.cols()));
  }
  if (!B.square()) {
    throw NonSquare("B is " + std::to_string(B.rows()) + "x" + std::to_string(B.cols()));
  }
  if (A.rows() != B.rows()) {
    throw DimensionMismatch("A is " + std::to_string(A.rows()) + "x" + std::to_string(A.cols()) +
                            " but B is " + std::to_string(B.rows()) + "x" +
                            std::to_string(B.cols()));
  }
  if (A.rows() == 0) throw InvalidArgument("module dimension must be at least 1");
  return ModulePair{std::move(A), std::move(B), flavor};
}

namespace {

Polynomial apply_image(const MonomialImage& image, const Polynomial& f) {
  Polynomial out;
  const auto coeffs = f.coefficients();
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (!coeffs[n].is_zero()) out += image(static_cast<unsigned>(n)) * coeffs[n];
  }
  return out;
}

MonomialImage image_of(const RBOperator& op) {
  return [op](unsigned n) { return op.image_of_monomial(n); };
}

}  // namespace

Polynomial apply_operator(const RBOperator& op, const Polynomial& f) {
  if (f.degree() > static_cast<long>(op.truncation)) {
    throw TruncationExceeded("degree " + std::to_string(f.degree()) + " exceeds truncation " +
                             std::to_string(op.truncation));
  }
  if (op.family == Family::XKx && !f.constant_term().is_zero()) {
    throw ConstantTermNotAllowed("x k[x] element with nonzero constant term");
  }
  return apply_image(image_of(op), f);
}

IdentityReport verify_rb_identity(const MonomialImage& image, const Rational& weight,
                                  unsigned first_degree, unsigned truncation) {
  for (unsigned m = first_degree; m <= truncation; ++m) {
    const Polynomial pr = image(m);
    const Polynomial r = Polynomial::monomial(m);
    for (unsigned n = first_degree; m + n <= truncation; ++n) {
      const Polynomial ps = image(n);
      const Polynomial s = Polynomial::monomial(n);
      const Polynomial lhs = pr * ps;
      const Polynomial rhs = apply_image(image, pr * s) + apply_image(image, r * ps) +
                             image(m + n) * weight;
      if (lhs != rhs) return {false, std::pair{m, n}};
    }
  }
  return {};
}

IdentityReport verify_rb_identity(const RBOperator& op) {
  return verify_rb_identity(image_of(op), op.weight, op.first_degree(), op.truncation);
}

std::pair<RBOperator, ModulePair> normalize_weight(const RBOperator& op, const ModulePair& mp) {
  if (op.weight.is_zero()) throw InvalidArgument("weight must be nonzero");
  const Rational inv = op.weight.inverse();
  RBOperator unit = op;
  unit.weight = 1;
  if (unit.b) unit.b = *unit.b * inv;
  ModulePair scaled = mp;
  scaled.B *= inv;
  return {std::move(unit), std::move(scaled)};
}

std::pair<RBOperator, ModulePair> rescale_weight(const RBOperator& unit_op, const ModulePair& mp,
                                                 const Rational& lambda) {
  if (unit_op.weight != Rational(1)) throw InvalidArgument("rescale_weight expects weight 1");
  if (lambda.is_zero()) throw InvalidArgument("weight must be nonzero");
  RBOperator op = unit_op;
  op.weight = lambda;
  if (op.b) op.b = *op.b * lambda;
  ModulePair scaled = mp;
  scaled.B *= lambda;
  return {std::move(op), std::move(scaled)};
}

namespace {

void require_flavor(const RBOperator& op, const ModulePair& mp) {
  if (family_of(mp.flavor) != op.family) {
    throw FlavorMismatch("module flavor " + std::string(to_string(mp.flavor)) +
                         " does not match operator family " + std::string(to_string(op.family)));
  }
}

}  // namespace

AxiomReport verify_module_axiom(const RBOperator& op, const ModulePair& mp) {
  require_flavor(op, mp);
  const auto& A = mp.A;
  const auto& B = mp.B;
  DenseMatrix power = DenseMatrix::identity(mp.dim());  // A^m
  for (unsigned m = 0; m <= op.truncation; ++m) {
    if (m > 0) power = power * A;
    if (m < op.first_degree()) continue;
    const DenseMatrix pa = op.image_of_monomial(m).evaluate(A);
    const DenseMatrix bf = B * power;
    const DenseMatrix lhs = pa * B;
    const DenseMatrix rhs = B * pa + bf * B + bf * op.weight;
    if (lhs != rhs) return {false, m};
  }
  return {};
}

namespace {

struct SemidirectElement {
  Polynomial f;
  Vector u;
  friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
};

class SemidirectAlgebra {
 public:
  SemidirectAlgebra(const RBOperator& op, const ModulePair& mp) : op_(op), mp_(mp) {
    powers_.push_back(DenseMatrix::identity(mp.dim()));
    for (unsigned k = 1; k <= op.truncation; ++k) powers_.push_back(powers_.back() * mp.A);
  }

  SemidirectElement multiply(const SemidirectElement& a, const SemidirectElement& b) const {
    Vector u = act(a.f, b.u);
    const Vector w = act(b.f, a.u);
    for (std::size_t i = 0; i < u.size(); ++i) u[i] += w[i];
    return {a.f * b.f, std::move(u)};
  }

  SemidirectElement apply(const SemidirectElement& a) const {
    return {apply_image(image_of(op_), a.f), mp_.B * a.u};
  }

  SemidirectElement add(SemidirectElement a, const SemidirectElement& b) const {
    a.f += b.f;
    for (std::size_t i = 0; i < a.u.size(); ++i) a.u[i] += b.u[i];
    return a;
  }

  SemidirectElement scale(SemidirectElement a, const Rational& s) const {
    a.f *= s;
    for (auto& x : a.u) x *= s;
    return a;
  }

  bool identity_holds(const SemidirectElement& r, const SemidirectElement& s) const {
    const auto pr = apply(r);
    const auto ps = apply(s);
    const auto lhs = multiply(pr, ps);
    auto rhs = add(apply(multiply(pr, s)), apply(multiply(r, ps)));
    rhs = add(std::move(rhs), scale(apply(multiply(r, s)), op_.weight));
    return lhs == rhs;
  }

 private:
  Vector act(const Polynomial& f, const Vector& v) const {
    Vector out(v.size());
    const auto coeffs = f.coefficients();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k].is_zero()) continue;
      if (k >= powers_.size()) {
        throw TruncationExceeded("semidirect product left the truncated ring");
      }
      const Vector w = powers_[k] * v;
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += coeffs[k] * w[i];
    }
    return out;
  }

  const RBOperator& op_;
  const ModulePair& mp_;
  std::vector<DenseMatrix> powers_;
};

}  // namespace

bool semidirect_sum_check(const RBOperator& op, const ModulePair& mp) {
  require_flavor(op, mp);
  const SemidirectAlgebra alg(op, mp);
  const auto n = mp.dim();
  const Vector zero(n);
  auto poly = [&](unsigned m) { return SemidirectElement{Polynomial::monomial(m), zero}; };
  auto vecb = [&](std::size_t i) {
    Vector e(n);
    e[i] = 1;
    return SemidirectElement{Polynomial{}, std::move(e)};
  };

  const unsigned first = op.first_degree();
  for (unsigned m = first; m <= op.truncation; ++m) {
    for (unsigned k = first; m + k <= op.truncation; ++k) {
      if (!alg.identity_holds(poly(m), poly(k))) return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!alg.identity_holds(poly(m), vecb(i))) return false;
      if (!alg.identity_holds(vecb(i), poly(m))) return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!alg.identity_holds(vecb(i), vecb(j))) return false;
    }
  return true;
}

bool verify_derived_identities(const ModulePair& mp, unsigned max_degree, unsigned max_power) {
  const auto n = mp.dim();
  const DenseMatrix neg_b = -mp.B;
  std::vector<DenseMatrix> neg_powers{DenseMatrix::identity(n)};
  for (unsigned k = 1; k <= max_power; ++k) neg_powers.push_back(neg_powers.back() * neg_b);

  const bool left_form = mp.flavor == Flavor::KxP1 || mp.flavor == Flavor::KxP4;
  const unsigned first = mp.flavor == Flavor::XKx ? 1U : 0U;
  DenseMatrix power = DenseMatrix::identity(n);
  for (unsigned m = 0; m <= max_degree; ++m) {
    if (m > 0) power = power * mp.A;
    if (m < first) continue;
    if (left_form) {
      const DenseMatrix base = mp.B * power;
      for (unsigned k = 1; k <= max_power; ++k) {
        if (base * neg_powers[k] != base) return false;
      }
    } else {
      const DenseMatrix base = power * mp.B;
      for (unsigned k = 1; k <= max_power; ++k) {
        if (neg_powers[k] * base != base) return false;
      }
    }
  }
  return true;
}

}  // namespace rbmod

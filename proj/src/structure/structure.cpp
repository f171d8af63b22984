#include "rbmod/structure.hpp"

#include "rbmod/error.hpp"
#include "rbmod/kernels.hpp"
#include "rbmod/linalg.hpp"

#include <random>
#include <string>
#include <utility>

namespace rbmod {

std::vector<Vector> eigenspace(const DenseMatrix& m, const Rational& alpha) {
  if (!m.square()) throw NonSquare("eigenspace of non-square matrix");
  return kernel_basis(m - DenseMatrix::identity(m.rows()) * alpha);
}

namespace {

struct Eigenpair {
  Vector vector;
  Rational value;
};

// Eigenvector of `a` inside the a-invariant subspace spanned by `basis`,
// for the smallest rational eigenvalue of the restriction.
Eigenpair eigenvector_within(const DenseMatrix& a, const std::vector<Vector>& basis) {
  const auto n = a.rows();
  const DenseMatrix w = DenseMatrix::from_columns(basis, n);
  const DenseMatrix wt = w.transpose();
  const DenseMatrix restricted = inverse(wt * w) * wt * a * w;
  const auto roots = rational_roots(char_poly(restricted));
  if (roots.empty()) {
    throw IrrationalSpectrum("restriction of A to a " + std::to_string(basis.size()) +
                             "-dimensional invariant subspace has no rational eigenvalue");
  }
  const Rational& alpha = roots.front().root;
  const auto local = kernel_basis(restricted - DenseMatrix::identity(basis.size()) * alpha);
  return {w * local.front(), alpha};
}

}  // namespace

bool witness_holds(const ModulePair& mp, const SubmoduleWitness& w) {
  if (w.generator.size() != mp.dim() || is_zero(w.generator)) return false;
  return mp.A * w.generator == scaled(w.generator, w.x_eigen) &&
         mp.B * w.generator == scaled(w.generator, w.p_eigen);
}

WitnessResult find_onedim_submodule_traced(const ModulePair& mp) {
  if (!verify_equation(mp)) {
    throw NotAModule("pair does not satisfy the " + std::string(to_string(mp.flavor)) +
                     " module equations");
  }
  const auto n = mp.dim();
  const auto& A = mp.A;
  const auto& B = mp.B;

  if (mp.flavor == Flavor::KxP1 || mp.flavor == Flavor::KxP4) {
    // B A = -B A B keeps ker B invariant under A.
    const auto singular = eigenspace(B, 0);
    if (!singular.empty()) {
      auto e = eigenvector_within(A, singular);
      return {{std::move(e.vector), std::move(e.value), Rational(0)},
              WitnessCase::InvariantEigenspace};
    }
    std::vector<Vector> whole;
    for (std::size_t i = 0; i < n; ++i) whole.push_back(DenseMatrix::identity(n).column(i));
    auto e = eigenvector_within(A, whole);
    return {{std::move(e.vector), std::move(e.value), Rational(-1)}, WitnessCase::WholeSpace};
  }

  // A B = -B A B: the (-1)-eigenspace of B is A-invariant.
  const auto regular = eigenspace(B, -1);
  if (!regular.empty()) {
    auto e = eigenvector_within(A, regular);
    return {{std::move(e.vector), std::move(e.value), Rational(-1)},
            WitnessCase::InvariantEigenspace};
  }
  if (B.is_zero()) {
    std::vector<Vector> whole;
    for (std::size_t i = 0; i < n; ++i) whole.push_back(DenseMatrix::identity(n).column(i));
    auto e = eigenvector_within(A, whole);
    return {{std::move(e.vector), std::move(e.value), Rational(0)}, WitnessCase::WholeSpace};
  }
  // I + B is invertible from here on, so A B = 0 and A kills the image of B.
  for (const auto& [alpha, mult] : rational_roots(char_poly(B))) {
    (void)mult;
    if (alpha.is_zero() || alpha == Rational(-1)) continue;
    auto u = eigenspace(B, alpha).front();
    return {{std::move(u), Rational(0), alpha}, WitnessCase::KilledEigenvector};
  }
  // Only eigenvalue 0 is rational: use ker B ∩ im B.
  for (const auto& w : kernel_basis(B * B)) {
    Vector u = B * w;
    if (!is_zero(u)) return {{std::move(u), Rational(0), Rational(0)}, WitnessCase::KilledEigenvector};
  }
  throw IrrationalSpectrum("B has no rational eigenvector that yields a submodule");
}

SubmoduleWitness find_onedim_submodule(const ModulePair& mp) {
  return find_onedim_submodule_traced(mp).witness;
}

IrreducibilityReport is_irreducible(const ModulePair& mp) {
  if (!verify_equation(mp)) throw NotAModule("pair is not a module");
  IrreducibilityReport report;
  if (mp.dim() == 1) {
    report.irreducible = true;
    return report;
  }
  try {
    report.witness = find_onedim_submodule(mp);
  } catch (const IrrationalSpectrum& e) {
    report.note = std::string("no rational 1-dimensional submodule certificate: ") + e.what();
  }
  return report;
}

RegularSingular regular_singular_decomposition(const DenseMatrix& B, const Rational& lambda) {
  if (lambda.is_zero()) throw InvalidArgument("weight must be nonzero");
  if (!B.square()) throw NonSquare("B must be square");
  if (!is_quasi_idempotent(B, lambda)) throw NotQuasiIdempotent("B^2 + lambda B != 0");
  const Rational inv = lambda.inverse();
  return {-B * inv, DenseMatrix::identity(B.rows()) + B * inv};
}

std::vector<DenseMatrix> commutant(const ModulePair& mp) {
  const auto n = mp.dim();
  const DenseMatrix id = DenseMatrix::identity(n);
  // vec(CX - XC) = (X^T (x) I - I (x) X) vec(C)
  const DenseMatrix ka = kron(mp.A.transpose(), id) - kron(id, mp.A);
  const DenseMatrix kb = kron(mp.B.transpose(), id) - kron(id, mp.B);
  DenseMatrix stacked(2 * n * n, n * n);
  stacked.set_block(0, 0, ka);
  stacked.set_block(n * n, 0, kb);
  std::vector<DenseMatrix> out;
  for (const auto& v : kernel_basis(stacked)) out.push_back(unvec(v, n, n));
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Indecomposable: return "yes";
    case Verdict::Decomposable: return "no";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

// Projector onto the generalized eigenspace of `alpha` along the image of
// (C - alpha)^n. Both subspaces are invariant under everything commuting
// with C.
DenseMatrix spectral_projector(const DenseMatrix& c, const Rational& alpha) {
  const auto n = c.rows();
  const DenseMatrix nil = (c - DenseMatrix::identity(n) * alpha).pow(static_cast<unsigned>(n));
  auto columns = kernel_basis(nil);
  const std::size_t k = columns.size();
  for (auto p : kernels::rref(nil).pivots) columns.push_back(nil.column(p));
  const DenseMatrix t = DenseMatrix::from_columns(columns, n);
  DenseMatrix d(n, n);
  for (std::size_t i = 0; i < k; ++i) d(i, i) = 1;
  return t * d * inverse(t);
}

std::optional<DenseMatrix> splitting_from(const DenseMatrix& c) {
  const auto n = c.rows();
  const auto roots = rational_roots(char_poly(c));
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
    if (it->multiplicity < n) return spectral_projector(c, it->root);
  }
  return std::nullopt;
}

}  // namespace

EndAlgebraReport is_indecomposable(const ModulePair& mp) {
  if (!verify_equation(mp)) throw NotAModule("pair is not a module");
  EndAlgebraReport report;
  report.commutant_basis = commutant(mp);
  const auto& basis = report.commutant_basis;
  const auto d = basis.size();

  DenseMatrix gram(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      gram(i, j) = (basis[i] * basis[j]).trace();
      gram(j, i) = gram(i, j);
    }
  report.semisimple_quotient_dim = rank(gram);
  report.radical_dim = d - report.semisimple_quotient_dim;
  if (report.semisimple_quotient_dim == 1) {
    report.verdict = Verdict::Indecomposable;
    return report;
  }

  std::vector<DenseMatrix> candidates(basis.begin(), basis.end());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) candidates.push_back(basis[i] + basis[j]);
  std::mt19937 rng(0x5eedU);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 64; ++trial) {
    DenseMatrix c(mp.dim(), mp.dim());
    for (const auto& e : basis) c += e * Rational(coeff(rng));
    candidates.push_back(std::move(c));
  }

  for (const auto& c : candidates) {
    if (auto e = splitting_from(c)) {
      report.verdict = Verdict::Decomposable;
      report.splitting_idempotent = std::move(*e);
      return report;
    }
  }
  report.verdict = Verdict::Inconclusive;
  return report;
}

ModulePair tganz_family(std::size_t n, TganzCase kase, std::span<const Rational> params,
                        const Rational& b) {
  if (n == 0) throw InvalidCaseParams("dimension must be at least 1");
  DenseMatrix a(n, n);
  switch (kase) {
    case TganzCase::Row:
      if (b != Rational(-1)) throw InvalidCaseParams("row case needs b = -1");
      if (params.size() != n) throw InvalidCaseParams("row case needs n parameters");
      for (std::size_t c = 0; c < n; ++c) a(0, c) = params[c];
      break;
    case TganzCase::Column:
      if (!b.is_zero()) throw InvalidCaseParams("column case needs b = 0");
      if (params.size() != n) throw InvalidCaseParams("column case needs n parameters");
      for (std::size_t r = 0; r < n; ++r) a(r, n - 1) = params[r];
      break;
    case TganzCase::Zero:
      if (b.is_zero() || b == Rational(-1)) throw InvalidCaseParams("zero case needs b not in {-1, 0}");
      if (!params.empty()) throw InvalidCaseParams("zero case takes no parameters");
      break;
  }
  return ModulePair::make(std::move(a), jordan_block(n, b), Flavor::XKx);
}

}  // namespace rbmod

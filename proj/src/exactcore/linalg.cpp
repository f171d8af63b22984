#include "rbmod/linalg.hpp"

#include "factor.hpp"
#include "rbmod/error.hpp"
#include "rbmod/kernels.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace rbmod {

std::vector<Vector> kernel_basis(const DenseMatrix& m) {
  const auto ech = kernels::rref(m);
  const auto& r = ech.reduced;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const DenseMatrix& m) { return kernels::rref(m).pivots.size(); }

DenseMatrix inverse(const DenseMatrix& m) {
  if (!m.square()) throw NonSquare("inverse of non-square matrix");
  const auto n = m.rows();
  DenseMatrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, DenseMatrix::identity(n));
  const auto ech = kernels::rref(std::move(aug));
  if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] != n - 1)) {
    throw Singular("matrix is not invertible");
  }
  return ech.reduced.block(0, n, n, n);
}

Polynomial char_poly(const DenseMatrix& m) {
  if (!m.square()) {
    throw NonSquare("characteristic polynomial of " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + " matrix");
  }
  const auto n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  DenseMatrix mk(n, n);
  const DenseMatrix id = DenseMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + id * c[n - k + 1];
    c[n - k] = -(m * mk).trace() / Rational(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

std::vector<RootMultiplicity> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw InvalidArgument("rational_roots of the zero polynomial");

  // Primitive integer form.
  mpz_class lcm = 1;
  for (const auto& c : p.coefficients()) {
    mpz_class d = c.denominator();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<mpz_class> ints;
  for (const auto& c : p.coefficients()) {
    mpq_class scaled = c.raw() * lcm;
    ints.push_back(scaled.get_num());
  }

  std::vector<RootMultiplicity> roots;
  std::size_t zero_mult = 0;
  while (ints[zero_mult] == 0) ++zero_mult;
  if (zero_mult > 0) roots.push_back({Rational(0), zero_mult});

  std::vector<Rational> work_coeffs;
  for (std::size_t i = zero_mult; i < ints.size(); ++i) work_coeffs.emplace_back(mpq_class(ints[i]));
  Polynomial work(std::move(work_coeffs));
  if (work.degree() < 1) return roots;

  const mpz_class a0 = ints[zero_mult];
  const mpz_class ad = ints.back();

  // Cauchy bound on root magnitude.
  mpq_class bound = 0;
  for (std::size_t i = zero_mult; i + 1 < ints.size(); ++i) {
    mpq_class ratio(abs(ints[i]), abs(ad));
    ratio.canonicalize();
    if (ratio > bound) bound = ratio;
  }
  bound += 1;

  std::set<Rational> candidates;
  const auto num_divs = detail::divisors(a0);
  const auto den_divs = detail::divisors(ad);
  for (const auto& q : den_divs) {
    for (const auto& pnum : num_divs) {
      mpq_class r(pnum, q);
      r.canonicalize();
      if (r > bound) break;
      candidates.insert(Rational(r));
      candidates.insert(Rational(mpq_class(-r)));
    }
  }

  for (const auto& r : candidates) {
    std::size_t mult = 0;
    while (work.degree() >= 1) {
      Rational rem;
      Polynomial q = work.deflate(r, rem);
      if (!rem.is_zero()) break;
      work = std::move(q);
      ++mult;
    }
    if (mult > 0) roots.push_back({r, mult});
    if (work.degree() < 1) break;
  }
  std::sort(roots.begin(), roots.end(),
            [](const RootMultiplicity& a, const RootMultiplicity& b) { return a.root < b.root; });
  return roots;
}

bool has_rational_spectrum(const DenseMatrix& m) {
  std::size_t total = 0;
  for (const auto& r : rational_roots(char_poly(m))) total += r.multiplicity;
  return total == m.rows();
}

DenseMatrix assemble_jordan(std::span<const JordanBlock> blocks) {
  std::vector<DenseMatrix> parts;
  parts.reserve(blocks.size());
  for (const auto& b : blocks) parts.push_back(jordan_block(b.size, b.eigenvalue));
  return direct_sum(parts);
}

std::size_t span_rank(std::span<const Vector> vectors, std::size_t length) {
  if (vectors.empty()) return 0;
  DenseMatrix m(vectors.size(), length);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != length) throw DimensionMismatch("span_rank: vector length mismatch");
    for (std::size_t j = 0; j < length; ++j) m(i, j) = vectors[i][j];
  }
  return rank(m);
}

bool span_contains(std::span<const Vector> outer, std::span<const Vector> inner,
                   std::size_t length) {
  std::vector<Vector> both(outer.begin(), outer.end());
  both.insert(both.end(), inner.begin(), inner.end());
  return span_rank(both, length) == span_rank(outer, length);
}

bool same_span(std::span<const Vector> a, std::span<const Vector> b, std::size_t length) {
  std::vector<Vector> both(a.begin(), a.end());
  both.insert(both.end(), b.begin(), b.end());
  const auto ra = span_rank(a, length);
  return ra == span_rank(b, length) && ra == span_rank(both, length);
}

namespace {

struct ChainTop {
  Vector top;
  std::size_t size;
};

// Jordan chains for one eigenvalue, largest first.
std::vector<ChainTop> chain_tops(const DenseMatrix& shifted, std::size_t multiplicity) {
  const auto n = shifted.rows();
  // Powers N^0 .. N^K until the kernel reaches the algebraic multiplicity.
  std::vector<DenseMatrix> powers{DenseMatrix::identity(n)};
  std::vector<std::size_t> kernel_dim{0};
  while (kernel_dim.back() < multiplicity) {
    powers.push_back(powers.back() * shifted);
    kernel_dim.push_back(n - rank(powers.back()));
    if (kernel_dim.back() == kernel_dim[kernel_dim.size() - 2]) {
      throw IrrationalSpectrum("generalized eigenspace smaller than multiplicity");
    }
  }
  const std::size_t index = powers.size() - 1;

  // at_least[k] = number of blocks of size >= k.
  std::vector<std::size_t> at_least(index + 2, 0);
  for (std::size_t k = 1; k <= index; ++k) at_least[k] = kernel_dim[k] - kernel_dim[k - 1];

  std::vector<ChainTop> tops;
  for (std::size_t k = index; k >= 1; --k) {
    const std::size_t wanted = at_least[k] - at_least[k + 1];
    if (wanted == 0) continue;
    std::vector<Vector> span = k > 1 ? kernel_basis(powers[k - 1]) : std::vector<Vector>{};
    for (const auto& t : tops) span.push_back(powers[t.size - k] * t.top);
    std::size_t current = span_rank(span, n);
    std::size_t found = 0;
    for (auto& candidate : kernel_basis(powers[k])) {
      if (found == wanted) break;
      span.push_back(candidate);
      const auto next = span_rank(span, n);
      if (next > current) {
        current = next;
        tops.push_back({std::move(candidate), k});
        ++found;
      } else {
        span.pop_back();
      }
    }
    if (found != wanted) throw IrrationalSpectrum("failed to complete Jordan chains");
  }
  return tops;
}

}  // namespace

JordanDecomposition jordan_form(const DenseMatrix& m) {
  if (!m.square()) throw NonSquare("jordan_form of non-square matrix");
  const auto n = m.rows();
  const auto roots = rational_roots(char_poly(m));
  std::size_t total = 0;
  for (const auto& r : roots) total += r.multiplicity;
  if (total < n) {
    throw IrrationalSpectrum("characteristic polynomial has " + std::to_string(total) +
                             " rational roots (with multiplicity) for dimension " +
                             std::to_string(n));
  }

  JordanDecomposition out;
  std::vector<Vector> columns;
  columns.reserve(n);
  for (const auto& [lambda, mult] : roots) {
    const DenseMatrix shifted = m - DenseMatrix::identity(n) * lambda;
    for (const auto& t : chain_tops(shifted, mult)) {
      // N^{s-1} v, ..., N v, v
      std::vector<Vector> chain{t.top};
      for (std::size_t i = 1; i < t.size; ++i) chain.push_back(shifted * chain.back());
      columns.insert(columns.end(), chain.rbegin(), chain.rend());
      out.blocks.push_back({lambda, t.size});
    }
  }
  out.basis = DenseMatrix::from_columns(columns, n);
  return out;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          k(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
    }
  return k;
}

}  // namespace rbmod

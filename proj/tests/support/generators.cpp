#include "generators.hpp"

#include "rbmod/matsolve.hpp"

#include <algorithm>
#include <numeric>

namespace rbmod::gen {

Rational small_integer(Rng& rng, int lo, int hi) {
  return Rational(std::uniform_int_distribution<int>(lo, hi)(rng));
}

Rational small_rational(Rng& rng, int bound) {
  const long num = std::uniform_int_distribution<int>(-bound, bound)(rng);
  const long den = std::uniform_int_distribution<int>(1, 2)(rng);
  return Rational(num, den);
}

DenseMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng, int bound) {
  DenseMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = small_rational(rng, bound);
  return m;
}

DenseMatrix random_invertible(std::size_t n, Rng& rng) {
  DenseMatrix l = DenseMatrix::identity(n);
  DenseMatrix u = DenseMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (r > c) l(r, c) = small_rational(rng, 2);
      if (r < c) u(r, c) = small_rational(rng, 2);
    }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  DenseMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = 1;
  return l * u * p;
}

std::vector<JordanBlock> random_blocks(std::size_t n, std::span<const long> eigenvalues, Rng& rng) {
  std::vector<JordanBlock> out;
  std::size_t left = n;
  while (left > 0) {
    const std::size_t size = std::uniform_int_distribution<std::size_t>(1, left)(rng);
    const long e = eigenvalues[std::uniform_int_distribution<std::size_t>(0, eigenvalues.size() - 1)(rng)];
    out.push_back({Rational(e), size});
    left -= size;
  }
  return out;
}

DenseMatrix conjugated(std::span<const JordanBlock> blocks, Rng& rng) {
  const DenseMatrix j = assemble_jordan(blocks);
  const DenseMatrix s = random_invertible(j.rows(), rng);
  return s * j * inverse(s);
}

DenseMatrix random_combination(std::span<const DenseMatrix> basis, std::size_t rows,
                               std::size_t cols, Rng& rng) {
  DenseMatrix out(rows, cols);
  if (basis.empty()) return out;
  while (out.is_zero()) {
    for (const auto& b : basis) out += b * small_integer(rng, -2, 2);
  }
  return out;
}

DenseMatrix random_quasi_idempotent(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<Rational> d(n, Rational(0));
  for (std::size_t i = 0; i < k; ++i) d[i] = -1;
  const DenseMatrix s = random_invertible(n, rng);
  return s * DenseMatrix::diagonal(d) * inverse(s);
}

ModulePair random_module(std::size_t n, Flavor flavor, Rng& rng) {
  DenseMatrix B;
  if (flavor == Flavor::XKx) {
    static constexpr long kEig[] = {-2, -1, 0, 1, 2};
    B = conjugated(random_blocks(n, kEig, rng), rng);
  } else {
    B = random_quasi_idempotent(n, std::uniform_int_distribution<std::size_t>(0, n)(rng), rng);
  }
  const auto kernel = oracle_full_kernel(B, flavor);
  DenseMatrix A = random_combination(kernel, n, n, rng);
  return ModulePair::make(std::move(A), std::move(B), flavor);
}

}  // namespace rbmod::gen

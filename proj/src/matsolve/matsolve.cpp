#include "rbmod/matsolve.hpp"

#include "rbmod/error.hpp"

#include <string>
#include <utility>

namespace rbmod {

std::string case_label(BlockCase c) { return "(" + std::to_string(static_cast<int>(c)) + ")"; }

BlockPattern solve_block(std::size_t s, std::size_t t, const Rational& b1, const Rational& b2) {
  if (s == 0 || t == 0) throw InvalidArgument("block sizes must be positive");
  const bool row_free = b1 == Rational(-1);
  const bool col_free = b2.is_zero();

  BlockPattern p;
  p.rows = s;
  p.cols = t;
  if (row_free && col_free) {
    p.kase = BlockCase::RowAndColumn;
  } else if (row_free) {
    p.kase = BlockCase::Row;
  } else if (col_free) {
    p.kase = BlockCase::Column;
  } else {
    p.kase = BlockCase::Zero;
  }
  for (std::size_t r = 0; r < s; ++r) {
    for (std::size_t c = 0; c < t; ++c) {
      if ((row_free && r == 0) || (col_free && c + 1 == t)) p.free_cells.push_back({r, c});
    }
  }
  return p;
}

std::vector<Vector> oracle_block_kernel(std::size_t s, std::size_t t, const Rational& b1,
                                        const Rational& b2) {
  if (s == 0 || t == 0) throw InvalidArgument("block sizes must be positive");
  const DenseMatrix left = DenseMatrix::identity(s) + jordan_block(s, b1);
  const DenseMatrix right = jordan_block(t, b2);
  return kernel_basis(kron(right.transpose(), left));
}

std::size_t free_count(std::size_t ps, std::size_t pt, const Rational& bs, const Rational& bt) {
  const bool row_free = bs == Rational(-1);
  const bool col_free = bt.is_zero();
  if (row_free && col_free) return ps + pt - 1;
  if (row_free) return pt;
  if (col_free) return ps;
  return 0;
}

std::size_t dim_formula(std::span<const JordanBlock> blocks) {
  std::size_t total = 0;
  for (const auto& bi : blocks)
    for (const auto& bj : blocks) total += free_count(bi.size, bj.size, bi.eigenvalue, bj.eigenvalue);
  return total;
}

namespace {

// S * E_{rc} * S^{-1} as an outer product.
DenseMatrix conjugated_unit(const DenseMatrix& s, const DenseMatrix& s_inv, std::size_t r,
                            std::size_t c) {
  const auto n = s.rows();
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (s(i, r).is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!s_inv(c, j).is_zero()) m(i, j) = s(i, r) * s_inv(c, j);
    }
  }
  return m;
}

void require_square(const DenseMatrix& B) {
  if (!B.square()) {
    throw NonSquare("B is " + std::to_string(B.rows()) + "x" + std::to_string(B.cols()));
  }
}

}  // namespace

SolutionSpace solution_space_xkx(const DenseMatrix& B) {
  require_square(B);
  auto jf = jordan_form(B);
  const DenseMatrix s_inv = inverse(jf.basis);

  std::vector<std::size_t> offsets;
  std::size_t off = 0;
  for (const auto& b : jf.blocks) {
    offsets.push_back(off);
    off += b.size;
  }

  SolutionSpace space;
  space.dim_ambient = B.rows();
  const std::size_t nb = jf.blocks.size();
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      auto pattern = solve_block(jf.blocks[i].size, jf.blocks[j].size, jf.blocks[i].eigenvalue,
                                 jf.blocks[j].eigenvalue);
      space.patterns.push_back({i, j, case_label(*pattern.kase), std::move(pattern)});
    }
  }

  // Block pairs are independent; results are concatenated in pair order.
  std::vector<std::vector<DenseMatrix>> per_pair(space.patterns.size());
  const auto npairs = static_cast<long>(space.patterns.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < npairs; ++k) {
    const auto& entry = space.patterns[static_cast<std::size_t>(k)];
    for (const auto& cell : entry.pattern.free_cells) {
      per_pair[static_cast<std::size_t>(k)].push_back(
          conjugated_unit(jf.basis, s_inv, offsets[entry.block_row] + cell.row,
                          offsets[entry.block_col] + cell.col));
    }
  }
  for (auto& group : per_pair) {
    for (auto& m : group) space.basis.push_back(std::move(m));
  }
  space.blocks = std::move(jf.blocks);
  space.change_of_basis = std::move(jf.basis);
  return space;
}

bool is_quasi_idempotent(const DenseMatrix& B, const Rational& lambda) {
  if (!B.square()) return false;
  return B * B + B * lambda == DenseMatrix::zero(B.rows(), B.cols());
}

std::vector<DenseMatrix> oracle_full_kernel(const DenseMatrix& B, Flavor flavor) {
  require_square(B);
  const auto n = B.rows();
  const DenseMatrix shifted = DenseMatrix::identity(n) + B;
  DenseMatrix system;
  switch (flavor) {
    case Flavor::KxP1:
    case Flavor::KxP4:
      if (!is_quasi_idempotent(B)) throw NotQuasiIdempotent("B^2 != -B");
      system = kron(shifted.transpose(), B);  // vec(B A (I + B))
      break;
    case Flavor::KxP2:
    case Flavor::KxP3:
      if (!is_quasi_idempotent(B)) throw NotQuasiIdempotent("B^2 != -B");
      [[fallthrough]];
    case Flavor::XKx:
      system = kron(B.transpose(), shifted);  // vec((I + B) A B)
      break;
  }
  std::vector<DenseMatrix> out;
  for (const auto& v : kernel_basis(system)) out.push_back(unvec(v, n, n));
  return out;
}

KxVariant variant_of(Flavor flavor) {
  switch (flavor) {
    case Flavor::KxP1:
    case Flavor::KxP4:
      return KxVariant::I14;
    case Flavor::KxP2:
    case Flavor::KxP3:
      return KxVariant::I23;
    case Flavor::XKx:
      break;
  }
  throw InvalidArgument("flavor XKx has no k[x] classification variant");
}

SolutionSpace classify_kx(const DenseMatrix& B, KxVariant variant) {
  require_square(B);
  if (!is_quasi_idempotent(B)) throw NotQuasiIdempotent("B^2 != -B");
  const auto n = B.rows();
  auto columns = kernel_basis(B + DenseMatrix::identity(n));
  const std::size_t k = columns.size();
  for (auto& v : kernel_basis(B)) columns.push_back(std::move(v));

  SolutionSpace space;
  space.dim_ambient = n;
  space.change_of_basis = DenseMatrix::from_columns(columns, n);
  const DenseMatrix s_inv = inverse(space.change_of_basis);
  for (std::size_t i = 0; i < k; ++i) space.blocks.push_back({Rational(-1), 1});
  for (std::size_t i = k; i < n; ++i) space.blocks.push_back({Rational(0), 1});

  // Zero quadrant: A2 (top right) for I14, A3 (bottom left) for I23.
  auto allowed = [&](std::size_t r, std::size_t c) {
    return variant == KxVariant::I14 ? !(r < k && c >= k) : !(r >= k && c < k);
  };

  const std::size_t sizes[2] = {k, n - k};
  const std::size_t starts[2] = {0, k};
  for (std::size_t bi = 0; bi < 2; ++bi) {
    for (std::size_t bj = 0; bj < 2; ++bj) {
      if (sizes[bi] == 0 || sizes[bj] == 0) continue;
      BlockPattern p;
      p.rows = sizes[bi];
      p.cols = sizes[bj];
      if (allowed(starts[bi], starts[bj])) {
        for (std::size_t r = 0; r < p.rows; ++r)
          for (std::size_t c = 0; c < p.cols; ++c) p.free_cells.push_back({r, c});
      }
      space.patterns.push_back({bi, bj, "A" + std::to_string(2 * bi + bj + 1), std::move(p)});
    }
  }

  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (allowed(r, c)) space.basis.push_back(conjugated_unit(space.change_of_basis, s_inv, r, c));
    }
  }
  return space;
}

bool verify_equation(const ModulePair& mp) {
  const auto& A = mp.A;
  const auto& B = mp.B;
  if (!A.square() || !B.square() || A.rows() != B.rows()) return false;
  const DenseMatrix bab = B * A * B;
  switch (mp.flavor) {
    case Flavor::KxP1:
    case Flavor::KxP4:
      return is_quasi_idempotent(B) && B * A == -bab;
    case Flavor::KxP2:
    case Flavor::KxP3:
      return is_quasi_idempotent(B) && A * B == -bab;
    case Flavor::XKx:
      return A * B == -bab;
  }
  return false;
}

namespace {

std::vector<Vector> vectorize(std::span<const DenseMatrix> ms) {
  std::vector<Vector> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(vec(m));
  return out;
}

}  // namespace

bool same_matrix_span(std::span<const DenseMatrix> a, std::span<const DenseMatrix> b) {
  if (a.empty() || b.empty()) {
    // An empty family spans {0}; compare against the rank of the other.
    const auto& other = a.empty() ? b : a;
    if (other.empty()) return true;
    const auto len = other.front().rows() * other.front().cols();
    return span_rank(vectorize(other), len) == 0;
  }
  const auto len = a.front().rows() * a.front().cols();
  return same_span(vectorize(a), vectorize(b), len);
}

bool matrix_span_contains(std::span<const DenseMatrix> outer, const DenseMatrix& m) {
  const auto len = m.rows() * m.cols();
  if (outer.empty()) return m.is_zero();
  const std::vector<Vector> inner{vec(m)};
  return span_contains(vectorize(outer), inner, len);
}

}  // namespace rbmod

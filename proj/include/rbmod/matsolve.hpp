#pragma once

// Solution spaces of the module equations for a fixed B:
//   XKx, KxP2, KxP3:  A B = -B A B
//   KxP1, KxP4:       B A = -B A B      (both with B^2 = -B for the KxP flavors)
// Closed forms are built blockwise over the Jordan form of B; the oracles
// compute the same spaces as exact kernels of Kronecker-vectorized maps.

#include "rbmod/linalg.hpp"
#include "rbmod/matrix.hpp"
#include "rbmod/rbops.hpp"

#include <compare>
#include <optional>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace rbmod {

struct Cell {
  std::size_t row;
  std::size_t col;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Solution shape of X J_t(b2) = -J_s(b1) X J_t(b2).
enum class BlockCase {
  RowAndColumn = 1,  // b1 = -1, b2 = 0: first row and last column free
  Row = 2,           // b1 = -1, b2 != 0: first row free
  Column = 3,        // b1 != -1, b2 = 0: last column free
  Zero = 4,          // otherwise X = 0
};

std::string case_label(BlockCase c);

struct BlockPattern {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::optional<BlockCase> kase;  // set by solve_block; empty for classify_kx blocks
  std::vector<Cell> free_cells;  // zero-based, row-major order

  std::size_t free_count() const { return free_cells.size(); }
};

BlockPattern solve_block(std::size_t s, std::size_t t, const Rational& b1, const Rational& b2);

/// Kernel of J_t(b2)^T (x) (I_s + J_s(b1)), i.e. vec of every solution X.
std::vector<Vector> oracle_block_kernel(std::size_t s, std::size_t t, const Rational& b1,
                                        const Rational& b2);

struct PatternEntry {
  std::size_t block_row;
  std::size_t block_col;
  std::string label;
  BlockPattern pattern;
};

struct SolutionSpace {
  std::size_t dim_ambient = 0;
  std::vector<DenseMatrix> basis;
  std::vector<JordanBlock> blocks;    // blocks of B in the working basis
  std::vector<PatternEntry> patterns;
  DenseMatrix change_of_basis;        // B = S * (working form) * S^{-1}

  std::size_t dimension() const { return basis.size(); }
};

/// Every A with A B = -B A B. Throws IrrationalSpectrum / NonSquare.
SolutionSpace solution_space_xkx(const DenseMatrix& B);

/// Kernel of A -> AB + BAB (XKx, KxP2, KxP3) or A -> BA + BAB (KxP1, KxP4).
/// KxP flavors first require B^2 = -B (NotQuasiIdempotent).
std::vector<DenseMatrix> oracle_full_kernel(const DenseMatrix& B, Flavor flavor);

enum class KxVariant { I14, I23 };
KxVariant variant_of(Flavor flavor);  // InvalidArgument for XKx

/// A-space for a quasi-idempotent B: in the basis where B = diag(-I_k, 0)
/// (the (-1)-eigenspace first), A is block lower triangular for I14 and
/// block upper triangular for I23.
SolutionSpace classify_kx(const DenseMatrix& B, KxVariant variant);

bool is_quasi_idempotent(const DenseMatrix& B, const Rational& lambda = 1);

/// Exact check of the flavor's matrix conditions.
bool verify_equation(const ModulePair& mp);

/// Free cells of the block equation for block sizes (ps, pt) and eigenvalues.
std::size_t free_count(std::size_t ps, std::size_t pt, const Rational& bs, const Rational& bt);
/// Sum of free_count over all ordered block pairs.
std::size_t dim_formula(std::span<const JordanBlock> blocks);

/// Span equality of two families of equally sized matrices.
bool same_matrix_span(std::span<const DenseMatrix> a, std::span<const DenseMatrix> b);
bool matrix_span_contains(std::span<const DenseMatrix> outer, const DenseMatrix& m);

}  // namespace rbmod

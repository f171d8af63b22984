#pragma once

// Module-structure analysis for pairs (A, B): one-dimensional submodules,
// irreducibility, regular-singular splitting, endomorphism algebras and
// indecomposability certificates.

#include "rbmod/matrix.hpp"
#include "rbmod/matsolve.hpp"
#include "rbmod/rbops.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rbmod {

/// kernel_basis(m - alpha I)
std::vector<Vector> eigenspace(const DenseMatrix& m, const Rational& alpha);

/// span(generator) is invariant: A u = x_eigen u and B u = p_eigen u.
struct SubmoduleWitness {
  Vector generator;
  Rational x_eigen;
  Rational p_eigen;
};

/// Which branch of the search produced the witness.
enum class WitnessCase {
  InvariantEigenspace,  // eigenvector of A inside an A-invariant eigenspace of B
  WholeSpace,           // B = 0 (or B = -I for KxP1/KxP4): eigenvector of A
  KilledEigenvector,    // eigenvector of B that A annihilates
};

struct WitnessResult {
  SubmoduleWitness witness;
  WitnessCase route;
};

/// Constructive search for a 1-dimensional submodule.
/// Throws NotAModule, or IrrationalSpectrum when the needed eigenvector is
/// not rational.
WitnessResult find_onedim_submodule_traced(const ModulePair& mp);
SubmoduleWitness find_onedim_submodule(const ModulePair& mp);

bool witness_holds(const ModulePair& mp, const SubmoduleWitness& w);

struct IrreducibilityReport {
  bool irreducible = false;
  std::optional<SubmoduleWitness> witness;
  std::optional<std::string> note;  // set when no rational certificate exists
};

/// Irreducible exactly when dim = 1. Throws NotAModule.
IrreducibilityReport is_irreducible(const ModulePair& mp);

struct RegularSingular {
  DenseMatrix regular;   // projector onto M_{-lambda}
  DenseMatrix singular;  // projector onto M_0
};

/// Requires B^2 + lambda B = 0 (NotQuasiIdempotent otherwise).
RegularSingular regular_singular_decomposition(const DenseMatrix& B, const Rational& lambda);

/// Basis of {C : CA = AC, CB = BC}.
std::vector<DenseMatrix> commutant(const ModulePair& mp);

enum class Verdict { Indecomposable, Decomposable, Inconclusive };
std::string_view to_string(Verdict v);

struct EndAlgebraReport {
  std::vector<DenseMatrix> commutant_basis;
  std::size_t radical_dim = 0;
  std::size_t semisimple_quotient_dim = 0;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<DenseMatrix> splitting_idempotent;
};

/// Local endomorphism algebra => indecomposable; a nontrivial idempotent in
/// the commutant => decomposable. The radical is the kernel of the trace
/// form on the commutant. Throws NotAModule.
EndAlgebraReport is_indecomposable(const ModulePair& mp);

/// Single-Jordan-block families of x k[x]-modules.
enum class TganzCase { Row, Column, Zero };

/// Row:    b = -1, A has first row = params.
/// Column: b = 0,  A has last column = params.
/// Zero:   b not in {-1, 0}, A = 0, params empty.
/// B = J_n(b). Throws InvalidCaseParams.
ModulePair tganz_family(std::size_t n, TganzCase kase, std::span<const Rational> params,
                        const Rational& b);

struct CatalogEntry {
  std::string family;       // e.g. "(iv)", "(2b)", "k=1"
  std::string description;
  ModulePair representative;
  std::vector<Cell> free_cells;  // free entries of A in the given basis
  std::size_t free_parameters = 0;
};

/// Worked families for n in {1, 2, 3}: the listed x k[x] families for
/// flavor XKx, the block-triangular forms for the k[x] flavors.
/// Throws UnsupportedDimension.
std::vector<CatalogEntry> catalog(std::size_t n, Flavor flavor);

/// Larger worked x k[x] examples (n = 4, 5, 6 and repeated 2x2 blocks).
std::vector<CatalogEntry> spot_examples();

}  // namespace rbmod

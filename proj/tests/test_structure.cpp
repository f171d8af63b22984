#include "rbmod/error.hpp"
#include "rbmod/linalg.hpp"
#include "rbmod/structure.hpp"

#include "support/generators.hpp"

#include <gtest/gtest.h>

namespace {

using namespace rbmod;
using rbmod::gen::Rng;

ModulePair xkx(DenseMatrix a, DenseMatrix b) {
  return ModulePair::make(std::move(a), std::move(b), Flavor::XKx);
}

TEST(Witness, EigenvectorOfAWhenBIsZero) {
  const auto r = find_onedim_submodule_traced(xkx(DenseMatrix{{1, 1}, {0, 1}}, DenseMatrix(2, 2)));
  EXPECT_EQ(r.route, WitnessCase::WholeSpace);
  EXPECT_EQ(r.witness.generator, (Vector{1, 0}));
  EXPECT_EQ(r.witness.x_eigen, Rational(1));
  EXPECT_EQ(r.witness.p_eigen, Rational(0));
}

TEST(Witness, InvariantMinusOneEigenspace) {
  const auto mp = xkx(DenseMatrix{{2, 1}, {0, 2}}, DenseMatrix{{-1, 0}, {0, 0}});
  const auto r = find_onedim_submodule_traced(mp);
  EXPECT_EQ(r.route, WitnessCase::InvariantEigenspace);
  EXPECT_EQ(r.witness.generator, (Vector{1, 0}));
  EXPECT_EQ(r.witness.x_eigen, Rational(2));
  EXPECT_EQ(r.witness.p_eigen, Rational(-1));
  EXPECT_TRUE(witness_holds(mp, r.witness));
}

TEST(Witness, KilledEigenvector) {
  const auto mp = xkx(DenseMatrix{{0, 0}, {3, 0}}, DenseMatrix{{0, 0}, {0, 4}});
  const auto r = find_onedim_submodule_traced(mp);
  EXPECT_EQ(r.route, WitnessCase::KilledEigenvector);
  EXPECT_EQ(r.witness.p_eigen, Rational(4));
  EXPECT_EQ(r.witness.x_eigen, Rational(0));
  EXPECT_TRUE(witness_holds(mp, r.witness));
}

TEST(Witness, NilpotentBWithoutOtherEigenvalues) {
  // B = J_2(0), A in the solution space: A = [[0, 1], [0, 1]]
  const auto mp = xkx(DenseMatrix{{0, 1}, {0, 1}}, jordan_block(2, 0));
  ASSERT_TRUE(verify_equation(mp));
  const auto w = find_onedim_submodule(mp);
  EXPECT_TRUE(witness_holds(mp, w));
}

TEST(Witness, MirroredSearchForKxP1) {
  const auto mp = ModulePair::make(DenseMatrix{{1, 0}, {5, 3}}, DenseMatrix{{-1, 0}, {0, 0}},
                                   Flavor::KxP1);
  ASSERT_TRUE(verify_equation(mp));
  const auto w = find_onedim_submodule(mp);
  EXPECT_TRUE(witness_holds(mp, w));
  EXPECT_EQ(w.p_eigen, Rational(0));
}

TEST(Witness, Errors) {
  EXPECT_THROW(find_onedim_submodule(xkx(DenseMatrix{{1, 1}, {1, 1}}, DenseMatrix{{-1, 0}, {0, 0}})),
               NotAModule);
  EXPECT_THROW(find_onedim_submodule(xkx(DenseMatrix{{0, -2}, {1, 0}}, DenseMatrix(2, 2))),
               IrrationalSpectrum);
  EXPECT_THROW(find_onedim_submodule(xkx(DenseMatrix(2, 2), DenseMatrix{{0, -2}, {1, 0}})),
               IrrationalSpectrum);
}

TEST(Witness, RandomModules) {
  Rng rng(51);
  int checked = 0;
  for (Flavor f : {Flavor::KxP1, Flavor::KxP2, Flavor::KxP3, Flavor::KxP4, Flavor::XKx}) {
    for (int trial = 0; trial < 15; ++trial) {
      const auto mp = gen::random_module(1 + trial % 5, f, rng);
      if (!has_rational_spectrum(mp.A) || !has_rational_spectrum(mp.B)) continue;
      EXPECT_TRUE(witness_holds(mp, find_onedim_submodule(mp)));
      ++checked;
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(Irreducible, OnlyDimensionOne) {
  EXPECT_TRUE(is_irreducible(xkx(DenseMatrix{{3}}, DenseMatrix{{-1}})).irreducible);
  const auto r = is_irreducible(xkx(DenseMatrix{{0, -2}, {1, 0}}, DenseMatrix(2, 2)));
  EXPECT_FALSE(r.irreducible);
  EXPECT_FALSE(r.witness);
  EXPECT_TRUE(r.note);
}

TEST(RegularSingular, Projectors) {
  Rng rng(52);
  for (const Rational& lambda : {Rational(1), Rational(-3), Rational(1, 2)}) {
    const DenseMatrix B = gen::random_quasi_idempotent(4, 2, rng) * lambda;
    const auto [e, f] = regular_singular_decomposition(B, lambda);
    const auto id = DenseMatrix::identity(4);
    EXPECT_EQ(e * e, e);
    EXPECT_EQ(f * f, f);
    EXPECT_EQ(e + f, id);
    EXPECT_TRUE((e * f).is_zero());
    EXPECT_EQ(B * e, e * -lambda);
    EXPECT_TRUE((B * f).is_zero());
  }
  EXPECT_THROW(regular_singular_decomposition(DenseMatrix{{1}}, 1), NotQuasiIdempotent);
  EXPECT_THROW(regular_singular_decomposition(DenseMatrix{{1}}, 0), InvalidArgument);
}

TEST(Commutant, DistinctEigenvalues) {
  const auto c = commutant(xkx(DenseMatrix::diagonal(std::vector<Rational>{1, 2}), DenseMatrix(2, 2)));
  EXPECT_EQ(c.size(), 2U);
  for (const auto& m : c) EXPECT_EQ(m(0, 1), Rational(0));
}

TEST(Indecomposable, SplitOperatorCounterexamples) {
  const auto two = is_indecomposable(xkx(DenseMatrix{{2, 1}, {0, 2}}, DenseMatrix{{-1, 0}, {0, 0}}));
  EXPECT_EQ(two.verdict, Verdict::Indecomposable);
  const auto three = is_indecomposable(
      xkx(DenseMatrix{{0, 0, 0}, {0, 0, 1}, {0, 0, 0}}, DenseMatrix{{-1, 1, 0}, {0, -1, 0}, {0, 0, 0}}));
  EXPECT_EQ(three.verdict, Verdict::Indecomposable);
}

TEST(Indecomposable, ZeroModuleSplits) {
  const auto r = is_indecomposable(xkx(DenseMatrix(2, 2), DenseMatrix(2, 2)));
  EXPECT_EQ(r.verdict, Verdict::Decomposable);
  ASSERT_TRUE(r.splitting_idempotent);
  EXPECT_EQ(*r.splitting_idempotent, (DenseMatrix{{1, 0}, {0, 0}}));
}

TEST(Indecomposable, DirectSumsAreDecomposable) {
  Rng rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const auto m1 = gen::random_module(1 + trial % 3, Flavor::XKx, rng);
    const auto m2 = gen::random_module(1 + (trial + 1) % 2, Flavor::XKx, rng);
    const auto s = gen::random_invertible(m1.dim() + m2.dim(), rng);
    const auto si = inverse(s);
    const DenseMatrix a = s * direct_sum(std::vector<DenseMatrix>{m1.A, m2.A}) * si;
    const DenseMatrix b = s * direct_sum(std::vector<DenseMatrix>{m1.B, m2.B}) * si;
    const auto mp = xkx(a, b);
    const auto r = is_indecomposable(mp);
    EXPECT_NE(r.verdict, Verdict::Indecomposable);
    if (r.splitting_idempotent) {
      const auto& e = *r.splitting_idempotent;
      EXPECT_EQ(e * e, e);
      EXPECT_EQ(e * a, a * e);
      EXPECT_EQ(e * b, b * e);
      EXPECT_FALSE(e.is_zero());
      EXPECT_NE(e, DenseMatrix::identity(mp.dim()));
    }
  }
}

TEST(Tganz, FamiliesVerify) {
  Rng rng(54);
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Rational> params;
    for (std::size_t i = 0; i < n; ++i) params.push_back(gen::small_rational(rng));
    EXPECT_TRUE(verify_equation(tganz_family(n, TganzCase::Row, params, -1)));
    EXPECT_TRUE(verify_equation(tganz_family(n, TganzCase::Column, params, 0)));
    EXPECT_TRUE(verify_equation(tganz_family(n, TganzCase::Zero, {}, Rational(7, 2))));
  }
  const auto col = tganz_family(3, TganzCase::Column, std::vector<Rational>{1, 2, 3}, 0);
  EXPECT_EQ(col.A, (DenseMatrix{{0, 0, 1}, {0, 0, 2}, {0, 0, 3}}));
  EXPECT_EQ(is_indecomposable(col).verdict, Verdict::Indecomposable);
}

TEST(Tganz, InvalidParameters) {
  const std::vector<Rational> two{1, 2};
  EXPECT_THROW(tganz_family(3, TganzCase::Row, two, -1), InvalidCaseParams);
  EXPECT_THROW(tganz_family(2, TganzCase::Row, two, 0), InvalidCaseParams);
  EXPECT_THROW(tganz_family(2, TganzCase::Column, two, 1), InvalidCaseParams);
  EXPECT_THROW(tganz_family(2, TganzCase::Zero, {}, -1), InvalidCaseParams);
  EXPECT_THROW(tganz_family(2, TganzCase::Zero, two, 3), InvalidCaseParams);
  EXPECT_THROW(tganz_family(0, TganzCase::Zero, {}, 3), InvalidCaseParams);
}

}  // namespace

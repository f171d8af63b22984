#include "rbmod/error.hpp"
#include "rbmod/matsolve.hpp"
#include "rbmod/rbops.hpp"

#include "support/generators.hpp"

#include <gtest/gtest.h>

namespace {

using namespace rbmod;
using rbmod::gen::Rng;

Polynomial poly(std::vector<Rational> c) { return Polynomial(std::move(c)); }

TEST(RBOps, ApplyOperatorExamples) {
  EXPECT_EQ(apply_operator(RBOperator::make(Family::P2, 1), poly({0, 1, 3})), poly({0, -1, -3}));
  EXPECT_EQ(apply_operator(RBOperator::make(Family::P4, 1), poly({5, 0, 0, 1})), poly({-5}));
  EXPECT_EQ(apply_operator(RBOperator::make(Family::P1, 1, Rational(1)), poly({0, 0, 1})),
            poly({-1}));
  EXPECT_EQ(apply_operator(RBOperator::make(Family::P3, 2), poly({4, 1})), poly({0, -2}));
  // weight 2, b = 3: x^2 -> (-2)^{-1} 9
  EXPECT_EQ(apply_operator(RBOperator::make(Family::P1, 2, Rational(3)), poly({0, 0, 1})),
            poly({Rational(-9, 2)}));
}

TEST(RBOps, ApplyOperatorErrors) {
  const auto op = RBOperator::make(Family::P2, 1, std::nullopt, 3);
  EXPECT_THROW(apply_operator(op, Polynomial::monomial(4)), TruncationExceeded);
  EXPECT_THROW(apply_operator(RBOperator::make(Family::XKx, 1), poly({1, 1})),
               ConstantTermNotAllowed);
  EXPECT_THROW(RBOperator::make(Family::P2, 0), InvalidArgument);
  EXPECT_THROW(RBOperator::make(Family::P1, 1), InvalidArgument);
  EXPECT_THROW(RBOperator::make(Family::P2, 1, Rational(2)), InvalidArgument);
}

TEST(RBOps, IdentityHoldsForAllFamilies) {
  for (const Rational& w : {Rational(1), Rational(2), Rational(-3), Rational(1, 2)}) {
    for (Family f : {Family::P2, Family::P3, Family::P4, Family::XKx}) {
      EXPECT_TRUE(verify_rb_identity(RBOperator::make(f, w)).holds) << to_string(f) << " " << w;
    }
    for (const Rational& b : {Rational(1), Rational(-2), Rational(1, 2)}) {
      EXPECT_TRUE(verify_rb_identity(RBOperator::make(Family::P1, w, b)).holds) << w << " " << b;
    }
  }
}

TEST(RBOps, PerturbedOperatorsFail) {
  // P3 with P(1) = 1
  const MonomialImage p3_bad = [](unsigned n) {
    return n == 0 ? Polynomial::constant(1) : Polynomial::monomial(n, -1);
  };
  const auto r = verify_rb_identity(p3_bad, 1, 0, 12);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.first_failure);
  EXPECT_EQ(*r.first_failure, std::make_pair(0U, 0U));

  // P2 at the wrong weight
  const MonomialImage p2 = [](unsigned n) { return Polynomial::monomial(n, -1); };
  EXPECT_FALSE(verify_rb_identity(p2, 2, 0, 12).holds);

  // P1 with the sign pattern dropped
  const MonomialImage p1_bad = [](unsigned n) { return Polynomial::constant(Rational(2).pow(n)); };
  EXPECT_FALSE(verify_rb_identity(p1_bad, 1, 0, 12).holds);

  // x k[x] operator shifting degree
  const MonomialImage shift = [](unsigned n) { return Polynomial::monomial(n + 1, -1); };
  EXPECT_FALSE(verify_rb_identity(shift, 1, 1, 12).holds);
}

TEST(RBOps, ModulePairValidation) {
  EXPECT_THROW(ModulePair::make(DenseMatrix(2, 3), DenseMatrix(2, 2), Flavor::XKx), NonSquare);
  EXPECT_THROW(ModulePair::make(DenseMatrix(2, 2), DenseMatrix(3, 3), Flavor::XKx),
               DimensionMismatch);
}

TEST(RBOps, AxiomMatchesEquationOnExamples) {
  const auto op = RBOperator::make(Family::XKx, 1);
  const auto good = ModulePair::make(DenseMatrix{{2, 1}, {0, 2}}, DenseMatrix{{-1, 0}, {0, 0}},
                                     Flavor::XKx);
  EXPECT_TRUE(verify_module_axiom(op, good).holds);
  const auto bad = ModulePair::make(DenseMatrix{{2, 1}, {1, 2}}, DenseMatrix{{-1, 0}, {0, 0}},
                                    Flavor::XKx);
  const auto r = verify_module_axiom(op, bad);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.first_failure, 1U);
  EXPECT_THROW(verify_module_axiom(RBOperator::make(Family::P2, 1), good), FlavorMismatch);
}

TEST(RBOps, KxFlavorsNeedQuasiIdempotentB) {
  // A = 0 leaves only the condition on B
  const DenseMatrix zero(2, 2);
  for (Flavor f : {Flavor::KxP1, Flavor::KxP2, Flavor::KxP3, Flavor::KxP4}) {
    const auto op = f == Flavor::KxP1 ? RBOperator::make(Family::P1, 1, Rational(1))
                                      : RBOperator::make(family_of(f), 1);
    EXPECT_TRUE(verify_module_axiom(op, ModulePair::make(zero, DenseMatrix{{-1, 0}, {0, 0}}, f)).holds);
    EXPECT_FALSE(verify_module_axiom(op, ModulePair::make(zero, DenseMatrix{{1, 0}, {0, 0}}, f)).holds);
  }
}

TEST(RBOps, RandomPairsAgreeWithEquation) {
  Rng rng(31);
  for (Flavor f : {Flavor::KxP1, Flavor::KxP2, Flavor::KxP3, Flavor::KxP4, Flavor::XKx}) {
    const auto op = f == Flavor::KxP1 ? RBOperator::make(Family::P1, 1, Rational(-2))
                                      : RBOperator::make(family_of(f), 1);
    for (int trial = 0; trial < 20; ++trial) {
      auto mp = gen::random_module(1 + trial % 4, f, rng);
      if (trial % 2) mp.A(0, mp.dim() - 1) += 1;
      EXPECT_EQ(verify_module_axiom(op, mp).holds, verify_equation(mp)) << to_string(f);
    }
  }
}

TEST(RBOps, WeightRoundTrip) {
  Rng rng(32);
  const auto unit = RBOperator::make(Family::P1, 1, Rational(1, 2));
  const auto mp = gen::random_module(3, Flavor::KxP1, rng);
  for (const Rational& lambda : {Rational(2), Rational(-3), Rational(1, 2)}) {
    const auto [op, scaled] = rescale_weight(unit, mp, lambda);
    EXPECT_EQ(op.weight, lambda);
    EXPECT_TRUE(verify_module_axiom(op, scaled).holds);
    const auto [back, orig] = normalize_weight(op, scaled);
    EXPECT_EQ(back.b, unit.b);
    EXPECT_EQ(orig.B, mp.B);
    EXPECT_EQ(orig.A, mp.A);
  }
}

TEST(RBOps, SemidirectSum) {
  Rng rng(33);
  for (Flavor f : {Flavor::KxP2, Flavor::KxP4, Flavor::XKx}) {
    const auto op = RBOperator::make(family_of(f), 1, std::nullopt, 6);
    const auto mp = gen::random_module(2, f, rng);
    EXPECT_TRUE(semidirect_sum_check(op, mp)) << to_string(f);
    auto broken = mp;
    broken.B = DenseMatrix::identity(2);
    EXPECT_FALSE(semidirect_sum_check(op, broken)) << to_string(f);
  }
}

TEST(RBOps, DerivedIdentities) {
  Rng rng(34);
  for (Flavor f : {Flavor::KxP1, Flavor::KxP3, Flavor::XKx}) {
    EXPECT_TRUE(verify_derived_identities(gen::random_module(3, f, rng), 12, 4));
  }
  const auto bad = ModulePair::make(DenseMatrix{{1, 1}, {1, 1}}, DenseMatrix{{-1, 0}, {0, 0}},
                                    Flavor::XKx);
  EXPECT_FALSE(verify_derived_identities(bad, 3, 2));
}

}  // namespace

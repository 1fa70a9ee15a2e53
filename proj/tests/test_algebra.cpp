#include <gtest/gtest.h>

#include "support.hpp"

namespace zinb {
namespace {

using testing::constants;
using testing::matrix;
using testing::nilpotent2;
using testing::S;

// Brute-force Zinbiel identity on basis triples, independent of validate_zinbiel.
bool zinbiel_by_hand(const StructureConstants& g) {
  const std::size_t d = g.dim;
  auto mul = [&](const Vector& x, const Vector& y) {
    Vector out = zero_vector(g.field, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) out[k] += x[i] * y[j] * g.at(i, j, k);
    return out;
  };
  auto e = [&](std::size_t i) {
    Vector v = zero_vector(g.field, d);
    v[i] = Scalar::one(g.field);
    return v;
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const auto lhs = mul(mul(e(i), e(j)), e(k));
        auto yz = mul(e(j), e(k));
        const auto zy = mul(e(k), e(j));
        for (std::size_t c = 0; c < d; ++c) yz[c] += zy[c];
        if (lhs != mul(e(i), yz)) return false;
      }
  return true;
}

TEST(ValidateZinbiel, AbelianDim2IsValid) {
  const auto v = validate_zinbiel(StructureConstants::zero(Field::rationals(), 2));
  EXPECT_TRUE(v.ok());
  EXPECT_EQ(v.checked, 8u);
}

TEST(ValidateZinbiel, NilpotentDim2IsValidOnAllEightTriples) {
  const auto v = validate_zinbiel(constants(Field::rationals(), 2, {{0, 0, 1, 1}}));
  EXPECT_TRUE(v.ok());
  EXPECT_EQ(v.checked, 8u);
  EXPECT_TRUE(v.violations.empty());
}

TEST(ValidateZinbiel, IdempotentDim1FailsWithResidualMinusE) {
  const auto q = Field::rationals();
  const auto v = validate_zinbiel(constants(q, 1, {{0, 0, 0, 1}}));
  EXPECT_FALSE(v.ok());
  ASSERT_EQ(v.violations.size(), 1u);
  EXPECT_EQ(v.violations[0].indices, (std::vector<std::size_t>{0, 0, 0}));
  // LHS e, RHS 2e.
  EXPECT_EQ(v.violations[0].residual, (Vector{S(q, -1)}));
}

TEST(ValidateZinbiel, WrongShapeIsUsageError) {
  auto g = StructureConstants::zero(Field::rationals(), 2);
  g.gamma.pop_back();
  EXPECT_THROW(validate_zinbiel(g), std::invalid_argument);
}

TEST(ValidateZinbiel, AgreesWithBruteForceOnRandomConstants) {
  for (const auto& f : testing::suite_fields()) {
    InstanceGenerator gen(f, 3);
    std::size_t accepted = 0;
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t d = 1 + trial % 3;
      auto g = StructureConstants::zero(f, d);
      // Sparse and mostly upper triangular so that some candidates pass.
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          for (std::size_t k = 0; k < d; ++k) {
            const double p = k > std::max(i, j) ? 0.5 : 0.97;
            g.at(i, j, k) = gen.sparse_scalar(p);
          }
      const bool expected = zinbiel_by_hand(g);
      EXPECT_EQ(validate_zinbiel(g).ok(), expected);
      accepted += expected;
    }
    EXPECT_GT(accepted, 10u) << f.to_string();
  }
}

TEST(InstanceGenerator, FindsNonAbelianAlgebras) {
  for (const auto& f : testing::suite_fields()) {
    InstanceGenerator gen(f, 5);
    for (std::size_t d = 2; d <= 3; ++d) {
      const auto a = gen.algebra(d);
      ASSERT_TRUE(a.has_value());
      EXPECT_FALSE(product_cochain(*a).is_zero());
      EXPECT_TRUE(zinbiel_by_hand(a->constants()));
    }
    EXPECT_FALSE(gen.algebra(1).has_value());
  }
}

TEST(ValidateMorphism, IdentityAndZero) {
  const auto q = Field::rationals();
  const auto r = nilpotent2(q);
  EXPECT_TRUE(validate_morphism(r, r, Matrix::identity(q, 2)).ok());
  EXPECT_TRUE(validate_morphism(r, r, Matrix::zero(q, 2, 2)).ok());
  const auto s = testing::nilpotent3(q);
  EXPECT_TRUE(validate_morphism(r, s, Matrix::zero(q, 3, 2)).ok());
}

TEST(ValidateMorphism, SwapFailsOnTheSquare) {
  const auto q = Field::rationals();
  const auto r = nilpotent2(q);
  const auto v = validate_morphism(r, r, matrix(q, 2, 2, {0, 1, 1, 0}));
  EXPECT_FALSE(v.ok());
  // f(e0 e0) = f(e1) = e0 while f(e0) f(e0) = e1 e1 = 0; symmetrically
  // f(e1 e1) = 0 while f(e1) f(e1) = e0 e0 = e1.
  ASSERT_EQ(v.violations.size(), 2u);
  EXPECT_EQ(v.violations[0].indices, (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(v.violations[0].residual, (Vector{S(q, 1), S(q, 0)}));
  EXPECT_EQ(v.violations[1].indices, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(v.violations[1].residual, (Vector{S(q, 0), S(q, -1)}));
}

TEST(ValidateMorphism, Errors) {
  const auto q = Field::rationals();
  const auto r = nilpotent2(q);
  EXPECT_THROW(validate_morphism(r, r, Matrix::zero(q, 2, 3)), std::invalid_argument);
  const auto r5 = nilpotent2(Field::prime(5));
  EXPECT_THROW(validate_morphism(r, r5, Matrix::zero(q, 2, 2)), std::domain_error);
}

TEST(BimoduleViaMorphism, IdentityGivesTheProduct) {
  const auto q = Field::rationals();
  const auto r = testing::nilpotent3(q);
  const auto m = bimodule_via_morphism(AlgebraMorphism::identity(r));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) {
        EXPECT_EQ(m.left(i, a, b), r.constants().at(i, a, b));
        EXPECT_EQ(m.right(a, i, b), r.constants().at(a, i, b));
      }
}

TEST(BimoduleViaMorphism, ZeroGivesZeroActions) {
  const auto q = Field::rationals();
  const auto r = nilpotent2(q);
  const auto m = bimodule_via_morphism(AlgebraMorphism::zero(r, testing::nilpotent3(q)));
  EXPECT_EQ(m.dim(), 3u);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) {
        EXPECT_TRUE(m.left(i, a, b).is_zero());
        EXPECT_TRUE(m.right(a, i, b).is_zero());
      }
}

TEST(BimoduleViaMorphism, NilpotentDim2OnlyLeftAction11To2) {
  // 1-based: lambda_{11}^2 = 1, i.e. e0 . e0 = e1 in the module.
  const auto q = Field::rationals();
  const auto r = nilpotent2(q);
  const auto m = bimodule_via_morphism(AlgebraMorphism::identity(r));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) {
        const bool hit = i == 0 && a == 0 && b == 1;
        EXPECT_EQ(m.left(i, a, b), hit ? S(q, 1) : S(q, 0));
      }
}

TEST(BimoduleViaMorphism, RandomMorphismsGiveBimodules) {
  // validate_bimodule runs inside; a failure would throw.
  for (const auto& inst : testing::instance_suite(15, 21)) {
    const auto& m = inst.complex.induced_module();
    EXPECT_EQ(m.dim(), inst.complex.target_dim());
  }
}

TEST(ValidateBimodule, RejectsABrokenAction) {
  const auto q = Field::rationals();
  const auto r = nilpotent2(q);
  // e0 acting by 1 on both sides: (e0 e0) a = 0 but e0 (e0 a) + e0 (a e0) = 2a.
  std::vector<Scalar> left{S(q, 1), S(q, 0)};
  std::vector<Scalar> right{S(q, 1), S(q, 0)};
  const auto v = validate_bimodule(r, 1, left, right);
  EXPECT_FALSE(v.ok());
  EXPECT_FALSE(v.violations.empty());
}

}  // namespace
}  // namespace zinb

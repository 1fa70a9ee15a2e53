#include <gtest/gtest.h>

#include "support.hpp"

namespace zinb {
namespace {

using testing::nilpotent2;
using testing::S;

// Third route for the regular module: d^1 and d^2 written out with the
// algebra product on coordinate vectors.
Vector add(Vector a, const Vector& b, int sign = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = sign > 0 ? a[i] + b[i] : a[i] - b[i];
  return a;
}

Vector basis(const Field& f, std::size_t d, std::size_t i) {
  Vector v = zero_vector(f, d);
  v[i] = Scalar::one(f);
  return v;
}

Cochain d1_by_hand(const ZinbielAlgebra& r, const Cochain& phi) {
  const std::size_t d = r.dim();
  auto out = Cochain::zero(r.field(), 2, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto x = basis(r.field(), d, i);
      const auto y = basis(r.field(), d, j);
      const std::array<Vector, 1> px{x}, py{y};
      const std::array<Vector, 1> pxy{r.product(x, y)};
      auto v = add(r.product(x, phi.evaluate(py)), phi.evaluate(pxy), -1);
      v = add(v, r.product(phi.evaluate(px), y));
      const std::array<std::size_t, 2> t{i, j};
      out.set_value(out.tuple_index(t), v);
    }
  return out;
}

Cochain d2_by_hand(const ZinbielAlgebra& r, const Cochain& phi) {
  const std::size_t d = r.dim();
  auto out = Cochain::zero(r.field(), 3, d, d);
  auto ev = [&](const Vector& a, const Vector& b) {
    const std::array<Vector, 2> args{a, b};
    return phi.evaluate(args);
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const auto x = basis(r.field(), d, i);
        const auto y = basis(r.field(), d, j);
        const auto z = basis(r.field(), d, k);
        auto v = r.product(x, add(ev(y, z), ev(z, y)));
        v = add(v, ev(r.product(x, y), z), -1);
        v = add(v, ev(x, add(r.product(y, z), r.product(z, y))));
        v = add(v, r.product(ev(x, y), z), -1);
        const std::array<std::size_t, 3> t{i, j, k};
        out.set_value(out.tuple_index(t), v);
      }
  return out;
}

TEST(Differential, D1OfIdentityIsTheProduct) {
  for (const auto& inst : testing::instance_suite(10, 31)) {
    const auto& r = inst.complex.morphism().source();
    const auto module = Bimodule::regular(r);
    EXPECT_EQ(differential(module, identity_cochain(r)), product_cochain(r)) << inst.label;
  }
}

TEST(Differential, ZeroCochainsMapToZero) {
  const auto r = testing::nilpotent3(Field::rationals());
  const auto module = Bimodule::regular(r);
  for (std::size_t n = 1; n <= 3; ++n) {
    EXPECT_TRUE(differential(module, Cochain::zero(r.field(), n, 3, 3)).is_zero());
  }
}

TEST(Differential, AbelianKillsEverything) {
  const auto f = Field::prime(7);
  const auto a = ZinbielAlgebra::abelian(f, 2);
  const auto module = Bimodule::regular(a);
  InstanceGenerator gen(f, 1);
  for (std::size_t n = 1; n <= 3; ++n) {
    EXPECT_TRUE(differential(module, gen.cochain(n, 2, 2)).is_zero());
    EXPECT_TRUE(differential_matrix(module, n).is_zero());
  }
}

TEST(Differential, ArityOutOfRangeIsUsageError) {
  const auto r = nilpotent2(Field::rationals());
  const auto module = Bimodule::regular(r);
  EXPECT_THROW(differential(module, Cochain::zero(r.field(), 4, 2, 2)), std::invalid_argument);
  EXPECT_THROW(differential(module, Cochain::zero(r.field(), 2, 3, 2)), std::invalid_argument);
}

TEST(Differential, HandWrittenFormulasAgree) {
  for (const auto& inst : testing::instance_suite(10, 32)) {
    const auto& r = inst.complex.morphism().source();
    const auto module = Bimodule::regular(r);
    InstanceGenerator gen(r.field(), 2);
    const auto phi1 = gen.cochain(1, r.dim(), r.dim());
    const auto phi2 = gen.cochain(2, r.dim(), r.dim());
    EXPECT_EQ(differential(module, phi1), d1_by_hand(r, phi1)) << inst.label;
    EXPECT_EQ(differential(module, phi2), d2_by_hand(r, phi2)) << inst.label;
  }
}

TEST(DifferentialMatrix, AbelianDim1IsOneByOneZero) {
  const auto m = differential_matrix(Bimodule::regular(ZinbielAlgebra::abelian(Field::rationals(), 1)), 1);
  EXPECT_EQ(m.rows(), 1u);
  EXPECT_EQ(m.cols(), 1u);
  EXPECT_TRUE(m.is_zero());
}

TEST(DifferentialMatrix, NilpotentDim2SendsIdentityToProduct) {
  const auto r = nilpotent2(Field::rationals());
  const auto m = differential_matrix(Bimodule::regular(r), 1);
  EXPECT_EQ(m.rows(), 8u);
  EXPECT_EQ(m.cols(), 4u);
  EXPECT_EQ(m.apply(identity_cochain(r).flat()), product_cochain(r).flat());
}

TEST(DifferentialMatrix, MatchesDirectEvaluationOnBasisCochains) {
  for (const auto& inst : testing::instance_suite(6, 33)) {
    for (const Bimodule* module : {&inst.complex.source_module(), &inst.complex.induced_module()}) {
      const std::size_t d = module->base().dim();
      const std::size_t m = module->dim();
      for (std::size_t n = 1; n <= 3; ++n) {
        const auto mat = differential_matrix(*module, n);
        const std::size_t cols = Cochain::space_dim(n, d, m);
        ASSERT_EQ(mat.cols(), cols);
        for (std::size_t c = 0; c < cols; ++c) {
          Vector e = zero_vector(module->field(), cols);
          e[c] = Scalar::one(module->field());
          const auto direct = differential(*module, Cochain::from_flat(module->field(), n, d, m, e));
          ASSERT_EQ(mat.apply(e), direct.flat()) << inst.label << " degree " << n << " column " << c;
        }
      }
    }
  }
}

TEST(DifferentialMatrix, SquaresToZero) {
  for (const auto& inst : testing::instance_suite(8, 34)) {
    for (const Bimodule* module : {&inst.complex.source_module(), &inst.complex.target_module(),
                                   &inst.complex.induced_module()}) {
      EXPECT_TRUE((differential_matrix(*module, 2) * differential_matrix(*module, 1)).is_zero()) << inst.label;
      EXPECT_TRUE((differential_matrix(*module, 3) * differential_matrix(*module, 2)).is_zero()) << inst.label;
    }
  }
}

TEST(PushForward, IdentityAndZero) {
  const auto f = Field::prime(5);
  const auto r = testing::nilpotent3(f);
  InstanceGenerator gen(f, 4);
  const auto id = AlgebraMorphism::identity(r);
  const auto zero = AlgebraMorphism::zero(r, r);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto c = gen.cochain(n, 3, 3);
    EXPECT_EQ(push_forward_left(id, c), c);
    EXPECT_EQ(push_forward_right(id, c), c);
    EXPECT_TRUE(push_forward_left(zero, c).is_zero());
    EXPECT_TRUE(push_forward_right(zero, c).is_zero());
  }
}

TEST(PushForward, ProductUnderIdentity) {
  const auto r = nilpotent2(Field::rationals());
  const auto id = AlgebraMorphism::identity(r);
  const auto m = product_cochain(r);
  EXPECT_EQ(push_forward_left(id, m), m);
  EXPECT_EQ(push_forward_right(id, m), m);
}

TEST(PushForward, MatricesMatchDirectRoute) {
  for (const auto& inst : testing::instance_suite(6, 35)) {
    const auto& f = inst.complex.morphism();
    InstanceGenerator gen(f.field(), 6);
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto xi = gen.cochain(n, f.source().dim(), f.source().dim());
      const auto pi = gen.cochain(n, f.target().dim(), f.target().dim());
      EXPECT_EQ(push_forward_left_matrix(f, n).apply(xi.flat()), push_forward_left(f, xi).flat()) << inst.label;
      EXPECT_EQ(push_forward_right_matrix(f, n).apply(pi.flat()), push_forward_right(f, pi).flat()) << inst.label;
    }
  }
}

TEST(PushForward, CommutesWithDifferentials) {
  for (const auto& inst : testing::instance_suite(8, 36)) {
    const auto& c = inst.complex;
    const auto& f = c.morphism();
    InstanceGenerator gen(f.field(), 7);
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto xi = gen.cochain(n, c.source_dim(), c.source_dim());
      const auto pi = gen.cochain(n, c.target_dim(), c.target_dim());
      EXPECT_EQ(push_forward_left(f, differential(c.source_module(), xi)),
                differential(c.induced_module(), push_forward_left(f, xi)))
          << inst.label;
      EXPECT_EQ(push_forward_right(f, differential(c.target_module(), pi)),
                differential(c.induced_module(), push_forward_right(f, pi)))
          << inst.label;
    }
  }
}

TEST(MorphismComplex, ZeroMapsToZero) {
  const auto c = MorphismComplex(AlgebraMorphism::identity(testing::nilpotent3(Field::rationals())));
  for (std::size_t n = 1; n <= 3; ++n) EXPECT_TRUE(c.differential(c.zero(n)).is_zero());
}

TEST(MorphismComplex, IdentitiesInDegreeOne) {
  for (const auto& inst : testing::instance_suite(6, 37)) {
    const auto& c = inst.complex;
    const auto& r = c.morphism().source();
    const auto& s = c.morphism().target();
    TripleCochain theta{1, identity_cochain(r), identity_cochain(s), Cochain::zero(c.field(), 0, r.dim(), s.dim())};
    const auto d = c.differential(theta);
    EXPECT_EQ(d.xi, product_cochain(r)) << inst.label;
    EXPECT_EQ(d.pi, product_cochain(s)) << inst.label;
    EXPECT_TRUE(d.phi.is_zero()) << inst.label;
  }
}

TEST(MorphismComplex, DirectRouteSquaresToZero) {
  for (const auto& inst : testing::instance_suite(8, 38)) {
    InstanceGenerator gen(inst.complex.field(), 8);
    for (std::size_t n = 1; n <= 2; ++n) {
      const auto theta = gen.triple(inst.complex, n);
      EXPECT_TRUE(inst.complex.differential(inst.complex.differential(theta)).is_zero()) << inst.label;
    }
  }
}

TEST(MorphismComplex, MatrixMatchesDirectRoute) {
  for (const auto& inst : testing::instance_suite(6, 39)) {
    InstanceGenerator gen(inst.complex.field(), 9);
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto theta = gen.triple(inst.complex, n);
      EXPECT_EQ(inst.complex.differential_matrix(n).apply(theta.flat()), inst.complex.differential(theta).flat())
          << inst.label;
    }
  }
}

TEST(MorphismComplex, RejectsWrongShapes) {
  const auto c = MorphismComplex(AlgebraMorphism::identity(nilpotent2(Field::rationals())));
  EXPECT_THROW(c.differential(c.zero(4)), std::invalid_argument);
  EXPECT_THROW(c.differential_matrix(4), std::invalid_argument);
  EXPECT_THROW(c.from_flat(2, Vector{}), std::invalid_argument);
}

TEST(Cohomology, AbelianDim1RegularH2IsOne) {
  EXPECT_EQ(cohomology_dim(Bimodule::regular(ZinbielAlgebra::abelian(Field::rationals(), 1)), 2), 1u);
}

TEST(Cohomology, DimZeroIsZero) {
  const auto a = ZinbielAlgebra::abelian(Field::rationals(), 0);
  const auto c = MorphismComplex(AlgebraMorphism::identity(a));
  for (std::size_t n = 2; n <= 3; ++n) {
    EXPECT_EQ(cohomology_dim(Bimodule::regular(a), n), 0u);
    EXPECT_EQ(cohomology_dim(c, n), 0u);
  }
}

TEST(Cohomology, IdentityOnAbelianDim1H2IsOne) {
  const auto c = MorphismComplex(AlgebraMorphism::identity(ZinbielAlgebra::abelian(Field::rationals(), 1)));
  EXPECT_EQ(c.cochain_dim(2), 3u);
  EXPECT_EQ(rank(c.differential_matrix(1)), 1u);
  EXPECT_EQ(rank_nullspace(c.differential_matrix(2)).nullspace.size(), 2u);
  EXPECT_EQ(cohomology_dim(c, 2), 1u);
}

TEST(Cohomology, DegreeOutOfRangeIsUsageError) {
  const auto a = nilpotent2(Field::rationals());
  EXPECT_THROW(cohomology_dim(Bimodule::regular(a), 1), std::invalid_argument);
  EXPECT_THROW(cohomology_dim(MorphismComplex(AlgebraMorphism::identity(a)), 4), std::invalid_argument);
}

TEST(Cocycles, ProductIsACocycle) {
  for (const auto& inst : testing::instance_suite(10, 40)) {
    const auto& r = inst.complex.morphism().source();
    EXPECT_TRUE(is_cocycle(Bimodule::regular(r), product_cochain(r)).ok) << inst.label;
  }
}

TEST(Cocycles, CoboundariesHavePreimages) {
  for (const auto& inst : testing::instance_suite(6, 41)) {
    const auto& c = inst.complex;
    InstanceGenerator gen(c.field(), 10);
    const auto& module = c.source_module();
    const auto phi = gen.cochain(1, c.source_dim(), c.source_dim());
    const auto x = differential(module, phi);
    EXPECT_TRUE(is_cocycle(module, x).ok);
    const auto pre = coboundary_preimage(module, x);
    ASSERT_TRUE(pre.has_value()) << inst.label;
    EXPECT_EQ(differential(module, *pre), x);

    const auto theta = c.differential(gen.triple(c, 1));
    EXPECT_TRUE(is_cocycle(c, theta).ok);
    const auto tpre = coboundary_preimage(c, theta);
    ASSERT_TRUE(tpre.has_value()) << inst.label;
    EXPECT_EQ(c.differential(*tpre), theta);
  }
}

TEST(Cocycles, AbelianDim1BasisCochainIsNotACoboundary) {
  const auto q = Field::rationals();
  const auto module = Bimodule::regular(ZinbielAlgebra::abelian(q, 1));
  const auto mu = testing::mu(q);
  EXPECT_TRUE(is_cocycle(module, mu).ok);
  EXPECT_EQ(coboundary_preimage(module, mu), std::nullopt);
}

TEST(Cocycles, NonCocycleReportsResidual) {
  const auto q = Field::rationals();
  const auto r = nilpotent2(q);
  // phi(e0, e0) = e0 has d^2 phi (e0, e0, e0) = e0 . 2 e0 - 0 + 0 - e0 . e0 = e1.
  auto phi = Cochain::zero(q, 2, 2, 2);
  phi.at(std::array<std::size_t, 2>{0, 0}, 0) = S(q, 1);
  const auto check = is_cocycle(Bimodule::regular(r), phi);
  EXPECT_FALSE(check.ok);
  EXPECT_EQ(check.residual.at(std::array<std::size_t, 3>{0, 0, 0}, 1), S(q, 1));
}

}  // namespace
}  // namespace zinb

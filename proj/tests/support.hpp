// Builders and the seeded instance suite shared by unit and acceptance tests.
#pragma once

#include <array>
#include <initializer_list>
#include <string>
#include <vector>

#include "zinbiel/random_instances.hpp"

namespace zinb::testing {

struct Gamma {
  std::size_t i, j, k;
  std::int64_t value;
};

inline Scalar S(const Field& f, std::int64_t v) { return Scalar::from_int(f, v); }

inline StructureConstants constants(const Field& f, std::size_t dim, std::initializer_list<Gamma> entries) {
  auto g = StructureConstants::zero(f, dim);
  for (const auto& e : entries) g.at(e.i, e.j, e.k) = S(f, e.value);
  return g;
}

inline ZinbielAlgebra algebra(const Field& f, std::size_t dim, std::initializer_list<Gamma> entries) {
  auto v = validate_zinbiel(constants(f, dim, entries));
  if (!v.ok()) throw std::logic_error("test algebra is not Zinbiel");
  return std::move(*v.value);
}

// e0 e0 = e1.
inline ZinbielAlgebra nilpotent2(const Field& f) { return algebra(f, 2, {{0, 0, 1, 1}}); }

// e0 e0 = e1, e0 e1 = e2, e1 e0 = 2 e2.
inline ZinbielAlgebra nilpotent3(const Field& f) { return algebra(f, 3, {{0, 0, 1, 1}, {0, 1, 2, 1}, {1, 0, 2, 2}}); }

inline Matrix matrix(const Field& f, std::size_t rows, std::size_t cols, std::initializer_list<std::int64_t> values) {
  auto m = Matrix::zero(f, rows, cols);
  std::size_t n = 0;
  for (auto v : values) {
    m(n / cols, n % cols) = S(f, v);
    ++n;
  }
  return m;
}

inline AlgebraMorphism morphism(const ZinbielAlgebra& r, const ZinbielAlgebra& s, const Matrix& m) {
  auto v = validate_morphism(r, s, m);
  if (!v.ok()) throw std::logic_error("test morphism is not multiplicative");
  return std::move(*v.value);
}

// The single basis 2-cochain of a one-dimensional space: mu(e0, e0) = e0.
inline Cochain mu(const Field& f) {
  auto c = Cochain::zero(f, 2, 1, 1);
  c.at(std::array<std::size_t, 2>{0, 0}, 0) = Scalar::one(f);
  return c;
}

inline std::vector<Field> suite_fields() {
  return {Field::rationals(), Field::prime(5), Field::prime(7), Field::prime(101)};
}

struct Instance {
  std::string label;
  MorphismComplex complex;
};

// Curated morphisms plus seeded random ones: per field, `random_per_field`
// random instances with algebra dimensions 0..3.
inline std::vector<Instance> instance_suite(std::size_t random_per_field, std::uint64_t seed) {
  std::vector<Instance> out;
  for (const auto& f : suite_fields()) {
    const std::string tag = f.to_string();
    const auto a0 = ZinbielAlgebra::abelian(f, 0);
    const auto a1 = ZinbielAlgebra::abelian(f, 1);
    const auto n2 = nilpotent2(f);
    const auto n3 = nilpotent3(f);
    out.push_back({tag + " dim0 id", MorphismComplex(AlgebraMorphism::identity(a0))});
    out.push_back({tag + " abelian1 id", MorphismComplex(AlgebraMorphism::identity(a1))});
    out.push_back({tag + " abelian1 zero", MorphismComplex(AlgebraMorphism::zero(a1, a1))});
    out.push_back({tag + " nilpotent2 id", MorphismComplex(AlgebraMorphism::identity(n2))});
    out.push_back({tag + " nilpotent3 id", MorphismComplex(AlgebraMorphism::identity(n3))});
    out.push_back({tag + " abelian1 -> nilpotent2", MorphismComplex(morphism(a1, n2, matrix(f, 2, 1, {0, 1})))});
    out.push_back({tag + " nilpotent3 -> nilpotent2", MorphismComplex(morphism(n3, n2, matrix(f, 2, 3, {1, 0, 0, 0, 1, 0})))});

    InstanceGenerator gen(f, seed);
    for (std::size_t k = 0; k < random_per_field; ++k) {
      const std::size_t dr = gen.engine()() % 4;
      const std::size_t kind = gen.engine()() % 4;
      const auto r = gen.algebra_or_abelian(dr);
      const std::string label = tag + " random#" + std::to_string(k);
      if (kind == 0) {
        out.push_back({label + " id", MorphismComplex(AlgebraMorphism::identity(r))});
        continue;
      }
      const auto s = kind == 1 ? r : gen.algebra_or_abelian(gen.engine()() % 4);
      auto m = gen.morphism(r, s);
      if (m) {
        out.push_back({label, MorphismComplex(std::move(*m))});
      } else {
        out.push_back({label + " zero", MorphismComplex(AlgebraMorphism::zero(r, s))});
      }
    }
  }
  return out;
}

}  // namespace zinb::testing

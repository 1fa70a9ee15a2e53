// Finite-dimensional Zinbiel (dual Leibniz) algebras, bimodules and morphisms,
// presented by dense structure constants on a fixed basis e_0..e_{d-1}.
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "zinbiel/field.hpp"
#include "zinbiel/matrix.hpp"

namespace zinb {

/// Raw, unvalidated structure constants: gamma[(i*d + j)*d + k] is the
/// coefficient of e_k in e_i . e_j.
struct StructureConstants {
  Field field;
  std::size_t dim;
  std::vector<Scalar> gamma;

  static StructureConstants zero(const Field& field, std::size_t dim);
  Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return gamma[(i * dim + j) * dim + k]; }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return gamma[(i * dim + j) * dim + k]; }

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;
};

/// A basis triple (or pair) on which an identity fails, with the nonzero
/// residual LHS - RHS.
struct Violation {
  std::vector<std::size_t> indices;
  Vector residual;
};

template <class T>
struct Validated {
  std::optional<T> value;
  std::vector<Violation> violations;
  std::size_t checked = 0;  // number of basis tuples examined

  bool ok() const { return value.has_value(); }
};

class ZinbielAlgebra {
 public:
  const Field& field() const { return constants_.field; }
  std::size_t dim() const { return constants_.dim; }
  const Scalar& gamma(std::size_t i, std::size_t j, std::size_t k) const { return constants_.at(i, j, k); }
  const StructureConstants& constants() const { return constants_; }

  /// e_i . e_j as a coordinate vector.
  Vector basis_product(std::size_t i, std::size_t j) const;
  Vector product(std::span<const Scalar> x, std::span<const Scalar> y) const;

  /// The algebra with all products zero.
  static ZinbielAlgebra abelian(const Field& field, std::size_t dim);

  friend Validated<ZinbielAlgebra> validate_zinbiel(const StructureConstants& candidate);
  friend bool operator==(const ZinbielAlgebra&, const ZinbielAlgebra&) = default;

 private:
  explicit ZinbielAlgebra(StructureConstants c) : constants_(std::move(c)) {}
  StructureConstants constants_;
};

/// Checks (e_i e_j) e_k = e_i (e_j e_k) + e_i (e_k e_j) on every basis triple.
/// Throws std::invalid_argument when gamma does not have dim^3 entries or
/// mixes fields.
Validated<ZinbielAlgebra> validate_zinbiel(const StructureConstants& candidate);

/// An R-bimodule A of dimension m: left(i, a, b) is the coefficient of a_b in
/// e_i . a_a and right(a, i, b) that of a_b in a_a . e_i.
class Bimodule {
 public:
  const ZinbielAlgebra& base() const { return base_; }
  const Field& field() const { return base_.field(); }
  std::size_t dim() const { return dim_; }

  const Scalar& left(std::size_t i, std::size_t a, std::size_t b) const { return left_[(i * dim_ + a) * dim_ + b]; }
  const Scalar& right(std::size_t a, std::size_t i, std::size_t b) const {
    return right_[(a * base_.dim() + i) * dim_ + b];
  }

  /// r . a and a . r for coordinate vectors r in R, a in A.
  Vector act_left(std::span<const Scalar> r, std::span<const Scalar> a) const;
  Vector act_right(std::span<const Scalar> a, std::span<const Scalar> r) const;

  /// R acting on itself by its product.
  static Bimodule regular(const ZinbielAlgebra& algebra);

  friend Validated<Bimodule> validate_bimodule(const ZinbielAlgebra& base, std::size_t dim, std::vector<Scalar> left,
                                               std::vector<Scalar> right);

 private:
  Bimodule(ZinbielAlgebra base, std::size_t dim, std::vector<Scalar> left, std::vector<Scalar> right)
      : base_(std::move(base)), dim_(dim), left_(std::move(left)), right_(std::move(right)) {}

  ZinbielAlgebra base_;
  std::size_t dim_;
  std::vector<Scalar> left_;   // d * m * m
  std::vector<Scalar> right_;  // m * d * m
};

/// Checks the Zinbiel identity with exactly one argument in A, in each of the
/// three positions. Violation indices are (slot, i, j, k) where slot in
/// {0,1,2} names the position holding the module element.
Validated<Bimodule> validate_bimodule(const ZinbielAlgebra& base, std::size_t dim, std::vector<Scalar> left,
                                      std::vector<Scalar> right);

/// A product-preserving linear map; matrix(b, i) is the coefficient of e_b in
/// f(e_i).
class AlgebraMorphism {
 public:
  const ZinbielAlgebra& source() const { return source_; }
  const ZinbielAlgebra& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }
  const Field& field() const { return source_.field(); }

  Vector apply(std::span<const Scalar> x) const { return matrix_.apply(x); }

  static AlgebraMorphism identity(const ZinbielAlgebra& algebra);
  static AlgebraMorphism zero(const ZinbielAlgebra& source, const ZinbielAlgebra& target);

  friend Validated<AlgebraMorphism> validate_morphism(const ZinbielAlgebra& source, const ZinbielAlgebra& target,
                                                      const Matrix& f);

 private:
  AlgebraMorphism(ZinbielAlgebra s, ZinbielAlgebra t, Matrix m)
      : source_(std::move(s)), target_(std::move(t)), matrix_(std::move(m)) {}

  ZinbielAlgebra source_;
  ZinbielAlgebra target_;
  Matrix matrix_;
};

/// Checks f(e_i e_j) = f(e_i) f(e_j) on all basis pairs. Throws
/// std::domain_error on a field mismatch and std::invalid_argument on a
/// wrongly shaped matrix.
Validated<AlgebraMorphism> validate_morphism(const ZinbielAlgebra& source, const ZinbielAlgebra& target,
                                             const Matrix& f);

/// The target of g viewed as a bimodule over its source: r . s = g(r) s and
/// s . r = s g(r).
Bimodule bimodule_via_morphism(const AlgebraMorphism& g);

}  // namespace zinb

// Multilinear cochains R^{(x)n} -> A stored as dense coefficient tensors.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zinbiel/algebra.hpp"
#include "zinbiel/matrix.hpp"

namespace zinb {

/// An n-linear map from a d-dimensional space to an m-dimensional one.
/// Coefficients are flattened row-major over (i_1, ..., i_n, b) with the
/// output index b fastest. Arity 0 denotes the zero space C^0 = 0 and holds
/// no coefficients.
class Cochain {
 public:
  static Cochain zero(const Field& field, std::size_t arity, std::size_t domain_dim, std::size_t codomain_dim);

  /// Throws std::invalid_argument when coeffs has the wrong length.
  static Cochain from_flat(const Field& field, std::size_t arity, std::size_t domain_dim, std::size_t codomain_dim,
                           Vector coeffs);

  /// Number of coefficients of an arity-n cochain, d^n * m (0 when n = 0).
  static std::size_t space_dim(std::size_t arity, std::size_t domain_dim, std::size_t codomain_dim);

  const Field& field() const { return field_; }
  std::size_t arity() const { return arity_; }
  std::size_t domain_dim() const { return domain_dim_; }
  std::size_t codomain_dim() const { return codomain_dim_; }
  std::size_t size() const { return coeffs_.size(); }
  std::size_t tuple_count() const;
  const Vector& flat() const { return coeffs_; }

  std::size_t tuple_index(std::span<const std::size_t> inputs) const;
  std::vector<std::size_t> tuple(std::size_t index) const;

  Scalar& at(std::span<const std::size_t> inputs, std::size_t b) {
    return coeffs_[tuple_index(inputs) * codomain_dim_ + b];
  }
  const Scalar& at(std::span<const std::size_t> inputs, std::size_t b) const {
    return coeffs_[tuple_index(inputs) * codomain_dim_ + b];
  }

  /// Output on the basis tuple with the given flat index.
  std::span<const Scalar> value(std::size_t tuple_index) const {
    return std::span<const Scalar>(coeffs_).subspan(tuple_index * codomain_dim_, codomain_dim_);
  }
  void set_value(std::size_t tuple_index, std::span<const Scalar> v);
  void add_to_value(std::size_t tuple_index, std::span<const Scalar> v, const Scalar& scale);

  /// Multilinear evaluation on coordinate vectors.
  Vector evaluate(std::span<const Vector> args) const;

  bool is_zero() const { return zinb::is_zero(coeffs_); }

  Cochain& operator+=(const Cochain& rhs);
  Cochain& operator-=(const Cochain& rhs);
  Cochain& operator*=(const Scalar& s);
  friend Cochain operator+(Cochain lhs, const Cochain& rhs) { return lhs += rhs; }
  friend Cochain operator-(Cochain lhs, const Cochain& rhs) { return lhs -= rhs; }
  friend Cochain operator*(const Scalar& s, Cochain c) { return c *= s; }
  Cochain operator-() const;

  friend bool operator==(const Cochain&, const Cochain&) = default;

 private:
  Cochain(const Field& field, std::size_t arity, std::size_t domain_dim, std::size_t codomain_dim, Vector coeffs)
      : field_(field), arity_(arity), domain_dim_(domain_dim), codomain_dim_(codomain_dim), coeffs_(std::move(coeffs)) {}

  void require_compatible(const Cochain& rhs) const;

  Field field_;
  std::size_t arity_;
  std::size_t domain_dim_;
  std::size_t codomain_dim_;
  Vector coeffs_;
};

/// Id_R as a 1-cochain.
Cochain identity_cochain(const ZinbielAlgebra& algebra);
/// m_R as a 2-cochain.
Cochain product_cochain(const ZinbielAlgebra& algebra);
/// A linear map given by an (m x d) matrix as a 1-cochain.
Cochain linear_map_cochain(const Matrix& map);
Matrix to_matrix(const Cochain& one_cochain);

/// u o v for 1-cochains.
Cochain compose(const Cochain& u, const Cochain& v);
/// u o a: a 1-cochain applied to the output of a cochain.
Cochain post_compose(const Cochain& u, const Cochain& a);
/// a(u_1 x_1, ..., u_n x_n): one 1-cochain per argument slot.
Cochain pre_compose(const Cochain& a, std::span<const Cochain> maps);

/// a(b(x, y), z).
Cochain compose_left(const Cochain& a, const Cochain& b);
/// a(x, b(y, z) + b(z, y)).
Cochain compose_right_symmetric(const Cochain& a, const Cochain& b);

/// An element (xi; pi; phi) of C^n(R,R) x C^n(S,S) x C^{n-1}(R,S).
struct TripleCochain {
  std::size_t degree;
  Cochain xi;
  Cochain pi;
  Cochain phi;

  static TripleCochain zero(const Field& field, std::size_t degree, std::size_t source_dim, std::size_t target_dim);

  bool is_zero() const { return xi.is_zero() && pi.is_zero() && phi.is_zero(); }
  std::size_t size() const { return xi.size() + pi.size() + phi.size(); }

  /// Concatenation xi | pi | phi.
  Vector flat() const;
  static TripleCochain from_flat(const Field& field, std::size_t degree, std::size_t source_dim,
                                 std::size_t target_dim, std::span<const Scalar> coeffs);

  TripleCochain& operator+=(const TripleCochain& rhs);
  TripleCochain& operator-=(const TripleCochain& rhs);
  TripleCochain& operator*=(const Scalar& s);
  friend TripleCochain operator+(TripleCochain lhs, const TripleCochain& rhs) { return lhs += rhs; }
  friend TripleCochain operator-(TripleCochain lhs, const TripleCochain& rhs) { return lhs -= rhs; }
  friend TripleCochain operator*(const Scalar& s, TripleCochain t) { return t *= s; }

  friend bool operator==(const TripleCochain&, const TripleCochain&) = default;
};

std::size_t triple_space_dim(std::size_t degree, std::size_t source_dim, std::size_t target_dim);

}  // namespace zinb

// Dense exact linear algebra over a Field.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "zinbiel/field.hpp"

namespace zinb {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& field, std::size_t n);
bool is_zero(std::span<const Scalar> v);

class Matrix {
 public:
  static Matrix zero(const Field& field, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const {
    return std::span<const Scalar>(data_).subspan(r * cols_, cols_);
  }

  bool is_zero() const;

  /// Throws std::invalid_argument on a length mismatch.
  Vector apply(std::span<const Scalar> v) const;

  Matrix transpose() const;

  /// Copies `block` into this matrix with its top-left corner at (row, col).
  void set_block(std::size_t row, std::size_t col, const Matrix& block);

  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend bool operator==(const Matrix& lhs, const Matrix& rhs) = default;

 private:
  Matrix(const Field& field, std::size_t rows, std::size_t cols);

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct RankNullspace {
  std::size_t rank;
  std::vector<Vector> nullspace;  // basis of {x : Mx = 0}
};

/// Exact rank and right-nullspace basis. Pivots are chosen as the first
/// nonzero entry scanning columns left to right, so results are reproducible.
RankNullspace rank_nullspace(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Some x with Mx = b, or nullopt when the system is inconsistent. Free
/// variables are set to zero. Throws std::invalid_argument when b.size() !=
/// m.rows().
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b);

}  // namespace zinb

#include "zinbiel/matrix.hpp"

#include <stdexcept>
#include <string>

namespace zinb {

Vector zero_vector(const Field& field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

bool is_zero(std::span<const Scalar> v) {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::zero(const Field& field, std::size_t rows, std::size_t cols) { return Matrix(field, rows, cols); }

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

bool Matrix::is_zero() const { return zinb::is_zero(data_); }

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) {
    throw std::invalid_argument("matrix has " + std::to_string(cols_) + " columns but vector has length " +
                                std::to_string(v.size()));
  }
  Vector out = zero_vector(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void Matrix::set_block(std::size_t row, std::size_t col, const Matrix& block) {
  if (row + block.rows_ > rows_ || col + block.cols_ > cols_) {
    throw std::invalid_argument("block does not fit inside matrix");
  }
  for (std::size_t r = 0; r < block.rows_; ++r)
    for (std::size_t c = 0; c < block.cols_; ++c) (*this)(row + r, col + c) = block(r, c);
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols_ != rhs.rows_) {
    throw std::invalid_argument("matrix product shape mismatch");
  }
  if (!(lhs.field_ == rhs.field_)) throw std::domain_error("matrix product across fields");
  Matrix out(lhs.field_, lhs.rows_, rhs.cols_);
  for (std::size_t r = 0; r < lhs.rows_; ++r) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Scalar& a = lhs(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        const Scalar& b = rhs(k, c);
        if (!b.is_zero()) out(r, c) += a * b;
      }
    }
  }
  return out;
}

namespace {

// Row-reduced echelon form of [A | extra], pivoting only inside A's columns.
struct Echelon {
  std::vector<std::vector<Scalar>> rows;
  std::vector<std::size_t> pivot_cols;
};

Echelon reduce(const Matrix& m, std::span<const Scalar> extra) {
  const std::size_t width = m.cols() + (extra.empty() ? 0 : 1);
  Echelon e;
  e.rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<Scalar> row(m.row(r).begin(), m.row(r).end());
    if (!extra.empty()) row.push_back(extra[r]);
    e.rows.push_back(std::move(row));
  }

  std::size_t next = 0;
  std::vector<std::size_t> support;
  for (std::size_t col = 0; col < m.cols() && next < e.rows.size(); ++col) {
    std::size_t pivot = next;
    while (pivot < e.rows.size() && e.rows[pivot][col].is_zero()) ++pivot;
    if (pivot == e.rows.size()) continue;
    std::swap(e.rows[pivot], e.rows[next]);

    auto& prow = e.rows[next];
    const Scalar inv = prow[col].inverse();
    support.clear();
    for (std::size_t c = col; c < width; ++c) {
      if (!prow[c].is_zero()) {
        prow[c] *= inv;
        support.push_back(c);
      }
    }
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      if (r == next || e.rows[r][col].is_zero()) continue;
      const Scalar factor = e.rows[r][col];
      for (std::size_t c : support) e.rows[r][c] -= factor * prow[c];
    }
    e.pivot_cols.push_back(col);
    ++next;
  }
  return e;
}

}  // namespace

RankNullspace rank_nullspace(const Matrix& m) {
  const Echelon e = reduce(m, {});
  RankNullspace out{e.pivot_cols.size(), {}};

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[free] = Scalar::one(m.field());
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -e.rows[i][free];
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const Matrix& m) { return reduce(m, {}).pivot_cols.size(); }

std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) {
    throw std::invalid_argument("right-hand side has length " + std::to_string(b.size()) + " but matrix has " +
                                std::to_string(m.rows()) + " rows");
  }
  Vector x = zero_vector(m.field(), m.cols());
  if (m.rows() == 0) return x;

  const Echelon e = reduce(m, b);
  const std::size_t rhs = m.cols();
  for (std::size_t r = e.pivot_cols.size(); r < e.rows.size(); ++r) {
    if (!e.rows[r][rhs].is_zero()) return std::nullopt;
  }
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) x[e.pivot_cols[i]] = e.rows[i][rhs];
  return x;
}

}  // namespace zinb

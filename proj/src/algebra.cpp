#include "zinbiel/algebra.hpp"

#include <stdexcept>
#include <string>

namespace zinb {

namespace {

void require_field(const std::vector<Scalar>& values, const Field& field, const char* what) {
  for (const auto& v : values) {
    if (!(v.field() == field)) throw std::invalid_argument(std::string(what) + " mixes fields");
  }
}

Vector basis_vector(const Field& field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v[i] = Scalar::one(field);
  return v;
}

}  // namespace

StructureConstants StructureConstants::zero(const Field& field, std::size_t dim) {
  return {field, dim, std::vector<Scalar>(dim * dim * dim, Scalar::zero(field))};
}

Vector ZinbielAlgebra::basis_product(std::size_t i, std::size_t j) const {
  const std::size_t d = dim();
  Vector out;
  out.reserve(d);
  for (std::size_t k = 0; k < d; ++k) out.push_back(gamma(i, j, k));
  return out;
}

Vector ZinbielAlgebra::product(std::span<const Scalar> x, std::span<const Scalar> y) const {
  const std::size_t d = dim();
  Vector out = zero_vector(field(), d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < d; ++k) {
        if (!gamma(i, j, k).is_zero()) out[k] += xy * gamma(i, j, k);
      }
    }
  }
  return out;
}

ZinbielAlgebra ZinbielAlgebra::abelian(const Field& field, std::size_t dim) {
  return ZinbielAlgebra(StructureConstants::zero(field, dim));
}

Validated<ZinbielAlgebra> validate_zinbiel(const StructureConstants& candidate) {
  const std::size_t d = candidate.dim;
  if (candidate.gamma.size() != d * d * d) {
    throw std::invalid_argument("structure constants of a " + std::to_string(d) + "-dimensional algebra need " +
                                std::to_string(d * d * d) + " entries, got " + std::to_string(candidate.gamma.size()));
  }
  require_field(candidate.gamma, candidate.field, "structure constants");

  const ZinbielAlgebra trial(candidate);
  Validated<ZinbielAlgebra> result;
  for (std::size_t i = 0; i < d; ++i) {
    const Vector ei = basis_vector(candidate.field, d, i);
    for (std::size_t j = 0; j < d; ++j) {
      const Vector ej = basis_vector(candidate.field, d, j);
      const Vector ij = trial.basis_product(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        const Vector ek = basis_vector(candidate.field, d, k);
        Vector residual = trial.product(ij, ek);
        const Vector jk = trial.basis_product(j, k);
        const Vector kj = trial.basis_product(k, j);
        const Vector a = trial.product(ei, jk);
        const Vector b = trial.product(ei, kj);
        for (std::size_t c = 0; c < d; ++c) residual[c] -= a[c] + b[c];
        ++result.checked;
        if (!is_zero(residual)) result.violations.push_back({{i, j, k}, std::move(residual)});
      }
    }
  }
  if (result.violations.empty()) result.value = trial;
  return result;
}

Vector Bimodule::act_left(std::span<const Scalar> r, std::span<const Scalar> a) const {
  Vector out = zero_vector(field(), dim_);
  for (std::size_t i = 0; i < base_.dim(); ++i) {
    if (r[i].is_zero()) continue;
    for (std::size_t x = 0; x < dim_; ++x) {
      if (a[x].is_zero()) continue;
      const Scalar ra = r[i] * a[x];
      for (std::size_t b = 0; b < dim_; ++b) {
        if (!left(i, x, b).is_zero()) out[b] += ra * left(i, x, b);
      }
    }
  }
  return out;
}

Vector Bimodule::act_right(std::span<const Scalar> a, std::span<const Scalar> r) const {
  Vector out = zero_vector(field(), dim_);
  for (std::size_t x = 0; x < dim_; ++x) {
    if (a[x].is_zero()) continue;
    for (std::size_t i = 0; i < base_.dim(); ++i) {
      if (r[i].is_zero()) continue;
      const Scalar ar = a[x] * r[i];
      for (std::size_t b = 0; b < dim_; ++b) {
        if (!right(x, i, b).is_zero()) out[b] += ar * right(x, i, b);
      }
    }
  }
  return out;
}

Bimodule Bimodule::regular(const ZinbielAlgebra& algebra) {
  // Both actions are the product itself, so the constants coincide with gamma.
  return Bimodule(algebra, algebra.dim(), algebra.constants().gamma, algebra.constants().gamma);
}

Validated<Bimodule> validate_bimodule(const ZinbielAlgebra& base, std::size_t dim, std::vector<Scalar> left,
                                      std::vector<Scalar> right) {
  const std::size_t d = base.dim();
  const std::size_t m = dim;
  if (left.size() != d * m * m || right.size() != m * d * m) {
    throw std::invalid_argument("bimodule action tensors have the wrong shape");
  }
  require_field(left, base.field(), "left action");
  require_field(right, base.field(), "right action");

  const Field& field = base.field();
  const Bimodule trial(base, dim, std::move(left), std::move(right));
  Validated<Bimodule> result;

  auto check = [&](std::size_t slot, std::size_t i, std::size_t j, std::size_t k, Vector residual) {
    ++result.checked;
    if (!is_zero(residual)) result.violations.push_back({{slot, i, j, k}, std::move(residual)});
  };
  auto sub = [](Vector lhs, const Vector& a, const Vector& b) {
    for (std::size_t c = 0; c < lhs.size(); ++c) lhs[c] -= a[c] + b[c];
    return lhs;
  };

  // (a y) z = a (y z) + a (z y)
  for (std::size_t a = 0; a < m; ++a) {
    const Vector ea = basis_vector(field, m, a);
    for (std::size_t y = 0; y < d; ++y) {
      const Vector ey = basis_vector(field, d, y);
      for (std::size_t z = 0; z < d; ++z) {
        const Vector ez = basis_vector(field, d, z);
        check(0, a, y, z,
              sub(trial.act_right(trial.act_right(ea, ey), ez), trial.act_right(ea, base.basis_product(y, z)),
                  trial.act_right(ea, base.basis_product(z, y))));
      }
    }
  }
  // (x a) z = x (a z) + x (z a)
  for (std::size_t x = 0; x < d; ++x) {
    const Vector ex = basis_vector(field, d, x);
    for (std::size_t a = 0; a < m; ++a) {
      const Vector ea = basis_vector(field, m, a);
      for (std::size_t z = 0; z < d; ++z) {
        const Vector ez = basis_vector(field, d, z);
        check(1, x, a, z,
              sub(trial.act_right(trial.act_left(ex, ea), ez), trial.act_left(ex, trial.act_right(ea, ez)),
                  trial.act_left(ex, trial.act_left(ez, ea))));
      }
    }
  }
  // (x y) a = x (y a) + x (a y)
  for (std::size_t x = 0; x < d; ++x) {
    const Vector ex = basis_vector(field, d, x);
    for (std::size_t y = 0; y < d; ++y) {
      const Vector ey = basis_vector(field, d, y);
      for (std::size_t a = 0; a < m; ++a) {
        const Vector ea = basis_vector(field, m, a);
        check(2, x, y, a,
              sub(trial.act_left(base.basis_product(x, y), ea), trial.act_left(ex, trial.act_left(ey, ea)),
                  trial.act_left(ex, trial.act_right(ea, ey))));
      }
    }
  }
  if (result.violations.empty()) result.value = trial;
  return result;
}

AlgebraMorphism AlgebraMorphism::identity(const ZinbielAlgebra& algebra) {
  return AlgebraMorphism(algebra, algebra, Matrix::identity(algebra.field(), algebra.dim()));
}

AlgebraMorphism AlgebraMorphism::zero(const ZinbielAlgebra& source, const ZinbielAlgebra& target) {
  if (!(source.field() == target.field())) throw std::domain_error("morphism between algebras over different fields");
  return AlgebraMorphism(source, target, Matrix::zero(source.field(), target.dim(), source.dim()));
}

Validated<AlgebraMorphism> validate_morphism(const ZinbielAlgebra& source, const ZinbielAlgebra& target,
                                             const Matrix& f) {
  if (!(source.field() == target.field())) throw std::domain_error("morphism between algebras over different fields");
  if (!(f.field() == source.field())) throw std::domain_error("morphism matrix is over a different field");
  if (f.rows() != target.dim() || f.cols() != source.dim()) {
    throw std::invalid_argument("morphism matrix must be " + std::to_string(target.dim()) + "x" +
                                std::to_string(source.dim()));
  }
  const Field& field = source.field();
  Validated<AlgebraMorphism> result;
  for (std::size_t i = 0; i < source.dim(); ++i) {
    const Vector fi = f.apply(basis_vector(field, source.dim(), i));
    for (std::size_t j = 0; j < source.dim(); ++j) {
      const Vector fj = f.apply(basis_vector(field, source.dim(), j));
      Vector residual = f.apply(source.basis_product(i, j));
      const Vector rhs = target.product(fi, fj);
      for (std::size_t c = 0; c < residual.size(); ++c) residual[c] -= rhs[c];
      ++result.checked;
      if (!is_zero(residual)) result.violations.push_back({{i, j}, std::move(residual)});
    }
  }
  if (result.violations.empty()) result.value = AlgebraMorphism(source, target, f);
  return result;
}

Bimodule bimodule_via_morphism(const AlgebraMorphism& g) {
  const ZinbielAlgebra& r = g.source();
  const ZinbielAlgebra& s = g.target();
  const std::size_t d = r.dim();
  const std::size_t m = s.dim();
  const Field& field = r.field();

  std::vector<Scalar> left(d * m * m, Scalar::zero(field));
  std::vector<Scalar> right(m * d * m, Scalar::zero(field));
  for (std::size_t i = 0; i < d; ++i) {
    const Vector gi = g.apply(basis_vector(field, d, i));
    for (std::size_t a = 0; a < m; ++a) {
      const Vector ea = basis_vector(field, m, a);
      const Vector l = s.product(gi, ea);
      const Vector rr = s.product(ea, gi);
      for (std::size_t b = 0; b < m; ++b) {
        left[(i * m + a) * m + b] = l[b];
        right[(a * d + i) * m + b] = rr[b];
      }
    }
  }
  auto validated = validate_bimodule(r, m, std::move(left), std::move(right));
  if (!validated.ok()) throw std::logic_error("bimodule induced by a morphism violates the mixed identities");
  return std::move(*validated.value);
}

}  // namespace zinb

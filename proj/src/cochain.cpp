#include "zinbiel/cochain.hpp"

#include <stdexcept>
#include <string>

namespace zinb {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

Vector unit(const Field& field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v[i] = Scalar::one(field);
  return v;
}

}  // namespace

std::size_t Cochain::space_dim(std::size_t arity, std::size_t domain_dim, std::size_t codomain_dim) {
  return arity == 0 ? 0 : ipow(domain_dim, arity) * codomain_dim;
}

Cochain Cochain::zero(const Field& field, std::size_t arity, std::size_t domain_dim, std::size_t codomain_dim) {
  return Cochain(field, arity, domain_dim, codomain_dim,
                 zero_vector(field, space_dim(arity, domain_dim, codomain_dim)));
}

Cochain Cochain::from_flat(const Field& field, std::size_t arity, std::size_t domain_dim, std::size_t codomain_dim,
                           Vector coeffs) {
  const std::size_t expected = space_dim(arity, domain_dim, codomain_dim);
  if (coeffs.size() != expected) {
    throw std::invalid_argument("arity-" + std::to_string(arity) + " cochain needs " + std::to_string(expected) +
                                " coefficients, got " + std::to_string(coeffs.size()));
  }
  for (const auto& c : coeffs) {
    if (!(c.field() == field)) throw std::invalid_argument("cochain coefficients mix fields");
  }
  return Cochain(field, arity, domain_dim, codomain_dim, std::move(coeffs));
}

std::size_t Cochain::tuple_count() const { return arity_ == 0 ? 0 : ipow(domain_dim_, arity_); }

std::size_t Cochain::tuple_index(std::span<const std::size_t> inputs) const {
  if (inputs.size() != arity_) throw std::invalid_argument("wrong number of cochain arguments");
  std::size_t idx = 0;
  for (auto i : inputs) {
    if (i >= domain_dim_) throw std::out_of_range("cochain argument index out of range");
    idx = idx * domain_dim_ + i;
  }
  return idx;
}

std::vector<std::size_t> Cochain::tuple(std::size_t index) const {
  std::vector<std::size_t> t(arity_);
  for (std::size_t k = arity_; k-- > 0;) {
    t[k] = index % domain_dim_;
    index /= domain_dim_;
  }
  return t;
}

void Cochain::set_value(std::size_t tuple_index, std::span<const Scalar> v) {
  for (std::size_t b = 0; b < codomain_dim_; ++b) coeffs_[tuple_index * codomain_dim_ + b] = v[b];
}

void Cochain::add_to_value(std::size_t tuple_index, std::span<const Scalar> v, const Scalar& scale) {
  for (std::size_t b = 0; b < codomain_dim_; ++b) {
    if (!v[b].is_zero()) coeffs_[tuple_index * codomain_dim_ + b] += scale * v[b];
  }
}

Vector Cochain::evaluate(std::span<const Vector> args) const {
  if (args.size() != arity_) throw std::invalid_argument("wrong number of cochain arguments");
  Vector out = zero_vector(field_, codomain_dim_);
  if (arity_ == 0) return out;
  for (const auto& a : args) {
    if (a.size() != domain_dim_) throw std::invalid_argument("cochain argument has the wrong dimension");
  }
  const std::size_t n = tuple_count();
  std::vector<std::size_t> t(arity_, 0);
  for (std::size_t idx = 0; idx < n; ++idx) {
    Scalar c = Scalar::one(field_);
    bool nonzero = true;
    for (std::size_t k = 0; k < arity_ && nonzero; ++k) {
      const Scalar& x = args[k][t[k]];
      if (x.is_zero()) {
        nonzero = false;
      } else {
        c *= x;
      }
    }
    if (nonzero) {
      for (std::size_t b = 0; b < codomain_dim_; ++b) {
        const Scalar& v = coeffs_[idx * codomain_dim_ + b];
        if (!v.is_zero()) out[b] += c * v;
      }
    }
    for (std::size_t k = arity_; k-- > 0;) {
      if (++t[k] < domain_dim_) break;
      t[k] = 0;
    }
  }
  return out;
}

void Cochain::require_compatible(const Cochain& rhs) const {
  if (arity_ != rhs.arity_ || domain_dim_ != rhs.domain_dim_ || codomain_dim_ != rhs.codomain_dim_ ||
      !(field_ == rhs.field_)) {
    throw std::invalid_argument("cochains live in different spaces");
  }
}

Cochain& Cochain::operator+=(const Cochain& rhs) {
  require_compatible(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& rhs) {
  require_compatible(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Cochain& Cochain::operator*=(const Scalar& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Cochain Cochain::operator-() const {
  Cochain out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cochain identity_cochain(const ZinbielAlgebra& algebra) {
  return linear_map_cochain(Matrix::identity(algebra.field(), algebra.dim()));
}

Cochain product_cochain(const ZinbielAlgebra& algebra) {
  return Cochain::from_flat(algebra.field(), 2, algebra.dim(), algebra.dim(), algebra.constants().gamma);
}

Cochain linear_map_cochain(const Matrix& map) {
  Cochain c = Cochain::zero(map.field(), 1, map.cols(), map.rows());
  for (std::size_t i = 0; i < map.cols(); ++i) {
    for (std::size_t b = 0; b < map.rows(); ++b) c.at(std::array{i}, b) = map(b, i);
  }
  return c;
}

Matrix to_matrix(const Cochain& one_cochain) {
  if (one_cochain.arity() != 1) throw std::invalid_argument("only 1-cochains are linear maps");
  Matrix m = Matrix::zero(one_cochain.field(), one_cochain.codomain_dim(), one_cochain.domain_dim());
  for (std::size_t i = 0; i < one_cochain.domain_dim(); ++i) {
    for (std::size_t b = 0; b < one_cochain.codomain_dim(); ++b) m(b, i) = one_cochain.at(std::array{i}, b);
  }
  return m;
}

Cochain compose(const Cochain& u, const Cochain& v) {
  if (u.arity() != 1 || v.arity() != 1) throw std::invalid_argument("compose expects 1-cochains");
  return post_compose(u, v);
}

Cochain post_compose(const Cochain& u, const Cochain& a) {
  if (u.arity() != 1 || u.domain_dim() != a.codomain_dim()) {
    throw std::invalid_argument("post_compose: linear map does not match the cochain's codomain");
  }
  Cochain out = Cochain::zero(a.field(), a.arity(), a.domain_dim(), u.codomain_dim());
  for (std::size_t t = 0; t < a.tuple_count(); ++t) {
    const auto v = a.value(t);
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (!v[c].is_zero()) out.add_to_value(t, u.value(c), v[c]);
    }
  }
  return out;
}

Cochain pre_compose(const Cochain& a, std::span<const Cochain> maps) {
  if (maps.size() != a.arity() || maps.empty()) throw std::invalid_argument("pre_compose: one map per slot");
  const std::size_t d = maps[0].domain_dim();
  for (const auto& m : maps) {
    if (m.arity() != 1 || m.domain_dim() != d || m.codomain_dim() != a.domain_dim()) {
      throw std::invalid_argument("pre_compose: slot map has the wrong shape");
    }
  }
  Cochain out = Cochain::zero(a.field(), a.arity(), d, a.codomain_dim());
  std::vector<Vector> args(a.arity());
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    const auto idx = out.tuple(t);
    for (std::size_t k = 0; k < args.size(); ++k) {
      const auto v = maps[k].value(idx[k]);
      args[k].assign(v.begin(), v.end());
    }
    out.set_value(t, a.evaluate(args));
  }
  return out;
}

Cochain compose_left(const Cochain& a, const Cochain& b) {
  if (a.arity() != 2 || b.arity() != 2 || a.domain_dim() != b.codomain_dim()) {
    throw std::invalid_argument("compose_left expects composable 2-cochains");
  }
  const std::size_t d = b.domain_dim();
  const Field& field = a.field();
  Cochain out = Cochain::zero(field, 3, d, a.codomain_dim());
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      const auto bxy = b.value(x * d + y);
      const Vector inner(bxy.begin(), bxy.end());
      for (std::size_t z = 0; z < d; ++z) {
        const std::array<Vector, 2> args{inner, unit(field, d, z)};
        out.set_value((x * d + y) * d + z, a.evaluate(args));
      }
    }
  }
  return out;
}

Cochain compose_right_symmetric(const Cochain& a, const Cochain& b) {
  if (a.arity() != 2 || b.arity() != 2 || a.domain_dim() != b.codomain_dim()) {
    throw std::invalid_argument("compose_right_symmetric expects composable 2-cochains");
  }
  const std::size_t d = b.domain_dim();
  const Field& field = a.field();
  Cochain out = Cochain::zero(field, 3, d, a.codomain_dim());
  for (std::size_t y = 0; y < d; ++y) {
    for (std::size_t z = 0; z < d; ++z) {
      const auto byz = b.value(y * d + z);
      const auto bzy = b.value(z * d + y);
      Vector inner(byz.begin(), byz.end());
      for (std::size_t c = 0; c < inner.size(); ++c) inner[c] += bzy[c];
      for (std::size_t x = 0; x < d; ++x) {
        const std::array<Vector, 2> args{unit(field, d, x), inner};
        out.set_value((x * d + y) * d + z, a.evaluate(args));
      }
    }
  }
  return out;
}

TripleCochain TripleCochain::zero(const Field& field, std::size_t degree, std::size_t source_dim,
                                  std::size_t target_dim) {
  if (degree < 1 || degree > 4) throw std::invalid_argument("triple cochains exist in degrees 1..4");
  return {degree, Cochain::zero(field, degree, source_dim, source_dim),
          Cochain::zero(field, degree, target_dim, target_dim),
          Cochain::zero(field, degree - 1, source_dim, target_dim)};
}

Vector TripleCochain::flat() const {
  Vector out;
  out.reserve(size());
  out.insert(out.end(), xi.flat().begin(), xi.flat().end());
  out.insert(out.end(), pi.flat().begin(), pi.flat().end());
  out.insert(out.end(), phi.flat().begin(), phi.flat().end());
  return out;
}

TripleCochain TripleCochain::from_flat(const Field& field, std::size_t degree, std::size_t source_dim,
                                       std::size_t target_dim, std::span<const Scalar> coeffs) {
  if (coeffs.size() != triple_space_dim(degree, source_dim, target_dim)) {
    throw std::invalid_argument("flattened triple cochain has the wrong length");
  }
  const std::size_t nx = Cochain::space_dim(degree, source_dim, source_dim);
  const std::size_t np = Cochain::space_dim(degree, target_dim, target_dim);
  auto slice = [&](std::size_t from, std::size_t n) { return Vector(coeffs.begin() + from, coeffs.begin() + from + n); };
  return {degree, Cochain::from_flat(field, degree, source_dim, source_dim, slice(0, nx)),
          Cochain::from_flat(field, degree, target_dim, target_dim, slice(nx, np)),
          Cochain::from_flat(field, degree - 1, source_dim, target_dim, slice(nx + np, coeffs.size() - nx - np))};
}

std::size_t triple_space_dim(std::size_t degree, std::size_t source_dim, std::size_t target_dim) {
  return Cochain::space_dim(degree, source_dim, source_dim) + Cochain::space_dim(degree, target_dim, target_dim) +
         Cochain::space_dim(degree - 1, source_dim, target_dim);
}

TripleCochain& TripleCochain::operator+=(const TripleCochain& rhs) {
  xi += rhs.xi;
  pi += rhs.pi;
  phi += rhs.phi;
  return *this;
}

TripleCochain& TripleCochain::operator-=(const TripleCochain& rhs) {
  xi -= rhs.xi;
  pi -= rhs.pi;
  phi -= rhs.phi;
  return *this;
}

TripleCochain& TripleCochain::operator*=(const Scalar& s) {
  xi *= s;
  pi *= s;
  phi *= s;
  return *this;
}

}  // namespace zinb

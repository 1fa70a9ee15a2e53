#include "zinbiel/random_instances.hpp"

#include <algorithm>
#include <array>

namespace zinb {

namespace {

Matrix random_invertible(InstanceGenerator& gen, std::size_t n) {
  for (;;) {
    Matrix p = Matrix::zero(gen.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) p(r, c) = gen.sparse_scalar(0.5);
    if (rank(p) == n) return p;
  }
}

Matrix inverse(const Matrix& p) {
  const std::size_t n = p.rows();
  Matrix inv = Matrix::zero(p.field(), n, n);
  for (std::size_t k = 0; k < n; ++k) {
    Vector e = zero_vector(p.field(), n);
    e[k] = Scalar::one(p.field());
    const auto col = solve(p, e);
    for (std::size_t r = 0; r < n; ++r) inv(r, k) = (*col)[r];
  }
  return inv;
}

// Structure constants in the basis e'_i = sum_a P(a, i) e_a.
StructureConstants change_basis(const StructureConstants& g, const Matrix& p) {
  const std::size_t d = g.dim;
  const Matrix pinv = inverse(p);
  StructureConstants out = StructureConstants::zero(g.field, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vector prod = zero_vector(g.field, d);
      for (std::size_t a = 0; a < d; ++a) {
        if (p(a, i).is_zero()) continue;
        for (std::size_t b = 0; b < d; ++b) {
          if (p(b, j).is_zero()) continue;
          const Scalar w = p(a, i) * p(b, j);
          for (std::size_t c = 0; c < d; ++c) {
            if (!g.at(a, b, c).is_zero()) prod[c] += w * g.at(a, b, c);
          }
        }
      }
      const Vector coords = pinv.apply(prod);
      for (std::size_t k = 0; k < d; ++k) out.at(i, j, k) = coords[k];
    }
  return out;
}

}  // namespace

InstanceGenerator::InstanceGenerator(const Field& field, std::uint64_t seed) : field_(field), seed_(seed), rng_(seed) {}

Scalar InstanceGenerator::scalar() {
  if (!field_.is_rational()) {
    std::uniform_int_distribution<std::uint64_t> dist(0, field_.characteristic() - 1);
    return Scalar::from_int(field_, static_cast<std::int64_t>(dist(rng_)));
  }
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> kind(0, 9);
  if (kind(rng_) < 8) return Scalar::from_int(field_, num(rng_));
  std::uniform_int_distribution<int> den(2, 3);
  return Scalar::from_int(field_, num(rng_)) / Scalar::from_int(field_, den(rng_));
}

Scalar InstanceGenerator::sparse_scalar(double zero_probability) {
  std::bernoulli_distribution zero(zero_probability);
  if (zero(rng_)) return Scalar::zero(field_);
  return scalar();
}

Vector InstanceGenerator::vector(std::size_t n) {
  Vector v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(scalar());
  return v;
}

Cochain InstanceGenerator::cochain(std::size_t arity, std::size_t domain_dim, std::size_t codomain_dim) {
  return Cochain::from_flat(field_, arity, domain_dim, codomain_dim,
                            vector(Cochain::space_dim(arity, domain_dim, codomain_dim)));
}

TripleCochain InstanceGenerator::triple(const MorphismComplex& complex, std::size_t degree) {
  return complex.from_flat(degree, vector(complex.cochain_dim(degree)));
}

std::optional<ZinbielAlgebra> InstanceGenerator::algebra(std::size_t dim, std::size_t attempts) {
  // Nonzero products must raise the basis index, which forces nilpotency;
  // the validator decides the remaining quadratic constraints.
  std::array<std::int64_t, 5> small{1, -1, 2, 1, 3};
  std::uniform_int_distribution<std::size_t> pick(0, small.size() - 1);
  std::bernoulli_distribution present(0.5);
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    StructureConstants g = StructureConstants::zero(field_, dim);
    bool any = false;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = std::max(i, j) + 1; k < dim; ++k) {
          if (!present(rng_)) continue;
          g.at(i, j, k) = Scalar::from_int(field_, small[pick(rng_)]);
          any = any || !g.at(i, j, k).is_zero();
        }
    if (!any || !validate_zinbiel(g).ok()) continue;
    auto changed = validate_zinbiel(change_basis(g, random_invertible(*this, dim)));
    if (!changed.ok()) throw std::logic_error("change of basis broke the Zinbiel identity");
    return std::move(*changed.value);
  }
  return std::nullopt;
}

ZinbielAlgebra InstanceGenerator::algebra_or_abelian(std::size_t dim) {
  if (auto a = algebra(dim)) return std::move(*a);
  return ZinbielAlgebra::abelian(field_, dim);
}

std::optional<AlgebraMorphism> InstanceGenerator::morphism(const ZinbielAlgebra& source, const ZinbielAlgebra& target,
                                                           std::size_t attempts) {
  std::array<std::int64_t, 4> small{1, -1, 2, 1};
  std::uniform_int_distribution<std::size_t> pick(0, small.size() - 1);
  std::bernoulli_distribution present(0.5);
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    Matrix f = Matrix::zero(field_, target.dim(), source.dim());
    for (std::size_t r = 0; r < f.rows(); ++r)
      for (std::size_t c = 0; c < f.cols(); ++c) {
        if (present(rng_)) f(r, c) = Scalar::from_int(field_, small[pick(rng_)]);
      }
    if (f.is_zero()) continue;
    auto v = validate_morphism(source, target, f);
    if (v.ok()) return std::move(*v.value);
  }
  return std::nullopt;
}

TripleCochain InstanceGenerator::cocycle(const MorphismComplex& complex, std::size_t degree) {
  const auto kernel = rank_nullspace(complex.differential_matrix(degree)).nullspace;
  Vector v = zero_vector(field_, complex.cochain_dim(degree));
  for (const auto& b : kernel) {
    const Scalar c = scalar();
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
  }
  return complex.from_flat(degree, v);
}

FormalIsomorphism InstanceGenerator::isomorphism(const MorphismComplex& complex, std::size_t order) {
  std::vector<std::pair<Cochain, Cochain>> terms{FormalIsomorphism::identity(complex, 0).term(0)};
  for (std::size_t i = 1; i <= order; ++i) {
    terms.emplace_back(cochain(1, complex.source_dim(), complex.source_dim()),
                       cochain(1, complex.target_dim(), complex.target_dim()));
  }
  return FormalIsomorphism(complex, std::move(terms));
}

TruncatedDeformation InstanceGenerator::deformation(const MorphismComplex& complex, std::size_t order,
                                                    std::size_t attempts) {
  if (order == 0) return TruncatedDeformation::trivial(complex, 0);

  const auto kernel = rank_nullspace(complex.differential_matrix(2)).nullspace;
  auto random_cocycle = [&] {
    Vector v = zero_vector(field_, complex.cochain_dim(2));
    for (const auto& b : kernel) {
      const Scalar c = scalar();
      if (c.is_zero()) continue;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
    }
    return complex.from_flat(2, v);
  };

  std::optional<TruncatedDeformation> result;
  for (std::size_t attempt = 0; attempt < attempts && !result; ++attempt) {
    auto current = check_deformation(complex, {base_term(complex.morphism()), random_cocycle()});
    if (!current.ok()) throw std::logic_error("random 2-cocycle failed the order-1 conditions");
    TruncatedDeformation theta = std::move(*current.deformation);
    bool blocked = false;
    while (theta.order() < order) {
      auto step = extend_one_order(theta);
      if (!step.ok()) {
        blocked = true;
        break;
      }
      auto terms = step.extended->terms();
      terms.back() += random_cocycle();
      auto shifted = check_deformation(complex, std::move(terms));
      if (!shifted.ok()) throw std::logic_error("shifting an extension by a cocycle broke " + shifted.failure->label());
      theta = std::move(*shifted.deformation);
    }
    if (!blocked) result = std::move(theta);
  }

  std::bernoulli_distribution coin(0.5);
  if (!result) return conjugate(TruncatedDeformation::trivial(complex, order), isomorphism(complex, order));
  if (coin(rng_)) return conjugate(*result, isomorphism(complex, order));
  return std::move(*result);
}

}  // namespace zinb

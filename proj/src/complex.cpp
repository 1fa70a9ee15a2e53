#include "zinbiel/complex.hpp"

#include <array>
#include <mutex>
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

Vector add(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

void axpy(Vector& acc, const Scalar& s, const Vector& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (!v[i].is_zero()) acc[i] += s * v[i];
  }
}

void require_degree(std::size_t degree, const char* what) {
  if (degree < 1 || degree > 3) {
    throw std::invalid_argument(std::string(what) + ": differentials are defined in degrees 1..3, got " +
                                std::to_string(degree));
  }
}

}  // namespace

Cochain differential(const Bimodule& module, const Cochain& phi) {
  const std::size_t n = phi.arity();
  require_degree(n, "differential");
  const ZinbielAlgebra& r = module.base();
  const std::size_t d = r.dim();
  const std::size_t m = module.dim();
  if (phi.domain_dim() != d || phi.codomain_dim() != m) {
    throw std::invalid_argument("differential: cochain does not match the bimodule");
  }
  const Field& field = module.field();
  const Scalar one = Scalar::one(field);
  const Scalar minus_one = -one;

  std::vector<Vector> e;
  for (std::size_t i = 0; i < d; ++i) e.push_back(unit(field, d, i));
  // x.y and x.y + y.x on basis pairs
  std::vector<Vector> prod(d * d);
  std::vector<Vector> sym(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) prod[i * d + j] = r.basis_product(i, j);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) sym[i * d + j] = add(prod[i * d + j], prod[j * d + i]);

  auto ev = [&](std::initializer_list<Vector> args) { return phi.evaluate(std::vector<Vector>(args)); };

  Cochain out = Cochain::zero(field, n + 1, d, m);
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    const auto idx = out.tuple(t);
    Vector acc = zero_vector(field, m);
    if (n == 1) {
      const std::size_t x = idx[0], y = idx[1];
      axpy(acc, one, module.act_left(e[x], ev({e[y]})));
      axpy(acc, minus_one, ev({prod[x * d + y]}));
      axpy(acc, one, module.act_right(ev({e[x]}), e[y]));
    } else if (n == 2) {
      const std::size_t x = idx[0], y = idx[1], z = idx[2];
      axpy(acc, one, module.act_left(e[x], add(ev({e[y], e[z]}), ev({e[z], e[y]}))));
      axpy(acc, minus_one, ev({prod[x * d + y], e[z]}));
      axpy(acc, one, ev({e[x], sym[y * d + z]}));
      axpy(acc, minus_one, module.act_right(ev({e[x], e[y]}), e[z]));
    } else {
      const std::size_t x = idx[0], y = idx[1], z = idx[2], w = idx[3];
      Vector brace = ev({e[y], e[z], e[w]});
      axpy(brace, minus_one, ev({e[z], e[w], e[y]}));
      axpy(brace, one, ev({e[z], e[y], e[w]}));
      axpy(brace, minus_one, ev({e[w], e[z], e[y]}));
      axpy(acc, one, module.act_left(e[x], brace));
      axpy(acc, minus_one, ev({prod[x * d + y], e[z], e[w]}));
      axpy(acc, one, ev({e[x], sym[y * d + z], e[w]}));
      axpy(acc, minus_one, ev({e[x], e[y], sym[z * d + w]}));
      axpy(acc, one, module.act_right(ev({e[x], e[y], e[z]}), e[w]));
    }
    out.set_value(t, acc);
  }
  return out;
}

Matrix differential_matrix(const Bimodule& module, std::size_t degree) {
  require_degree(degree, "differential_matrix");
  const ZinbielAlgebra& r = module.base();
  const std::size_t d = r.dim();
  const std::size_t m = module.dim();
  const Field& field = module.field();
  Matrix mat = Matrix::zero(field, ipow(d, degree + 1) * m, ipow(d, degree) * m);

  auto row = [&](std::initializer_list<std::size_t> t, std::size_t b) {
    std::size_t idx = 0;
    for (auto i : t) idx = idx * d + i;
    return idx * m + b;
  };
  auto col = row;
  auto sym = [&](std::size_t y, std::size_t z, std::size_t k) { return r.gamma(y, z, k) + r.gamma(z, y, k); };

  for (std::size_t b = 0; b < m; ++b) {
    if (degree == 1) {
      for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
          const auto rw = row({x, y}, b);
          for (std::size_t c = 0; c < m; ++c) {
            mat(rw, col({y}, c)) += module.left(x, c, b);
            mat(rw, col({x}, c)) += module.right(c, y, b);
          }
          for (std::size_t k = 0; k < d; ++k) mat(rw, col({k}, b)) -= r.gamma(x, y, k);
        }
    } else if (degree == 2) {
      for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
          for (std::size_t z = 0; z < d; ++z) {
            const auto rw = row({x, y, z}, b);
            for (std::size_t c = 0; c < m; ++c) {
              mat(rw, col({y, z}, c)) += module.left(x, c, b);
              mat(rw, col({z, y}, c)) += module.left(x, c, b);
              mat(rw, col({x, y}, c)) -= module.right(c, z, b);
            }
            for (std::size_t k = 0; k < d; ++k) {
              mat(rw, col({k, z}, b)) -= r.gamma(x, y, k);
              mat(rw, col({x, k}, b)) += sym(y, z, k);
            }
          }
    } else {
      for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
          for (std::size_t z = 0; z < d; ++z)
            for (std::size_t w = 0; w < d; ++w) {
              const auto rw = row({x, y, z, w}, b);
              for (std::size_t c = 0; c < m; ++c) {
                const Scalar& l = module.left(x, c, b);
                mat(rw, col({y, z, w}, c)) += l;
                mat(rw, col({z, w, y}, c)) -= l;
                mat(rw, col({z, y, w}, c)) += l;
                mat(rw, col({w, z, y}, c)) -= l;
                mat(rw, col({x, y, z}, c)) += module.right(c, w, b);
              }
              for (std::size_t k = 0; k < d; ++k) {
                mat(rw, col({k, z, w}, b)) -= r.gamma(x, y, k);
                mat(rw, col({x, k, w}, b)) += sym(y, z, k);
                mat(rw, col({x, y, k}, b)) -= sym(z, w, k);
              }
            }
    }
  }
  return mat;
}

Cochain push_forward_left(const AlgebraMorphism& f, const Cochain& xi) {
  if (xi.domain_dim() != f.source().dim() || xi.codomain_dim() != f.source().dim()) {
    throw std::invalid_argument("push_forward_left: cochain is not in C(R,R)");
  }
  Cochain out = Cochain::zero(f.field(), xi.arity(), f.source().dim(), f.target().dim());
  for (std::size_t t = 0; t < xi.tuple_count(); ++t) {
    const auto v = xi.value(t);
    out.set_value(t, f.apply(v));
  }
  return out;
}

Cochain push_forward_right(const AlgebraMorphism& f, const Cochain& pi) {
  if (pi.domain_dim() != f.target().dim() || pi.codomain_dim() != f.target().dim()) {
    throw std::invalid_argument("push_forward_right: cochain is not in C(S,S)");
  }
  const std::size_t d = f.source().dim();
  Cochain out = Cochain::zero(f.field(), pi.arity(), d, f.target().dim());
  std::vector<Vector> images;
  for (std::size_t i = 0; i < d; ++i) images.push_back(f.apply(unit(f.field(), d, i)));
  std::vector<Vector> args(pi.arity());
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    const auto idx = out.tuple(t);
    for (std::size_t k = 0; k < idx.size(); ++k) args[k] = images[idx[k]];
    out.set_value(t, pi.evaluate(args));
  }
  return out;
}

Matrix push_forward_left_matrix(const AlgebraMorphism& f, std::size_t arity) {
  const std::size_t d = f.source().dim();
  const std::size_t s = f.target().dim();
  const std::size_t tuples = arity == 0 ? 0 : ipow(d, arity);
  Matrix mat = Matrix::zero(f.field(), tuples * s, tuples * d);
  for (std::size_t t = 0; t < tuples; ++t)
    for (std::size_t b = 0; b < s; ++b)
      for (std::size_t c = 0; c < d; ++c) mat(t * s + b, t * d + c) = f.matrix()(b, c);
  return mat;
}

Matrix push_forward_right_matrix(const AlgebraMorphism& f, std::size_t arity) {
  const std::size_t d = f.source().dim();
  const std::size_t s = f.target().dim();
  const std::size_t src_tuples = arity == 0 ? 0 : ipow(d, arity);
  const std::size_t tgt_tuples = arity == 0 ? 0 : ipow(s, arity);
  const Field& field = f.field();
  Matrix mat = Matrix::zero(field, src_tuples * s, tgt_tuples * s);
  std::vector<std::size_t> x(arity), y(arity);
  for (std::size_t tx = 0; tx < src_tuples; ++tx) {
    for (std::size_t k = 0, rest = tx; k < arity; ++k) {
      x[arity - 1 - k] = rest % d;
      rest /= d;
    }
    for (std::size_t ty = 0; ty < tgt_tuples; ++ty) {
      for (std::size_t k = 0, rest = ty; k < arity; ++k) {
        y[arity - 1 - k] = rest % s;
        rest /= s;
      }
      Scalar coeff = Scalar::one(field);
      for (std::size_t k = 0; k < arity && !coeff.is_zero(); ++k) coeff *= f.matrix()(y[k], x[k]);
      if (coeff.is_zero()) continue;
      for (std::size_t b = 0; b < s; ++b) mat(tx * s + b, ty * s + b) = coeff;
    }
  }
  return mat;
}

struct MorphismComplex::Cache {
  std::array<std::once_flag, 3> once;
  std::array<std::optional<Matrix>, 3> matrices;
};

MorphismComplex::MorphismComplex(AlgebraMorphism f)
    : f_(std::move(f)),
      source_module_(Bimodule::regular(f_.source())),
      target_module_(Bimodule::regular(f_.target())),
      induced_module_(bimodule_via_morphism(f_)),
      cache_(std::make_shared<Cache>()) {}

std::size_t MorphismComplex::cochain_dim(std::size_t degree) const {
  return triple_space_dim(degree, source_dim(), target_dim());
}

TripleCochain MorphismComplex::zero(std::size_t degree) const {
  return TripleCochain::zero(field(), degree, source_dim(), target_dim());
}

TripleCochain MorphismComplex::from_flat(std::size_t degree, std::span<const Scalar> coeffs) const {
  return TripleCochain::from_flat(field(), degree, source_dim(), target_dim(), coeffs);
}

TripleCochain MorphismComplex::differential(const TripleCochain& theta) const {
  require_degree(theta.degree, "morphism differential");
  const std::size_t i = theta.degree;
  TripleCochain out{i + 1, zinb::differential(source_module_, theta.xi), zinb::differential(target_module_, theta.pi),
                    push_forward_left(f_, theta.xi) - push_forward_right(f_, theta.pi)};
  if (i > 1) out.phi -= zinb::differential(induced_module_, theta.phi);
  return out;
}

const Matrix& MorphismComplex::differential_matrix(std::size_t degree) const {
  require_degree(degree, "morphism differential_matrix");
  const std::size_t slot = degree - 1;
  std::call_once(cache_->once[slot], [&] {
    const std::size_t i = degree;
    const std::size_t d = source_dim();
    const std::size_t s = target_dim();
    Matrix mat = Matrix::zero(field(), cochain_dim(i + 1), cochain_dim(i));

    const std::size_t out_r = Cochain::space_dim(i + 1, d, d);
    const std::size_t out_s = Cochain::space_dim(i + 1, s, s);
    const std::size_t in_r = Cochain::space_dim(i, d, d);
    const std::size_t in_s = Cochain::space_dim(i, s, s);

    mat.set_block(0, 0, zinb::differential_matrix(source_module_, i));
    mat.set_block(out_r, in_r, zinb::differential_matrix(target_module_, i));

    Matrix neg_right = push_forward_right_matrix(f_, i);
    for (std::size_t r = 0; r < neg_right.rows(); ++r)
      for (std::size_t c = 0; c < neg_right.cols(); ++c) neg_right(r, c) = -neg_right(r, c);
    mat.set_block(out_r + out_s, 0, push_forward_left_matrix(f_, i));
    mat.set_block(out_r + out_s, in_r, neg_right);
    if (i > 1) {
      Matrix neg_d = zinb::differential_matrix(induced_module_, i - 1);
      for (std::size_t r = 0; r < neg_d.rows(); ++r)
        for (std::size_t c = 0; c < neg_d.cols(); ++c) neg_d(r, c) = -neg_d(r, c);
      mat.set_block(out_r + out_s, in_r + in_s, neg_d);
    }
    cache_->matrices[slot] = std::move(mat);
  });
  return *cache_->matrices[slot];
}

namespace {

void require_cohomology_degree(std::size_t degree) {
  if (degree != 2 && degree != 3) {
    throw std::invalid_argument("cohomology is defined in degrees 2 and 3, got " + std::to_string(degree));
  }
}

}  // namespace

std::size_t cohomology_dim(const Bimodule& module, std::size_t degree) {
  require_cohomology_degree(degree);
  const Matrix out = differential_matrix(module, degree);
  const Matrix in = differential_matrix(module, degree - 1);
  return out.cols() - rank(out) - rank(in);
}

std::size_t cohomology_dim(const MorphismComplex& complex, std::size_t degree) {
  require_cohomology_degree(degree);
  const Matrix& out = complex.differential_matrix(degree);
  const Matrix& in = complex.differential_matrix(degree - 1);
  return out.cols() - rank(out) - rank(in);
}

CocycleCheck<Cochain> is_cocycle(const Bimodule& module, const Cochain& x) {
  Cochain residual = differential(module, x);
  const bool ok = residual.is_zero();
  return {ok, std::move(residual)};
}

CocycleCheck<TripleCochain> is_cocycle(const MorphismComplex& complex, const TripleCochain& x) {
  TripleCochain residual = complex.differential(x);
  const bool ok = residual.is_zero();
  return {ok, std::move(residual)};
}

std::optional<Cochain> coboundary_preimage(const Bimodule& module, const Cochain& x) {
  if (x.arity() < 2 || x.arity() > 4) throw std::invalid_argument("coboundary_preimage: degree must be 2..4");
  const std::size_t below = x.arity() - 1;
  auto sol = solve(differential_matrix(module, below), x.flat());
  if (!sol) return std::nullopt;
  return Cochain::from_flat(module.field(), below, module.base().dim(), module.dim(), std::move(*sol));
}

std::optional<TripleCochain> coboundary_preimage(const MorphismComplex& complex, const TripleCochain& x) {
  if (x.degree < 2 || x.degree > 4) throw std::invalid_argument("coboundary_preimage: degree must be 2..4");
  const std::size_t below = x.degree - 1;
  auto sol = solve(complex.differential_matrix(below), x.flat());
  if (!sol) return std::nullopt;
  return complex.from_flat(below, *sol);
}

}  // namespace zinb

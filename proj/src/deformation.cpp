#include "zinbiel/deformation.hpp"

#include <array>

#include "zinbiel/random_instances.hpp"

namespace zinb {

TripleCochain base_term(const AlgebraMorphism& f) {
  return {2, product_cochain(f.source()), product_cochain(f.target()), linear_map_cochain(f.matrix())};
}

std::string DeformationFailure::label() const {
  const std::string n = std::to_string(order);
  switch (kind) {
    case IdentityKind::SourceAlgebra:
      return "(4_" + n + ") for R";
    case IdentityKind::TargetAlgebra:
      return "(4_" + n + ") for S";
    case IdentityKind::Morphism:
      return "(5_" + n + ")";
  }
  return {};
}

Cochain algebra_condition_residual(std::span<const Cochain> products, std::size_t n) {
  const Cochain& m0 = products[0];
  Cochain residual = Cochain::zero(m0.field(), 3, m0.domain_dim(), m0.codomain_dim());
  for (std::size_t l = 0; l <= n; ++l) {
    const Cochain& outer = products[l];
    const Cochain& inner = products[n - l];
    if (outer.is_zero() || inner.is_zero()) continue;
    residual += compose_left(outer, inner);
    residual -= compose_right_symmetric(outer, inner);
  }
  return residual;
}

Cochain morphism_condition_residual(std::span<const Cochain> source_products, std::span<const Cochain> target_products,
                                    std::span<const Cochain> maps, std::size_t n) {
  const Cochain& f0 = maps[0];
  Cochain residual = Cochain::zero(f0.field(), 2, f0.domain_dim(), f0.codomain_dim());
  for (std::size_t i = 0; i <= n; ++i) {
    if (maps[i].is_zero() || source_products[n - i].is_zero()) continue;
    residual += post_compose(maps[i], source_products[n - i]);
  }
  for (std::size_t i = 0; i <= n; ++i) {
    if (target_products[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      const std::size_t k = n - i - j;
      if (maps[j].is_zero() || maps[k].is_zero()) continue;
      const std::array<Cochain, 2> slots{maps[j], maps[k]};
      residual -= pre_compose(target_products[i], slots);
    }
  }
  return residual;
}

bool TruncatedDeformation::is_trivial() const {
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    if (!terms_[i].is_zero()) return false;
  }
  return true;
}

TruncatedDeformation TruncatedDeformation::trivial(const MorphismComplex& complex, std::size_t order) {
  std::vector<TripleCochain> terms{base_term(complex.morphism())};
  for (std::size_t i = 1; i <= order; ++i) terms.push_back(complex.zero(2));
  return TruncatedDeformation(complex, std::move(terms));
}

DeformationCheck check_deformation(const MorphismComplex& complex, std::vector<TripleCochain> terms) {
  if (terms.empty()) throw std::invalid_argument("a deformation needs at least the constant term");
  const auto expected_shape = complex.zero(2);
  for (const auto& t : terms) {
    if (t.degree != 2 || t.xi.domain_dim() != expected_shape.xi.domain_dim() ||
        t.pi.domain_dim() != expected_shape.pi.domain_dim() || t.phi.arity() != 1 ||
        !(t.xi.field() == complex.field())) {
      throw std::invalid_argument("deformation terms must be 2-cochains of the deformation complex");
    }
  }
  if (!(terms[0] == base_term(complex.morphism()))) {
    throw std::invalid_argument("constant term of the deformation is not (m_R; m_S; f)");
  }

  std::vector<Cochain> mr, ms, fs;
  for (const auto& t : terms) {
    mr.push_back(t.xi);
    ms.push_back(t.pi);
    fs.push_back(t.phi);
  }

  DeformationCheck out;
  for (std::size_t n = 0; n < terms.size(); ++n) {
    Cochain r = algebra_condition_residual(mr, n);
    if (!r.is_zero()) {
      out.failure = DeformationFailure{n, IdentityKind::SourceAlgebra, std::move(r)};
      return out;
    }
    Cochain s = algebra_condition_residual(ms, n);
    if (!s.is_zero()) {
      out.failure = DeformationFailure{n, IdentityKind::TargetAlgebra, std::move(s)};
      return out;
    }
    Cochain m = morphism_condition_residual(mr, ms, fs, n);
    if (!m.is_zero()) {
      out.failure = DeformationFailure{n, IdentityKind::Morphism, std::move(m)};
      return out;
    }
  }
  out.deformation = TruncatedDeformation(complex, std::move(terms));
  return out;
}

Infinitesimal infinitesimal(const TruncatedDeformation& theta) {
  Infinitesimal out;
  for (std::size_t i = 1; i <= theta.order(); ++i) {
    if (theta.term(i).is_zero()) continue;
    out.order = i;
    out.term = theta.term(i);
    out.residual = theta.complex().differential(theta.term(i));
    break;
  }
  return out;
}

FormalIsomorphism::FormalIsomorphism(const MorphismComplex& complex, std::vector<std::pair<Cochain, Cochain>> terms)
    : terms_(std::move(terms)),
      source_dim_(complex.source_dim()),
      target_dim_(complex.target_dim()),
      field_(complex.field()) {
  if (terms_.empty()) throw std::invalid_argument("a formal isomorphism needs a constant term");
  for (const auto& [r, s] : terms_) {
    if (r.arity() != 1 || s.arity() != 1 || r.domain_dim() != source_dim_ || r.codomain_dim() != source_dim_ ||
        s.domain_dim() != target_dim_ || s.codomain_dim() != target_dim_ || !(r.field() == field_) ||
        !(s.field() == field_)) {
      throw std::invalid_argument("formal isomorphism terms must be pairs of linear endomorphisms of R and S");
    }
  }
  if (!(terms_[0].first == identity_cochain(complex.morphism().source())) ||
      !(terms_[0].second == identity_cochain(complex.morphism().target()))) {
    throw std::invalid_argument("formal isomorphism must have constant term (Id_R; Id_S)");
  }
}

FormalIsomorphism FormalIsomorphism::identity(const MorphismComplex& complex, std::size_t order) {
  std::vector<std::pair<Cochain, Cochain>> terms{
      {identity_cochain(complex.morphism().source()), identity_cochain(complex.morphism().target())}};
  for (std::size_t i = 1; i <= order; ++i) {
    terms.emplace_back(Cochain::zero(complex.field(), 1, complex.source_dim(), complex.source_dim()),
                       Cochain::zero(complex.field(), 1, complex.target_dim(), complex.target_dim()));
  }
  return FormalIsomorphism(complex, std::move(terms));
}

FormalIsomorphism FormalIsomorphism::monomial(const MorphismComplex& complex, std::size_t l, Cochain phi_r,
                                              Cochain phi_s) {
  if (l == 0) throw std::invalid_argument("monomial formal isomorphism needs l >= 1");
  FormalIsomorphism out = identity(complex, l);
  out.terms_[l] = {std::move(phi_r), std::move(phi_s)};
  return FormalIsomorphism(complex, std::move(out.terms_));
}

std::pair<Cochain, Cochain> FormalIsomorphism::term(std::size_t i) const {
  if (i < terms_.size()) return terms_[i];
  return {Cochain::zero(field_, 1, source_dim_, source_dim_), Cochain::zero(field_, 1, target_dim_, target_dim_)};
}

namespace {

Cochain zero_map(const Field& field, std::size_t dim) { return Cochain::zero(field, 1, dim, dim); }

}  // namespace

FormalIsomorphism invert_truncated(const MorphismComplex& complex, const FormalIsomorphism& phi, std::size_t order) {
  std::vector<std::pair<Cochain, Cochain>> psi{phi.term(0)};
  for (std::size_t n = 1; n <= order; ++n) {
    Cochain r = zero_map(complex.field(), complex.source_dim());
    Cochain s = zero_map(complex.field(), complex.target_dim());
    for (std::size_t i = 1; i <= n; ++i) {
      const auto [pr, ps] = phi.term(i);
      if (!pr.is_zero()) r -= compose(pr, psi[n - i].first);
      if (!ps.is_zero()) s -= compose(ps, psi[n - i].second);
    }
    psi.emplace_back(std::move(r), std::move(s));
  }
  return FormalIsomorphism(complex, std::move(psi));
}

FormalIsomorphism compose(const MorphismComplex& complex, const FormalIsomorphism& a, const FormalIsomorphism& b,
                          std::size_t order) {
  std::vector<std::pair<Cochain, Cochain>> out;
  for (std::size_t n = 0; n <= order; ++n) {
    Cochain r = zero_map(complex.field(), complex.source_dim());
    Cochain s = zero_map(complex.field(), complex.target_dim());
    for (std::size_t i = 0; i <= n; ++i) {
      const auto [ar, as] = a.term(i);
      const auto [br, bs] = b.term(n - i);
      if (!ar.is_zero() && !br.is_zero()) r += compose(ar, br);
      if (!as.is_zero() && !bs.is_zero()) s += compose(as, bs);
    }
    out.emplace_back(std::move(r), std::move(s));
  }
  return FormalIsomorphism(complex, std::move(out));
}

namespace {

// sum_{a+k=n} phi_a o (sum_{b+c+e=k} m_b(psi_c x, psi_e y))
std::vector<Cochain> conjugate_products(const std::vector<Cochain>& m, const std::vector<Cochain>& phi,
                                        const std::vector<Cochain>& psi) {
  const std::size_t order = m.size() - 1;
  std::vector<Cochain> inner;
  for (std::size_t k = 0; k <= order; ++k) {
    Cochain acc = Cochain::zero(m[0].field(), 2, m[0].domain_dim(), m[0].codomain_dim());
    for (std::size_t b = 0; b <= k; ++b) {
      if (m[b].is_zero()) continue;
      for (std::size_t c = 0; b + c <= k; ++c) {
        const std::size_t e = k - b - c;
        if (psi[c].is_zero() || psi[e].is_zero()) continue;
        const std::array<Cochain, 2> slots{psi[c], psi[e]};
        acc += pre_compose(m[b], slots);
      }
    }
    inner.push_back(std::move(acc));
  }
  std::vector<Cochain> out;
  for (std::size_t n = 0; n <= order; ++n) {
    Cochain acc = Cochain::zero(m[0].field(), 2, m[0].domain_dim(), m[0].codomain_dim());
    for (std::size_t a = 0; a <= n; ++a) {
      if (phi[a].is_zero() || inner[n - a].is_zero()) continue;
      acc += post_compose(phi[a], inner[n - a]);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace

TruncatedDeformation conjugate(const TruncatedDeformation& theta, const FormalIsomorphism& phi) {
  const MorphismComplex& complex = theta.complex();
  const std::size_t order = theta.order();
  const FormalIsomorphism psi = invert_truncated(complex, phi, order);

  std::vector<Cochain> mr, ms, fs, phi_r, phi_s, psi_r, psi_s;
  for (std::size_t i = 0; i <= order; ++i) {
    mr.push_back(theta.term(i).xi);
    ms.push_back(theta.term(i).pi);
    fs.push_back(theta.term(i).phi);
    auto [pr, ps] = phi.term(i);
    phi_r.push_back(std::move(pr));
    phi_s.push_back(std::move(ps));
    auto [qr, qs] = psi.term(i);
    psi_r.push_back(std::move(qr));
    psi_s.push_back(std::move(qs));
  }
  const auto mr_bar = conjugate_products(mr, phi_r, psi_r);
  const auto ms_bar = conjugate_products(ms, phi_s, psi_s);

  std::vector<TripleCochain> terms;
  for (std::size_t n = 0; n <= order; ++n) {
    Cochain f_bar = Cochain::zero(complex.field(), 1, complex.source_dim(), complex.target_dim());
    for (std::size_t a = 0; a <= n; ++a) {
      if (phi_s[a].is_zero()) continue;
      for (std::size_t b = 0; a + b <= n; ++b) {
        const std::size_t c = n - a - b;
        if (fs[b].is_zero() || psi_r[c].is_zero()) continue;
        f_bar += compose(phi_s[a], compose(fs[b], psi_r[c]));
      }
    }
    terms.push_back({2, mr_bar[n], ms_bar[n], std::move(f_bar)});
  }
  auto checked = check_deformation(complex, std::move(terms));
  if (!checked.ok()) {
    throw std::logic_error("conjugated series fails " + checked.failure->label());
  }
  return std::move(*checked.deformation);
}

CoboundaryCertificate infinitesimal_difference_is_coboundary(const TruncatedDeformation& theta,
                                                             const TruncatedDeformation& theta_bar,
                                                             const FormalIsomorphism& phi) {
  if (theta.order() < 1 || theta_bar.order() < 1) {
    throw std::invalid_argument("comparing infinitesimals needs deformations of order >= 1");
  }
  const MorphismComplex& complex = theta.complex();
  auto [pr, ps] = phi.term(1);
  const TripleCochain one_cochain{1, std::move(pr), std::move(ps),
                                  Cochain::zero(complex.field(), 0, complex.source_dim(), complex.target_dim())};
  CoboundaryCertificate out{false, theta.term(1) - theta_bar.term(1), complex.differential(one_cochain)};
  out.holds = out.difference == out.coboundary;
  return out;
}

ObstructionClass obstruction(const TruncatedDeformation& theta) {
  const std::size_t n = theta.order();
  if (n < 1) throw std::invalid_argument("obstructions are defined for deformations of order >= 1");
  const MorphismComplex& complex = theta.complex();
  const Field& field = complex.field();
  const std::size_t d = complex.source_dim();
  const std::size_t s = complex.target_dim();
  auto mr = [&](std::size_t i) -> const Cochain& { return theta.term(i).xi; };
  auto ms = [&](std::size_t i) -> const Cochain& { return theta.term(i).pi; };
  auto fm = [&](std::size_t i) -> const Cochain& { return theta.term(i).phi; };

  auto algebra_part = [&](auto&& m, std::size_t dim) {
    Cochain ob = Cochain::zero(field, 3, dim, dim);
    for (std::size_t i = 1; i <= n; ++i) {
      if (m(i).is_zero() || m(n + 1 - i).is_zero()) continue;
      ob += compose_left(m(i), m(n + 1 - i));
      ob -= compose_right_symmetric(m(i), m(n + 1 - i));
    }
    return ob;
  };

  Cochain ob_f = Cochain::zero(field, 2, d, s);
  auto add_term = [&](std::size_t i, std::size_t j, std::size_t k) {
    if (ms(i).is_zero() || fm(j).is_zero() || fm(k).is_zero()) return;
    const std::array<Cochain, 2> slots{fm(j), fm(k)};
    ob_f += pre_compose(ms(i), slots);
  };
  // i + j = N+1, k = 0, i, j > 0
  for (std::size_t i = 1; i <= n; ++i) add_term(i, n + 1 - i, 0);
  // i + k = N+1, j = 0, i, k > 0
  for (std::size_t i = 1; i <= n; ++i) add_term(i, 0, n + 1 - i);
  // j + k = N+1, i = 0, j, k > 0
  for (std::size_t j = 1; j <= n; ++j) add_term(0, j, n + 1 - j);
  // i + j + k = N+1, i, j, k > 0
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; i + j <= n; ++j) add_term(i, j, n + 1 - i - j);
  for (std::size_t i = 1; i <= n; ++i) {
    if (fm(i).is_zero() || mr(n + 1 - i).is_zero()) continue;
    ob_f -= post_compose(fm(i), mr(n + 1 - i));
  }

  return {n, TripleCochain{3, algebra_part(mr, d), algebra_part(ms, s), std::move(ob_f)}};
}

ExtensionResult extend_one_order(const TruncatedDeformation& theta) {
  const MorphismComplex& complex = theta.complex();
  ExtensionResult out{obstruction(theta), std::nullopt, std::nullopt};
  auto sol = solve(complex.differential_matrix(2), out.obstruction.value.flat());
  if (!sol) return out;

  out.next_term = complex.from_flat(2, *sol);
  std::vector<TripleCochain> terms = theta.terms();
  terms.push_back(*out.next_term);
  auto checked = check_deformation(complex, std::move(terms));
  if (!checked.ok()) {
    throw std::logic_error("extension solving d_f theta = Ob fails " + checked.failure->label());
  }
  out.extended = std::move(checked.deformation);
  return out;
}

ExtensionTrace extend_to_order(const TruncatedDeformation& theta, std::size_t target) {
  ExtensionTrace trace{theta, std::nullopt};
  while (trace.deformation.order() < target) {
    auto step = extend_one_order(trace.deformation);
    if (!step.ok()) {
      trace.obstruction = std::move(step.obstruction);
      break;
    }
    trace.deformation = std::move(*step.extended);
  }
  return trace;
}

ExtensionTrace extend_from_cocycle(const MorphismComplex& complex, const TripleCochain& theta_1, std::size_t target) {
  if (theta_1.degree != 2) throw std::invalid_argument("an infinitesimal must be a 2-cochain");
  if (!is_cocycle(complex, theta_1).ok) throw std::invalid_argument("infinitesimal is not a 2-cocycle");
  if (target == 0) return {TruncatedDeformation::trivial(complex, 0), std::nullopt};
  auto checked = check_deformation(complex, {base_term(complex.morphism()), theta_1});
  if (!checked.ok()) throw std::logic_error("a 2-cocycle failed the order-1 conditions " + checked.failure->label());
  return extend_to_order(*checked.deformation, target);
}

namespace {

std::optional<Normalization> try_normalize(const TruncatedDeformation& theta) {
  const MorphismComplex& complex = theta.complex();
  const auto inf = infinitesimal(theta);
  if (!inf.order) {
    return Normalization{0, FormalIsomorphism::identity(complex, theta.order()), theta};
  }
  const std::size_t l = *inf.order;
  auto pre = coboundary_preimage(complex, *inf.term);
  if (!pre) return std::nullopt;

  auto phi = FormalIsomorphism::monomial(complex, l, pre->xi, pre->pi);
  auto result = conjugate(theta, phi);
  for (std::size_t i = 1; i <= l; ++i) {
    if (!result.term(i).is_zero()) {
      throw std::logic_error("normalization left a nonzero term at order " + std::to_string(i));
    }
  }
  return Normalization{l, std::move(phi), std::move(result)};
}

}  // namespace

Normalization normalize_leading_term(const TruncatedDeformation& theta) {
  auto n = try_normalize(theta);
  if (!n) {
    const auto l = *infinitesimal(theta).order;
    throw MathError("leading term theta_" + std::to_string(l) + " is not a 2-coboundary");
  }
  return std::move(*n);
}

Trivialization trivialize(const TruncatedDeformation& theta) {
  const MorphismComplex& complex = theta.complex();
  Trivialization out{FormalIsomorphism::identity(complex, theta.order()), theta, {}, std::nullopt};
  while (!out.result.is_trivial()) {
    auto step = try_normalize(out.result);
    if (!step) {
      out.stuck_order = infinitesimal(out.result).order;
      break;
    }
    out.steps.push_back(step->leading_order);
    out.phi = compose(complex, step->phi, out.phi, theta.order());
    out.result = std::move(step->result);
  }
  return out;
}

RigidityReport rigidity_check(const MorphismComplex& complex, std::size_t probe_order, std::size_t probes,
                              std::uint64_t seed) {
  RigidityReport report;
  report.h2_dim = cohomology_dim(complex, 2);
  report.certified_rigid = report.h2_dim == 0;
  report.seed = seed;
  if (!report.certified_rigid || probes == 0) return report;

  report.probe_order = probe_order;
  InstanceGenerator gen(complex.field(), seed);
  for (std::size_t p = 0; p < probes; ++p) {
    const auto theta = gen.deformation(complex, probe_order);
    ++report.probes;
    if (trivialize(theta).complete()) ++report.trivialized;
  }
  return report;
}

ObstructionIdentity verify_obstruction_identity(const TruncatedDeformation& theta) {
  const auto ob = obstruction(theta).value;
  const AlgebraMorphism& f = theta.morphism();
  ObstructionIdentity out{false, push_forward_left(f, ob.xi) - push_forward_right(f, ob.pi),
                          differential(theta.complex().induced_module(), ob.phi)};
  out.holds = out.lhs == out.rhs;
  return out;
}

}  // namespace zinb

// Truncated deformations of a morphism f : R -> S, formal isomorphisms acting
// on them by conjugation, obstruction classes and order-by-order extension.
//
// A deformation of order N is Theta = sum_{i<=N} theta_i t^i with
// theta_i = (m_{R,i}; m_{S,i}; f_i) in C^2(f,f) and theta_0 = (m_R; m_S; f).
// Everything is computed modulo t^{N+1}.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zinbiel/complex.hpp"

namespace zinb {

/// A mathematical (not usage) failure: a required coboundary does not exist,
/// an obstruction does not vanish, and so on.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (xi; pi; phi) = (m_R; m_S; f) for the morphism.
TripleCochain base_term(const AlgebraMorphism& f);

/// Which per-order identity failed.
enum class IdentityKind { SourceAlgebra, TargetAlgebra, Morphism };

struct DeformationFailure {
  std::size_t order;     // n in the per-order identities
  IdentityKind kind;     // R-, S- or morphism condition
  Cochain residual;      // LHS - RHS on basis tuples
  std::string label() const;  // "(4_n)" for the algebra conditions, "(5_n)" for the morphism one
};

struct DeformationCheck;

/// Residuals of the per-order identities at order n for the candidate terms.
Cochain algebra_condition_residual(std::span<const Cochain> products, std::size_t n);
Cochain morphism_condition_residual(std::span<const Cochain> source_products, std::span<const Cochain> target_products,
                                    std::span<const Cochain> maps, std::size_t n);

class TruncatedDeformation {
 public:
  const MorphismComplex& complex() const { return complex_; }
  const AlgebraMorphism& morphism() const { return complex_.morphism(); }
  std::size_t order() const { return terms_.size() - 1; }
  const std::vector<TripleCochain>& terms() const { return terms_; }
  const TripleCochain& term(std::size_t i) const { return terms_.at(i); }

  /// True when theta_1..theta_N all vanish.
  bool is_trivial() const;

  /// The order-0 deformation (m_R; m_S; f), padded with zero terms to `order`.
  static TruncatedDeformation trivial(const MorphismComplex& complex, std::size_t order);

  friend DeformationCheck check_deformation(const MorphismComplex& complex, std::vector<TripleCochain> terms);

 private:
  TruncatedDeformation(MorphismComplex c, std::vector<TripleCochain> t) : complex_(std::move(c)), terms_(std::move(t)) {}

  MorphismComplex complex_;
  std::vector<TripleCochain> terms_;
};

struct DeformationCheck {
  std::optional<TruncatedDeformation> deformation;
  std::optional<DeformationFailure> failure;  // the smallest failing order
  bool ok() const { return !failure.has_value(); }
};

/// Validates the per-order identities for R, for S and for f at every
/// 0 <= n <= N, where N = terms.size() - 1. Throws std::invalid_argument when
/// terms is empty, a term is not of degree 2, or terms[0] != base_term(f).
DeformationCheck check_deformation(const MorphismComplex& complex, std::vector<TripleCochain> terms);

struct Infinitesimal {
  std::optional<std::size_t> order;  // nullopt: all of theta_1..theta_N vanish
  std::optional<TripleCochain> term;
  std::optional<TripleCochain> residual;  // d_f^2 of the term
  bool is_cocycle() const { return residual && residual->is_zero(); }
};

/// The first nonzero theta_l (l >= 1) together with d_f^2 theta_l.
Infinitesimal infinitesimal(const TruncatedDeformation& theta);

/// Phi = sum (phi_{R,i}; phi_{S,i}) t^i with identity constant term.
class FormalIsomorphism {
 public:
  /// Throws std::invalid_argument if the constant term is not (Id_R; Id_S)
  /// or the shapes are inconsistent.
  FormalIsomorphism(const MorphismComplex& complex, std::vector<std::pair<Cochain, Cochain>> terms);

  static FormalIsomorphism identity(const MorphismComplex& complex, std::size_t order);
  /// (Id_R + phi_R t^l; Id_S + phi_S t^l).
  static FormalIsomorphism monomial(const MorphismComplex& complex, std::size_t l, Cochain phi_r, Cochain phi_s);

  std::size_t order() const { return terms_.size() - 1; }
  const std::vector<std::pair<Cochain, Cochain>>& terms() const { return terms_; }

  /// The i-th term, zero beyond the stored order.
  std::pair<Cochain, Cochain> term(std::size_t i) const;

  friend bool operator==(const FormalIsomorphism&, const FormalIsomorphism&) = default;

 private:
  std::vector<std::pair<Cochain, Cochain>> terms_;
  std::size_t source_dim_;
  std::size_t target_dim_;
  Field field_;
};

/// Truncated inverse to order M: psi_0 = Id, psi_n = -sum_{i=1}^n phi_i psi_{n-i}.
FormalIsomorphism invert_truncated(const MorphismComplex& complex, const FormalIsomorphism& phi, std::size_t order);

/// Product series (a o b)_n = sum_{i+j=n} a_i o b_j, truncated at `order`.
FormalIsomorphism compose(const MorphismComplex& complex, const FormalIsomorphism& a, const FormalIsomorphism& b,
                          std::size_t order);

/// Phi Theta Phi^{-1}: M_bar = Phi M (Phi^{-1} x Phi^{-1}) on each algebra and
/// F_bar = Phi_S F Phi_R^{-1}, truncated at the order of theta. The result is
/// re-validated; a failure there throws std::logic_error.
TruncatedDeformation conjugate(const TruncatedDeformation& theta, const FormalIsomorphism& phi);

struct CoboundaryCertificate {
  bool holds;
  TripleCochain difference;  // theta_1 - theta_bar_1
  TripleCochain coboundary;  // d_f^1 (phi_{R,1}; phi_{S,1})
};

/// Checks theta_1 - theta_bar_1 = d_f^1(phi_{R,1}; phi_{S,1}) for
/// theta_bar = conjugate(theta, phi). Requires order >= 1.
CoboundaryCertificate infinitesimal_difference_is_coboundary(const TruncatedDeformation& theta,
                                                             const TruncatedDeformation& theta_bar,
                                                             const FormalIsomorphism& phi);

struct ObstructionClass {
  std::size_t order;   // N: the class obstructs extension to N + 1
  TripleCochain value; // (Ob_R; Ob_S; Ob_f), degree 3
};

/// The obstruction 3-cochain of an order-N (N >= 1) deformation.
ObstructionClass obstruction(const TruncatedDeformation& theta);

struct ExtensionResult {
  ObstructionClass obstruction;
  std::optional<TripleCochain> next_term;  // theta_{N+1} with d_f^2 theta_{N+1} = Ob
  std::optional<TruncatedDeformation> extended;
  bool ok() const { return extended.has_value(); }
};

/// Solves d_f^2 theta_{N+1} = Ob. On success the extended series has passed
/// check_deformation at order N + 1.
ExtensionResult extend_one_order(const TruncatedDeformation& theta);

struct ExtensionTrace {
  TruncatedDeformation deformation;            // highest order reached
  std::optional<ObstructionClass> obstruction; // set when extension stopped early
  bool complete() const { return !obstruction.has_value(); }
};

/// Starting from theta_0 + theta_1 t, extends order by order up to `target`.
/// Throws std::invalid_argument when theta_1 is not a 2-cocycle.
ExtensionTrace extend_from_cocycle(const MorphismComplex& complex, const TripleCochain& theta_1, std::size_t target);

/// Extends an existing deformation up to `target` (no-op if already there).
ExtensionTrace extend_to_order(const TruncatedDeformation& theta, std::size_t target);

struct Normalization {
  std::size_t leading_order;  // l, 0 when theta is already trivial
  FormalIsomorphism phi;
  TruncatedDeformation result;  // theta_bar_i = 0 for 1 <= i <= l
};

/// Kills the leading term theta_l by conjugating with Id + phi t^l where
/// d_f^1 phi = theta_l. Throws MathError when theta_l is not a coboundary.
Normalization normalize_leading_term(const TruncatedDeformation& theta);

struct Trivialization {
  FormalIsomorphism phi;  // composite of the normalizing isomorphisms
  TruncatedDeformation result;
  std::vector<std::size_t> steps;           // leading orders removed, in order
  std::optional<std::size_t> stuck_order;   // leading order that was not a coboundary
  bool complete() const { return !stuck_order.has_value() && result.is_trivial(); }
};

/// Repeats normalize_leading_term until the series is trivial or the leading
/// term is not a coboundary.
Trivialization trivialize(const TruncatedDeformation& theta);

struct RigidityReport {
  std::size_t h2_dim;
  bool certified_rigid;  // h2_dim == 0
  std::size_t probe_order = 0;
  std::size_t probes = 0;
  std::size_t trivialized = 0;
  std::uint64_t seed = 0;
};

/// dim H^2(f,f) and, when it vanishes and `probes` > 0, trivializes that many
/// seeded random deformations of order `probe_order`.
RigidityReport rigidity_check(const MorphismComplex& complex, std::size_t probe_order, std::size_t probes,
                              std::uint64_t seed);

struct ObstructionIdentity {
  bool holds;
  Cochain lhs;  // f Ob_R - Ob_S f
  Cochain rhs;  // d^2 Ob_f in C^3(R,S)
};

/// f Ob_R - Ob_S f = d^2 Ob_f, each side evaluated on basis triples.
ObstructionIdentity verify_obstruction_identity(const TruncatedDeformation& theta);

}  // namespace zinb

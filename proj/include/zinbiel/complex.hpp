// The cochain complex C^*(R, A) in degrees 1..4, the deformation complex
// C^*(f, f) of a morphism, and their cohomology in degrees 2 and 3.
//
// Differentials exist in two independent forms: `differential` evaluates the
// defining formulas on basis tuples, `differential_matrix` assembles the
// matrix directly from structure constants. Tests hold them against each
// other.
#pragma once

#include <cstddef>
#include <memory>
#include <optional>

#include "zinbiel/algebra.hpp"
#include "zinbiel/cochain.hpp"
#include "zinbiel/matrix.hpp"

namespace zinb {

/// d^i phi for a cochain of arity i in {1,2,3} with values in `module`.
/// Throws std::invalid_argument for other arities or mismatched shapes.
Cochain differential(const Bimodule& module, const Cochain& phi);

/// Matrix of d^i : C^i(R,A) -> C^{i+1}(R,A) in the flattened coordinates of
/// Cochain, size (d^{i+1} m) x (d^i m).
Matrix differential_matrix(const Bimodule& module, std::size_t degree);

/// (f xi)(x_1..x_i) = f(xi(x_1..x_i)), xi in C^i(R,R).
Cochain push_forward_left(const AlgebraMorphism& f, const Cochain& xi);
/// (pi f)(x_1..x_i) = pi(f(x_1)..f(x_i)), pi in C^i(S,S).
Cochain push_forward_right(const AlgebraMorphism& f, const Cochain& pi);

Matrix push_forward_left_matrix(const AlgebraMorphism& f, std::size_t arity);
Matrix push_forward_right_matrix(const AlgebraMorphism& f, std::size_t arity);

/// The deformation complex of f : R -> S with
/// d_f(xi; pi; phi) = (d xi; d pi; f xi - pi f - d phi).
/// Copies share a lazily built, thread-safe cache of differential matrices.
class MorphismComplex {
 public:
  explicit MorphismComplex(AlgebraMorphism f);

  const AlgebraMorphism& morphism() const { return f_; }
  const Field& field() const { return f_.field(); }
  std::size_t source_dim() const { return f_.source().dim(); }
  std::size_t target_dim() const { return f_.target().dim(); }

  /// R and S as bimodules over themselves, and S as an R-bimodule via f.
  const Bimodule& source_module() const { return source_module_; }
  const Bimodule& target_module() const { return target_module_; }
  const Bimodule& induced_module() const { return induced_module_; }

  std::size_t cochain_dim(std::size_t degree) const;
  TripleCochain zero(std::size_t degree) const;
  TripleCochain from_flat(std::size_t degree, std::span<const Scalar> coeffs) const;

  /// Direct evaluation of d_f on a triple of degree 1..3.
  TripleCochain differential(const TripleCochain& theta) const;

  /// Block matrix of d_f^i, i in {1,2,3}.
  const Matrix& differential_matrix(std::size_t degree) const;

 private:
  struct Cache;

  AlgebraMorphism f_;
  Bimodule source_module_;
  Bimodule target_module_;
  Bimodule induced_module_;
  std::shared_ptr<Cache> cache_;
};

/// dim H^n = dim ker d^n - rank d^{n-1} for n in {2,3}.
std::size_t cohomology_dim(const Bimodule& module, std::size_t degree);
std::size_t cohomology_dim(const MorphismComplex& complex, std::size_t degree);

template <class T>
struct CocycleCheck {
  bool ok;
  T residual;  // d(x); zero exactly when ok
};

CocycleCheck<Cochain> is_cocycle(const Bimodule& module, const Cochain& x);
CocycleCheck<TripleCochain> is_cocycle(const MorphismComplex& complex, const TripleCochain& x);

/// Some y with d y = x, taking the free-variables-zero solution of the
/// differential matrix, or nullopt when x is not a coboundary. Degrees 2..4.
std::optional<Cochain> coboundary_preimage(const Bimodule& module, const Cochain& x);
std::optional<TripleCochain> coboundary_preimage(const MorphismComplex& complex, const TripleCochain& x);

}  // namespace zinb

// Seeded random instances for property suites and rigidity probes.
#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "zinbiel/deformation.hpp"

namespace zinb {

class InstanceGenerator {
 public:
  InstanceGenerator(const Field& field, std::uint64_t seed);

  const Field& field() const { return field_; }
  std::uint64_t seed() const { return seed_; }
  std::mt19937_64& engine() { return rng_; }

  /// Uniform over F_p; over Q a small integer or, occasionally, a small fraction.
  Scalar scalar();
  /// scalar() with probability 1 - zero_probability, zero otherwise.
  Scalar sparse_scalar(double zero_probability);

  Vector vector(std::size_t n);
  Cochain cochain(std::size_t arity, std::size_t domain_dim, std::size_t codomain_dim);
  TripleCochain triple(const MorphismComplex& complex, std::size_t degree);

  /// Randomized search for a non-abelian Zinbiel algebra: strictly
  /// triangular structure constants passed through the validator, then
  /// conjugated by a random change of basis. nullopt if every attempt fails
  /// (always the case in dimension <= 1).
  std::optional<ZinbielAlgebra> algebra(std::size_t dim, std::size_t attempts = 200);
  ZinbielAlgebra algebra_or_abelian(std::size_t dim);

  /// Randomized search for a morphism R -> S; nullopt if no attempt validates.
  std::optional<AlgebraMorphism> morphism(const ZinbielAlgebra& source, const ZinbielAlgebra& target,
                                          std::size_t attempts = 200);

  /// A random element of ker d_f^degree.
  TripleCochain cocycle(const MorphismComplex& complex, std::size_t degree);

  /// A valid order-N deformation: a random 2-cocycle extended order by order,
  /// each new term shifted by a random 2-cocycle, then conjugated by a random
  /// formal isomorphism half of the time. When every extension attempt is
  /// obstructed, falls back to a conjugate of the trivial deformation.
  TruncatedDeformation deformation(const MorphismComplex& complex, std::size_t order, std::size_t attempts = 10);

  FormalIsomorphism isomorphism(const MorphismComplex& complex, std::size_t order);

 private:
  Field field_;
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

}  // namespace zinb

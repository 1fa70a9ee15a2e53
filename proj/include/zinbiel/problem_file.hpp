// Text problem files: algebras, morphisms, cochains, deformations and formal
// isomorphisms given by sparse coefficient lists.
//
//   # comment
//   field Fp:5                      (or Q; must precede every block)
//   algebra R 2
//     0 0 1 = 1                     e_0 . e_0 = 1 e_1
//   end
//   morphism f R S
//     1 0 = 1                       f(e_0) has coefficient 1 on e_1
//   end
//   cochain phi 2 R S               arity, domain, codomain
//     0 1 0 = 1/2                   phi(e_0, e_1) has coefficient 1/2 on e_0
//   end
//   deformation D f 2               morphism, order N
//     1 mR 0 0 0 = 1                theta_1: m_{R,1}(e_0, e_0) on e_0
//     2 mS 0 0 0 = 1
//     1 f 0 0 = 1                   f_1(e_0) on e_0
//   end
//   isomorphism P f 1
//     1 R 0 0 = 1                   phi_{R,1}(e_0) on e_0
//     1 S 0 0 = 1
//   end
//
// Indices are 0-based. Names must be defined before they are referenced.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zinbiel/algebra.hpp"
#include "zinbiel/cochain.hpp"

namespace zinb {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct AlgebraEntry {
  std::string name;
  StructureConstants constants;
  friend bool operator==(const AlgebraEntry&, const AlgebraEntry&) = default;
};

struct MorphismEntry {
  std::string name;
  std::string source;
  std::string target;
  Matrix matrix;
  friend bool operator==(const MorphismEntry&, const MorphismEntry&) = default;
};

struct CochainEntry {
  std::string name;
  std::string source;
  std::string target;
  Cochain value;
  friend bool operator==(const CochainEntry&, const CochainEntry&) = default;
};

struct DeformationEntry {
  std::string name;
  std::string morphism;
  std::vector<TripleCochain> terms;  // theta_1 .. theta_N
  std::size_t order() const { return terms.size(); }
  friend bool operator==(const DeformationEntry&, const DeformationEntry&) = default;
};

struct IsomorphismEntry {
  std::string name;
  std::string morphism;
  std::vector<std::pair<Cochain, Cochain>> terms;  // (phi_{R,i}; phi_{S,i}) for i = 1..M
  std::size_t order() const { return terms.size(); }
  friend bool operator==(const IsomorphismEntry&, const IsomorphismEntry&) = default;
};

struct ProblemFile {
  Field field = Field::rationals();
  std::vector<AlgebraEntry> algebras;
  std::vector<MorphismEntry> morphisms;
  std::vector<CochainEntry> cochains;
  std::vector<DeformationEntry> deformations;
  std::vector<IsomorphismEntry> isomorphisms;

  const AlgebraEntry* find_algebra(std::string_view name) const;
  const MorphismEntry* find_morphism(std::string_view name) const;
  const CochainEntry* find_cochain(std::string_view name) const;
  const DeformationEntry* find_deformation(std::string_view name) const;
  const IsomorphismEntry* find_isomorphism(std::string_view name) const;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

/// Throws ParseError with the 1-based line and column of the offending token.
/// `field_override` replaces the field declared in the text.
ProblemFile parse_problem(std::string_view text, std::optional<Field> field_override = std::nullopt);

/// Canonical text: nonzero entries only, in lexicographic index order.
std::string serialize_problem(const ProblemFile& problem);

}  // namespace zinb

// Exact scalars over the rationals or a prime field.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace zinb {

/// Ground field descriptor: either Q or F_p for a prime p.
class Field {
 public:
  static Field rationals() { return Field(0); }

  /// Throws std::invalid_argument when p is not prime.
  static Field prime(std::uint64_t p);

  /// Accepts "Q" or "Fp:<prime>".
  static Field parse(std::string_view spec);

  bool is_rational() const { return modulus_ == 0; }
  std::uint64_t characteristic() const { return modulus_; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t modulus) : modulus_(modulus) {}
  std::uint64_t modulus_;
};

bool is_prime(std::uint64_t n);

/// An element of a Field. Rationals are kept in lowest terms with a positive
/// denominator; residues are kept in [0, p). Mixing fields throws
/// std::domain_error.
class Scalar {
 public:
  static Scalar zero(const Field& field);
  static Scalar one(const Field& field);
  static Scalar from_int(const Field& field, std::int64_t value);
  static Scalar from_rational(const Field& field, const mpq_class& value);

  /// Parses "a" or "a/b" with integer a, b. In F_p, a/b means a * b^-1.
  /// Throws std::invalid_argument on malformed input or a zero denominator.
  static Scalar parse(const Field& field, std::string_view text);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  /// Canonical literal: "a" or "a/b" over Q, the residue in [0, p) over F_p.
  std::string to_string() const;

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
  };

  explicit Scalar(Residue r) : value_(r) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}

  void require_same_field(const Scalar& other) const;

  std::variant<Residue, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace zinb

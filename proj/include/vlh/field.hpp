#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace vlh {

/// Coefficient field: the rationals, or GF(p) for a prime p < 2^31.
class Field {
 public:
  Field() = default;  // the rationals

  static Field rationals() { return Field{}; }
  static Field prime(std::uint32_t p);
  /// Accepts "q", "f2" and "fp:<prime>".
  static Field parse(std::string_view text);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// Exact element of a Field. Rationals are kept canonical (lowest terms,
/// positive denominator); residues lie in [0, p).
class Scalar {
 public:
  Scalar() = default;  // rational zero
  Scalar(Field field, long value);
  Scalar(Field field, const mpq_class& value);

  static Scalar zero(Field field) { return Scalar(field, 0); }
  static Scalar one(Field field) { return Scalar(field, 1); }
  /// Parses "7", "-3", "2/5" into the field (denominators must be invertible).
  static Scalar parse(Field field, std::string_view text);

  Field field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Throws Error(not_invertible) on zero.
  Scalar inverse() const;
  Scalar pow(unsigned exponent) const;

  /// Residue in [0, p) for prime fields; throws for the rationals.
  std::uint32_t residue() const;
  /// Rational value; throws for prime fields.
  const mpq_class& rational() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  std::string to_string() const;

 private:
  void require_same_field(const Scalar& other) const;

  Field field_;
  std::variant<mpq_class, std::uint32_t> value_;
};

}  // namespace vlh

#include "vlh/field.hpp"

#include <charconv>

#include "vlh/error.hpp"

namespace vlh {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::not_invertible: return "NotInvertible";
    case ErrorKind::constraint_violated: return "ConstraintViolated";
    case ErrorKind::unknown_preset: return "UnknownPreset";
    case ErrorKind::field_mismatch: return "FieldMismatch";
    case ErrorKind::dimension_mismatch: return "DimensionMismatch";
    case ErrorKind::duplicate_role: return "DuplicateRole";
    case ErrorKind::missing_passage: return "MissingPassage";
    case ErrorKind::sign_mismatch: return "SignMismatch";
    case ErrorKind::bad_syntax: return "BadSyntax";
    case ErrorKind::length_mismatch: return "LengthMismatch";
    case ErrorKind::not_cube_edge: return "NotCubeEdge";
    case ErrorKind::pattern_not_found: return "PatternNotFound";
    case ErrorKind::invalid_site: return "InvalidSite";
    case ErrorKind::d_squared_nonzero: return "DSquaredNonzero";
    case ErrorKind::not_graded: return "NotGraded";
    case ErrorKind::invalid_config: return "InvalidConfig";
    case ErrorKind::io: return "IoError";
    case ErrorKind::mismatch_found: return "MismatchFound";
  }
  return "Unknown";
}

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t v, std::uint32_t p) {
  // Fermat: v^(p-2)
  std::uint64_t result = 1, base = v, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw Error(ErrorKind::invalid_config, "not a supported prime: " + std::to_string(p),
                "field", std::to_string(p));
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text == "f2" || text == "F2") return prime(2);
  if (text.starts_with("fp:")) {
    std::uint32_t p = 0;
    auto digits = text.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc{} && ptr == digits.data() + digits.size()) return prime(p);
  }
  throw Error(ErrorKind::invalid_config, "unknown field '" + std::string(text) + "'",
              "field", std::string(text));
}

std::string Field::name() const {
  if (is_rational()) return "q";
  if (p_ == 2) return "f2";
  return "fp:" + std::to_string(p_);
}

Scalar::Scalar(Field field, long value) : field_(field) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    value_ = reduce(mpz_class(value), field.characteristic());
  }
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
  if (field.is_rational()) {
    mpq_class v = value;
    v.canonicalize();
    value_ = std::move(v);
    return;
  }
  const std::uint32_t p = field.characteristic();
  const std::uint32_t den = reduce(value.get_den(), p);
  if (den == 0) {
    throw Error(ErrorKind::not_invertible,
                "denominator " + value.get_den().get_str() + " vanishes in " + field.name(),
                "denominator", value.get_den().get_str());
  }
  const std::uint64_t num = reduce(value.get_num(), p);
  value_ = static_cast<std::uint32_t>(num * inverse_mod(den, p) % p);
}

Scalar Scalar::parse(Field field, std::string_view text) {
  std::string s(text);
  std::erase_if(s, [](char c) { return c == ' ' || c == '\t'; });
  if (s.starts_with('+')) s.erase(0, 1);
  mpq_class q;
  bool ok = !s.empty();
  if (ok) {
    const auto slash = s.find('/');
    auto all_digits = [](std::string_view part, bool allow_sign) {
      if (allow_sign && part.starts_with('-')) part.remove_prefix(1);
      return !part.empty() && part.find_first_not_of("0123456789") == std::string_view::npos;
    };
    if (slash == std::string::npos) {
      ok = all_digits(s, true);
    } else {
      ok = all_digits(std::string_view(s).substr(0, slash), true) &&
           all_digits(std::string_view(s).substr(slash + 1), false);
    }
    if (ok) {
      ok = q.set_str(s, 10) == 0 && q.get_den() != 0;
    }
  }
  if (!ok) {
    throw Error(ErrorKind::bad_syntax, "not a rational number: '" + std::string(text) + "'",
                "scalar", std::string(text));
  }
  q.canonicalize();
  return Scalar(field, q);
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<std::uint32_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint32_t>(value_) == 1;
}

Scalar Scalar::inverse() const {
  if (is_zero()) {
    throw Error(ErrorKind::not_invertible, "zero has no inverse", "value", to_string());
  }
  if (field_.is_rational()) {
    mpq_class inv = 1 / std::get<mpq_class>(value_);
    return Scalar(field_, inv);
  }
  Scalar out = *this;
  out.value_ = inverse_mod(std::get<std::uint32_t>(value_), field_.characteristic());
  return out;
}

Scalar Scalar::pow(unsigned exponent) const {
  Scalar result = one(field_);
  Scalar base = *this;
  while (exponent) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

std::uint32_t Scalar::residue() const {
  if (field_.is_rational()) throw Error(ErrorKind::field_mismatch, "rational scalar has no residue");
  return std::get<std::uint32_t>(value_);
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw Error(ErrorKind::field_mismatch, "prime-field scalar is not rational");
  return std::get<mpq_class>(value_);
}

void Scalar::require_same_field(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    throw Error(ErrorKind::field_mismatch,
                "mixing scalars from " + field_.name() + " and " + other.field_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (field_.is_rational()) {
    std::get<mpq_class>(out.value_) = -std::get<mpq_class>(value_);
  } else {
    const std::uint32_t v = std::get<std::uint32_t>(value_);
    std::get<std::uint32_t>(out.value_) = v == 0 ? 0 : field_.characteristic() - v;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  } else {
    const std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} +
                            std::get<std::uint32_t>(rhs.value_);
    std::get<std::uint32_t>(value_) = static_cast<std::uint32_t>(s % field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  } else {
    const std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} *
                            std::get<std::uint32_t>(rhs.value_);
    std::get<std::uint32_t>(value_) = static_cast<std::uint32_t>(s % field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  return lhs.field_ == rhs.field_ && lhs.value_ == rhs.value_;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint32_t>(value_));
}

}  // namespace vlh

#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "vlh/diagram.hpp"

namespace vlh {

/// Integer Laurent polynomial in q; zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int exponent, std::int64_t coefficient = 1);

  const std::map<int, std::int64_t>& terms() const { return terms_; }
  std::int64_t coefficient(int exponent) const;
  bool is_zero() const { return terms_.empty(); }

  void add(int exponent, std::int64_t coefficient);
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator*(std::int64_t c, const LaurentPoly& p);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::int64_t at_one() const;
  /// e.g. "q^5 - q^3 + q^-1"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  std::map<int, std::int64_t> terms_;
};

/// Unnormalised Jones polynomial by the bracket state sum
///   (-1)^n- q^(n+ - 2n-) sum_s (-1)^r(s) q^r(s) (q + 1/q)^k(s),
/// circle counts computed concurrently over states.
LaurentPoly kauffman_jones(const VirtualLinkDiagram& d);
/// Same sum, serial, expanding every state's term separately.
LaurentPoly kauffman_jones_reference(const VirtualLinkDiagram& d);

/// sum_s (-1)^(r(s) - n-) 2^k(s).
std::int64_t jones_at_one(const VirtualLinkDiagram& d);

}  // namespace vlh

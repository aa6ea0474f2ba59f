#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vlh/field.hpp"

namespace vlh {

/// Parameters (a, t, lambda, mu, beta) of a rank-two aspherical extended
/// Frobenius algebra R{1, x}, together with the derived f = 1/a and
/// h = beta - a*lambda^2 - a*mu^2*t (so that x*x = h*x + t*1).
struct TheoryParams {
  Scalar a, t, lambda, mu, beta;
  Scalar f, h;

  Field field() const { return a.field(); }

  /// Derives f and h without checking the classification equations.
  /// Throws Error(not_invertible) if a == 0 and Error(field_mismatch) if the
  /// operands live in different fields.
  static TheoryParams unchecked(Scalar a, Scalar t, Scalar lambda, Scalar mu, Scalar beta);
};

/// Residuals of the defining relations: mu*beta, lambda*beta and
/// 2*a*lambda*mu - a^2*mu^2*lambda^2 - a^2*mu^4*t - 2.
Scalar mu_beta_residual(const TheoryParams& th);
Scalar lambda_beta_residual(const TheoryParams& th);
Scalar classification_residual(const TheoryParams& th);

/// Validated construction. Throws NotInvertible(a) or
/// ConstraintViolated("eq1" | "eq2", residual).
TheoryParams theory_from_params(const Scalar& a, const Scalar& t, const Scalar& lambda,
                                const Scalar& mu, const Scalar& beta);

/// beta = 0 and t solved from the classification equation. Needs a, mu invertible.
TheoryParams theory_from_triple(const Scalar& a, const Scalar& lambda, const Scalar& mu);

/// The eight theories over F2 (f2_row1 .. f2_row8) and the alias manturov.
TheoryParams preset(std::string_view name);
const std::vector<std::string>& preset_names();

enum class Basis : std::uint8_t { one = 0, x = 1 };

struct AlgebraElement {
  Scalar one;
  Scalar x;

  static AlgebraElement zero(Field field) { return {Scalar::zero(field), Scalar::zero(field)}; }
  static AlgebraElement basis(Field field, Basis b);

  Field field() const { return one.field(); }
  const Scalar& coefficient(Basis b) const { return b == Basis::one ? one : x; }

  AlgebraElement& operator+=(const AlgebraElement& rhs);
  friend AlgebraElement operator+(AlgebraElement lhs, const AlgebraElement& rhs) { return lhs += rhs; }
  friend AlgebraElement operator-(const AlgebraElement& lhs, const AlgebraElement& rhs);
  friend AlgebraElement operator*(const Scalar& c, const AlgebraElement& v);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  std::string to_string() const;
};

/// Element of V^{(x) rank}; terms keyed by basis tuples, zero terms dropped.
class TensorElement {
 public:
  using Index = std::vector<Basis>;

  TensorElement(Field field, std::size_t rank) : field_(field), rank_(rank) {}

  static TensorElement scalar(const Scalar& c);
  static TensorElement from(const AlgebraElement& v);
  static TensorElement basis(Field field, Index index);

  Field field() const { return field_; }
  std::size_t rank() const { return rank_; }
  const std::map<Index, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Index& index) const;

  void add_term(Index index, const Scalar& c);
  TensorElement& operator+=(const TensorElement& rhs);
  friend TensorElement operator+(TensorElement lhs, const TensorElement& rhs) { return lhs += rhs; }
  friend TensorElement operator-(const TensorElement& lhs, const TensorElement& rhs);
  friend TensorElement operator*(const Scalar& c, const TensorElement& t);
  friend bool operator==(const TensorElement&, const TensorElement&) = default;

  /// Outer product: this (x) rhs.
  TensorElement tensor(const TensorElement& rhs) const;

  /// Applies a linear operator to the `arity` consecutive factors starting at
  /// `position`; `op` gives the image of a basis tuple of length `arity`.
  TensorElement apply(std::size_t position, std::size_t arity,
                      const std::function<TensorElement(std::span<const Basis>)>& op) const;

  /// Rank-one tensors convert back to algebra elements; rank zero to scalars.
  AlgebraElement to_element() const;
  Scalar to_scalar() const;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rank_ = 0;
  std::map<Index, Scalar> terms_;
};

AlgebraElement unit(const TheoryParams& th);
Scalar counit(const TheoryParams& th, const AlgebraElement& v);
AlgebraElement multiply(const TheoryParams& th, const AlgebraElement& u, const AlgebraElement& v);
TensorElement comultiply(const TheoryParams& th, const AlgebraElement& v);
AlgebraElement phi(const TheoryParams& th, const AlgebraElement& v);
AlgebraElement theta(const TheoryParams& th);
/// m(Delta(1)), the value of a handle: 2f*x - h*f*1.
AlgebraElement handle_element(const TheoryParams& th);

/// Structure maps lifted to tensors, acting at a factor position.
TensorElement multiply_at(const TheoryParams& th, const TensorElement& t, std::size_t position);
TensorElement comultiply_at(const TheoryParams& th, const TensorElement& t, std::size_t position);
TensorElement counit_at(const TheoryParams& th, const TensorElement& t, std::size_t position);
TensorElement phi_at(const TheoryParams& th, const TensorElement& t, std::size_t position);

struct AxiomCheck {
  std::string name;
  bool passed = false;
  std::string witness;  // empty when passed
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool all_passed() const;
  const AxiomCheck* find(std::string_view name) const;
};

/// Runs every structural check on the basis {1, x}; failures become report
/// entries carrying the offending element.
AxiomReport verify_axioms(const TheoryParams& th);

struct FourTuResult {
  bool passed = false;
  std::optional<TensorElement> witness;  // lhs - rhs when the identity fails
};

/// Compares sum a'(x)a''(x)1(x)1 + 1(x)1(x)a'(x)a'' with
/// sum a'(x)1(x)a''(x)1 + 1(x)a'(x)1(x)a'' where Delta(1) = sum a'(x)a''.
FourTuResult verify_4tu(const TheoryParams& th);
FourTuResult verify_4tu(const TensorElement& delta_of_one);

}  // namespace vlh

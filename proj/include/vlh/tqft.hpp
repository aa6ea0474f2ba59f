#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "vlh/algebra.hpp"
#include "vlh/field.hpp"

namespace vlh {

// Elementary cobordisms between the circles of two smoothings. A twist bit
// means the reference orientation of that boundary circle disagrees with the
// orientation induced by an orientation of the (orientable) piece, so the
// boundary identification is composed with phi.
struct Merge {
  std::array<bool, 2> twist_in{};
  bool twist_out = false;
};
struct Split {
  bool twist_in = false;
  std::array<bool, 2> twist_out{};
};
/// Saddle from one circle to one circle: a twice-punctured projective plane.
struct SingleCycle {};
struct Cylinder {
  bool twist = false;
};
/// Disc with outgoing boundary (empty set -> circle): the unit.
struct Cap {};
/// Disc with incoming boundary (circle -> empty set): the counit.
struct Cup {};

using ElementaryCobordism = std::variant<Merge, Split, SingleCycle, Cylinder, Cap, Cup>;

/// Circles carrying the tensor factors of a state space, in canonical order.
/// Basis vector index: factor 0 is the most significant bit, bit 0 = "1",
/// bit 1 = "x".
struct StateSpaceBasis {
  std::vector<int> circles;

  std::size_t factors() const { return circles.size(); }
  std::size_t dimension() const { return std::size_t{1} << circles.size(); }
};

/// Sparse exact matrix stored by columns; entries are nonzero and sorted by row.
class ExactLinearMap {
 public:
  struct Entry {
    std::size_t row;
    Scalar value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  ExactLinearMap() = default;
  ExactLinearMap(Field field, std::size_t rows, std::size_t cols);

  static ExactLinearMap identity(Field field, std::size_t n);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  const std::vector<Entry>& column(std::size_t col) const { return columns_.at(col); }
  Scalar at(std::size_t row, std::size_t col) const;

  /// Accumulates `value` into (row, col).
  void add(std::size_t row, std::size_t col, const Scalar& value);
  /// Replaces a column; entries are merged, sorted and stripped of zeros.
  void set_column(std::size_t col, std::vector<Entry> entries);

  ExactLinearMap scaled(const Scalar& c) const;
  std::vector<Scalar> apply(std::span<const Scalar> vector) const;

  friend bool operator==(const ExactLinearMap&, const ExactLinearMap&) = default;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::vector<std::vector<Entry>> columns_;
};

/// The linear map a theory assigns to an elementary cobordism, acting on the
/// affected tensor factors only.
ExactLinearMap elementary_map(const TheoryParams& th, const ElementaryCobordism& c);

/// outer o inner. Throws Error(dimension_mismatch).
ExactLinearMap compose(const ExactLinearMap& outer, const ExactLinearMap& inner);

template <class... Rest>
ExactLinearMap compose(const ExactLinearMap& a, const ExactLinearMap& b, const Rest&... rest) {
  if constexpr (sizeof...(rest) == 0) {
    return compose(a, b);
  } else {
    return compose(a, compose(b, rest...));
  }
}

/// Extends `map` (on `in_positions.size()` factors, producing
/// `out_positions.size()` factors) by the identity on the remaining factors of
/// a `total_in`-fold tensor power. Unaffected factors keep their relative
/// order; affected output factors land at `out_positions` of the result.
ExactLinearMap tensor_extend(const ExactLinearMap& map, std::span<const std::size_t> in_positions,
                             std::span<const std::size_t> out_positions, std::size_t total_in);

/// Consecutive-factor form: `map` acts on the factors starting at `position`
/// of the tensor power described by `basis`.
ExactLinearMap tensor_extend(const ExactLinearMap& map, std::size_t position,
                             const StateSpaceBasis& basis);

/// epsilon(H^genus * theta^crosscaps), H the handle element.
Scalar evaluate_closed_surface(const TheoryParams& th, unsigned genus, unsigned crosscaps);

}  // namespace vlh

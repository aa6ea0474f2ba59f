#include "vlh/tqft.hpp"

#include <algorithm>
#include <bit>

#include "vlh/error.hpp"

namespace vlh {

ExactLinearMap::ExactLinearMap(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), columns_(cols) {}

ExactLinearMap ExactLinearMap::identity(Field field, std::size_t n) {
  ExactLinearMap m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i].push_back({i, Scalar::one(field)});
  return m;
}

std::size_t ExactLinearMap::nonzeros() const {
  std::size_t total = 0;
  for (const auto& c : columns_) total += c.size();
  return total;
}

Scalar ExactLinearMap::at(std::size_t row, std::size_t col) const {
  const auto& c = columns_.at(col);
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const Entry& e, std::size_t r) { return e.row < r; });
  return it != c.end() && it->row == row ? it->value : Scalar::zero(field_);
}

void ExactLinearMap::add(std::size_t row, std::size_t col, const Scalar& value) {
  if (row >= rows_ || col >= columns_.size()) {
    throw Error(ErrorKind::dimension_mismatch, "matrix entry out of range");
  }
  if (value.is_zero()) return;
  auto& c = columns_[col];
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const Entry& e, std::size_t r) { return e.row < r; });
  if (it != c.end() && it->row == row) {
    it->value += value;
    if (it->value.is_zero()) c.erase(it);
  } else {
    c.insert(it, Entry{row, value});
  }
}

void ExactLinearMap::set_column(std::size_t col, std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.row < b.row; });
  std::vector<Entry> merged;
  merged.reserve(entries.size());
  for (auto& e : entries) {
    if (e.row >= rows_) throw Error(ErrorKind::dimension_mismatch, "matrix entry out of range");
    if (!merged.empty() && merged.back().row == e.row) {
      merged.back().value += e.value;
    } else {
      merged.push_back(std::move(e));
    }
  }
  std::erase_if(merged, [](const Entry& e) { return e.value.is_zero(); });
  columns_.at(col) = std::move(merged);
}

ExactLinearMap ExactLinearMap::scaled(const Scalar& c) const {
  ExactLinearMap out(field_, rows_, cols());
  if (c.is_zero()) return out;
  for (std::size_t j = 0; j < cols(); ++j) {
    for (const auto& e : columns_[j]) out.columns_[j].push_back({e.row, e.value * c});
  }
  return out;
}

std::vector<Scalar> ExactLinearMap::apply(std::span<const Scalar> vector) const {
  if (vector.size() != cols()) throw Error(ErrorKind::dimension_mismatch, "vector length mismatch");
  std::vector<Scalar> out(rows_, Scalar::zero(field_));
  for (std::size_t j = 0; j < cols(); ++j) {
    if (vector[j].is_zero()) continue;
    for (const auto& e : columns_[j]) out[e.row] += e.value * vector[j];
  }
  return out;
}

ExactLinearMap compose(const ExactLinearMap& outer, const ExactLinearMap& inner) {
  if (outer.cols() != inner.rows()) {
    throw Error(ErrorKind::dimension_mismatch,
                "cannot compose " + std::to_string(outer.rows()) + "x" + std::to_string(outer.cols()) +
                    " after " + std::to_string(inner.rows()) + "x" + std::to_string(inner.cols()));
  }
  if (!(outer.field() == inner.field())) {
    throw Error(ErrorKind::field_mismatch, "composing maps over different fields");
  }
  ExactLinearMap out(outer.field(), outer.rows(), inner.cols());
  for (std::size_t j = 0; j < inner.cols(); ++j) {
    std::vector<ExactLinearMap::Entry> column;
    for (const auto& mid : inner.column(j)) {
      for (const auto& e : outer.column(mid.row)) column.push_back({e.row, e.value * mid.value});
    }
    out.set_column(j, std::move(column));
  }
  return out;
}

namespace {

std::size_t factor_count(std::size_t dim) {
  if (!std::has_single_bit(dim)) {
    throw Error(ErrorKind::dimension_mismatch, "dimension " + std::to_string(dim) + " is not a power of two");
  }
  return static_cast<std::size_t>(std::countr_zero(dim));
}

// Bit of factor `i` in a `k`-factor index.
inline std::size_t factor_bit(std::size_t index, std::size_t i, std::size_t k) {
  return (index >> (k - 1 - i)) & 1u;
}

AlgebraElement basis_vector(const TheoryParams& th, std::size_t bit) {
  return AlgebraElement::basis(th.field(), bit ? Basis::x : Basis::one);
}

AlgebraElement twist(const TheoryParams& th, const AlgebraElement& v, bool on) {
  return on ? phi(th, v) : v;
}

void put_element(ExactLinearMap& m, std::size_t col, const AlgebraElement& v) {
  m.add(0, col, v.one);
  m.add(1, col, v.x);
}

}  // namespace

ExactLinearMap tensor_extend(const ExactLinearMap& map, std::span<const std::size_t> in_positions,
                             std::span<const std::size_t> out_positions, std::size_t total_in) {
  const std::size_t a = factor_count(map.cols());
  const std::size_t b = factor_count(map.rows());
  if (a != in_positions.size() || b != out_positions.size() || a > total_in) {
    throw Error(ErrorKind::dimension_mismatch, "tensor_extend: position lists do not match the map");
  }
  const std::size_t rest = total_in - a;
  const std::size_t total_out = rest + b;
  std::vector<bool> in_affected(total_in, false), out_affected(total_out, false);
  for (std::size_t p : in_positions) {
    if (p >= total_in || in_affected[p]) throw Error(ErrorKind::dimension_mismatch, "bad input position");
    in_affected[p] = true;
  }
  for (std::size_t p : out_positions) {
    if (p >= total_out || out_affected[p]) throw Error(ErrorKind::dimension_mismatch, "bad output position");
    out_affected[p] = true;
  }
  std::vector<std::size_t> in_rest, out_rest;
  for (std::size_t i = 0; i < total_in; ++i) {
    if (!in_affected[i]) in_rest.push_back(i);
  }
  for (std::size_t i = 0; i < total_out; ++i) {
    if (!out_affected[i]) out_rest.push_back(i);
  }

  ExactLinearMap out(map.field(), std::size_t{1} << total_out, std::size_t{1} << total_in);
  for (std::size_t col = 0; col < out.cols(); ++col) {
    std::size_t local = 0;
    for (std::size_t i = 0; i < a; ++i) local = (local << 1) | factor_bit(col, in_positions[i], total_in);
    std::size_t carried = 0;
    for (std::size_t i = 0; i < rest; ++i) {
      carried |= factor_bit(col, in_rest[i], total_in) << (total_out - 1 - out_rest[i]);
    }
    std::vector<ExactLinearMap::Entry> column;
    for (const auto& e : map.column(local)) {
      std::size_t row = carried;
      for (std::size_t i = 0; i < b; ++i) {
        row |= factor_bit(e.row, i, b) << (total_out - 1 - out_positions[i]);
      }
      column.push_back({row, e.value});
    }
    out.set_column(col, std::move(column));
  }
  return out;
}

ExactLinearMap tensor_extend(const ExactLinearMap& map, std::size_t position,
                             const StateSpaceBasis& basis) {
  const std::size_t a = factor_count(map.cols());
  const std::size_t b = factor_count(map.rows());
  std::vector<std::size_t> in(a), out(b);
  for (std::size_t i = 0; i < a; ++i) in[i] = position + i;
  for (std::size_t i = 0; i < b; ++i) out[i] = position + i;
  return tensor_extend(map, in, out, basis.factors());
}

ExactLinearMap elementary_map(const TheoryParams& th, const ElementaryCobordism& c) {
  const Field F = th.field();
  return std::visit(
      [&](const auto& piece) -> ExactLinearMap {
        using T = std::decay_t<decltype(piece)>;
        if constexpr (std::is_same_v<T, Merge>) {
          ExactLinearMap m(F, 2, 4);
          for (std::size_t col = 0; col < 4; ++col) {
            const AlgebraElement u = twist(th, basis_vector(th, col >> 1), piece.twist_in[0]);
            const AlgebraElement v = twist(th, basis_vector(th, col & 1), piece.twist_in[1]);
            put_element(m, col, twist(th, multiply(th, u, v), piece.twist_out));
          }
          return m;
        } else if constexpr (std::is_same_v<T, Split>) {
          ExactLinearMap m(F, 4, 2);
          for (std::size_t col = 0; col < 2; ++col) {
            TensorElement image = comultiply(th, twist(th, basis_vector(th, col), piece.twist_in));
            if (piece.twist_out[0]) image = phi_at(th, image, 0);
            if (piece.twist_out[1]) image = phi_at(th, image, 1);
            for (const auto& [index, value] : image.terms()) {
              const std::size_t row = (static_cast<std::size_t>(index[0]) << 1) |
                                      static_cast<std::size_t>(index[1]);
              m.add(row, col, value);
            }
          }
          return m;
        } else if constexpr (std::is_same_v<T, SingleCycle>) {
          ExactLinearMap m(F, 2, 2);
          for (std::size_t col = 0; col < 2; ++col) {
            put_element(m, col, multiply(th, theta(th), basis_vector(th, col)));
          }
          return m;
        } else if constexpr (std::is_same_v<T, Cylinder>) {
          ExactLinearMap m(F, 2, 2);
          for (std::size_t col = 0; col < 2; ++col) {
            put_element(m, col, twist(th, basis_vector(th, col), piece.twist));
          }
          return m;
        } else if constexpr (std::is_same_v<T, Cap>) {
          ExactLinearMap m(F, 2, 1);
          put_element(m, 0, unit(th));
          return m;
        } else {
          ExactLinearMap m(F, 1, 2);
          for (std::size_t col = 0; col < 2; ++col) m.add(0, col, counit(th, basis_vector(th, col)));
          return m;
        }
      },
      c);
}

Scalar evaluate_closed_surface(const TheoryParams& th, unsigned genus, unsigned crosscaps) {
  const AlgebraElement handle = handle_element(th);
  const AlgebraElement cap = theta(th);
  AlgebraElement v = unit(th);
  for (unsigned i = 0; i < genus; ++i) v = multiply(th, v, handle);
  for (unsigned i = 0; i < crosscaps; ++i) v = multiply(th, v, cap);
  return counit(th, v);
}

}  // namespace vlh

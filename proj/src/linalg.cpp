#include "vlh/linalg.hpp"

#include <gmpxx.h>

#include <numeric>
#include <unordered_map>

namespace vlh {

namespace {

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint32_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return result;
}

struct ModEntry {
  std::size_t row;
  std::uint32_t value;
};
using ModColumn = std::vector<ModEntry>;

// column <- column - c * pivot, both sorted by row.
void axpy_mod(ModColumn& column, const ModColumn& pivot, std::uint32_t c, std::uint32_t p) {
  ModColumn out;
  out.reserve(column.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < column.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < column.size() && column[i].row < pivot[j].row)) {
      out.push_back(column[i++]);
    } else if (i == column.size() || pivot[j].row < column[i].row) {
      out.push_back({pivot[j].row, (p - mul_mod(c, pivot[j].value, p)) % p});
      ++j;
    } else {
      const std::uint32_t v = (column[i].value + p - mul_mod(c, pivot[j].value, p)) % p;
      if (v) out.push_back({column[i].row, v});
      ++i;
      ++j;
    }
  }
  column.swap(out);
}

std::size_t rank_mod_p(const ExactLinearMap& m, std::span<const std::size_t> columns) {
  const std::uint32_t p = m.field().characteristic();
  // Pivot row of a reduced column is its last entry.
  std::unordered_map<std::size_t, ModColumn> pivots;
  for (std::size_t col : columns) {
    ModColumn c;
    for (const auto& e : m.column(col)) c.push_back({e.row, e.value.residue()});
    while (!c.empty()) {
      auto it = pivots.find(c.back().row);
      if (it == pivots.end()) break;
      const ModColumn& pivot = it->second;
      axpy_mod(c, pivot, mul_mod(c.back().value, inverse_mod(pivot.back().value, p), p), p);
    }
    if (!c.empty()) {
      const std::size_t low = c.back().row;
      pivots.emplace(low, std::move(c));
    }
  }
  return pivots.size();
}

struct IntEntry {
  std::size_t row;
  mpz_class value;
};
using IntColumn = std::vector<IntEntry>;

void make_primitive(IntColumn& c) {
  mpz_class g = 0;
  for (const auto& e : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.value.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& e : c) mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), g.get_mpz_t());
  }
}

// column <- pv * column - cv * pivot, where pv, cv are the leading entries.
void eliminate_int(IntColumn& column, const IntColumn& pivot) {
  const mpz_class pv = pivot.back().value;
  const mpz_class cv = column.back().value;
  IntColumn out;
  out.reserve(column.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < column.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < column.size() && column[i].row < pivot[j].row)) {
      out.push_back({column[i].row, pv * column[i].value});
      ++i;
    } else if (i == column.size() || pivot[j].row < column[i].row) {
      out.push_back({pivot[j].row, -cv * pivot[j].value});
      ++j;
    } else {
      mpz_class v = pv * column[i].value - cv * pivot[j].value;
      if (v != 0) out.push_back({column[i].row, std::move(v)});
      ++i;
      ++j;
    }
  }
  column.swap(out);
  make_primitive(column);
}

std::size_t rank_rational(const ExactLinearMap& m, std::span<const std::size_t> columns) {
  std::unordered_map<std::size_t, IntColumn> pivots;
  for (std::size_t col : columns) {
    const auto& src = m.column(col);
    if (src.empty()) continue;
    mpz_class denominator = 1;
    for (const auto& e : src) {
      mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), e.value.rational().get_den_mpz_t());
    }
    IntColumn c;
    for (const auto& e : src) {
      const mpq_class& q = e.value.rational();
      c.push_back({e.row, q.get_num() * (denominator / q.get_den())});
    }
    make_primitive(c);
    while (!c.empty()) {
      auto it = pivots.find(c.back().row);
      if (it == pivots.end()) break;
      eliminate_int(c, it->second);
    }
    if (!c.empty()) {
      const std::size_t low = c.back().row;
      pivots.emplace(low, std::move(c));
    }
  }
  return pivots.size();
}

}  // namespace

std::size_t rank_of_columns(const ExactLinearMap& m, std::span<const std::size_t> columns) {
  return m.field().is_rational() ? rank_rational(m, columns) : rank_mod_p(m, columns);
}

std::size_t rank(const ExactLinearMap& m) {
  std::vector<std::size_t> all(m.cols());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return rank_of_columns(m, all);
}

std::size_t rank_reference(const ExactLinearMap& m) {
  const Field F = m.field();
  std::vector<std::vector<Scalar>> a(m.rows(), std::vector<Scalar>(m.cols(), Scalar::zero(F)));
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (const auto& e : m.column(j)) a[e.row][j] = e.value;
  }
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.rows() && a[pivot][col].is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[pivot], a[r]);
    const Scalar inv = a[r][col].inverse();
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (a[i][col].is_zero()) continue;
      const Scalar factor = a[i][col] * inv;
      for (std::size_t k = col; k < m.cols(); ++k) a[i][k] -= factor * a[r][k];
    }
    ++r;
  }
  return r;
}

std::vector<std::size_t> ranks(std::span<const ExactLinearMap> maps) {
  std::vector<std::size_t> out(maps.size(), 0);
  const auto count = static_cast<std::int64_t>(maps.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = rank(maps[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace vlh

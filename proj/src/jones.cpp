#include "vlh/jones.hpp"

#include <vector>

#include "vlh/smoothing.hpp"

namespace vlh {

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t coefficient) {
  LaurentPoly p;
  p.add(exponent, coefficient);
  return p;
}

std::int64_t LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add(int exponent, std::int64_t coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add(e, c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [e1, c1] : lhs.terms_) {
    for (const auto& [e2, c2] : rhs.terms_) out.add(e1 + e2, c1 * c2);
  }
  return out;
}

LaurentPoly operator*(std::int64_t c, const LaurentPoly& p) { return LaurentPoly::monomial(0, c) * p; }

std::int64_t LaurentPoly::at_one() const {
  std::int64_t total = 0;
  for (const auto& [e, c] : terms_) total += c;
  return total;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [e, c] = *it;
    const std::int64_t magnitude = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += std::to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out += std::to_string(magnitude);
    out += "q";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

LaurentPoly circle_value() { return LaurentPoly::monomial(1) + LaurentPoly::monomial(-1); }

LaurentPoly circle_power(int k) {
  LaurentPoly out = LaurentPoly::monomial(0);
  for (int i = 0; i < k; ++i) out = out * circle_value();
  return out;
}

LaurentPoly normalization(const VirtualLinkDiagram& d) {
  const int np = d.n_plus();
  const int nm = d.n_minus();
  return LaurentPoly::monomial(np - 2 * nm, nm % 2 ? -1 : 1);
}

}  // namespace

LaurentPoly kauffman_jones(const VirtualLinkDiagram& d) {
  const DiagramArcs arcs(d);
  const int n = d.crossing_count();
  const std::int64_t count = std::int64_t{1} << n;
  std::vector<int> k(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t s = 0; s < count; ++s) {
    k[static_cast<std::size_t>(s)] = smooth(arcs, static_cast<State>(s)).k();
  }
  // Tally states by (r, k) before expanding.
  std::map<std::pair<int, int>, std::int64_t> tally;
  for (std::int64_t s = 0; s < count; ++s) {
    ++tally[{popcount(static_cast<State>(s)), k[static_cast<std::size_t>(s)]}];
  }
  LaurentPoly sum;
  for (const auto& [rk, multiplicity] : tally) {
    const auto [r, circles] = rk;
    sum += LaurentPoly::monomial(r, (r % 2 ? -1 : 1) * multiplicity) * circle_power(circles);
  }
  return normalization(d) * sum;
}

LaurentPoly kauffman_jones_reference(const VirtualLinkDiagram& d) {
  const int n = d.crossing_count();
  LaurentPoly sum;
  for (State s = 0; s < (State{1} << n); ++s) {
    const Smoothing sm = smooth(d, s);
    LaurentPoly term = LaurentPoly::monomial(sm.r(), sm.r() % 2 ? -1 : 1);
    for (int i = 0; i < sm.k(); ++i) term = term * circle_value();
    sum += term;
  }
  return normalization(d) * sum;
}

std::int64_t jones_at_one(const VirtualLinkDiagram& d) {
  const DiagramArcs arcs(d);
  const int n = d.crossing_count();
  const int nm = d.n_minus();
  const std::int64_t count = std::int64_t{1} << n;
  std::int64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic, 64)
  for (std::int64_t s = 0; s < count; ++s) {
    const Smoothing sm = smooth(arcs, static_cast<State>(s));
    const std::int64_t term = std::int64_t{1} << sm.k();
    total += (sm.r() - nm) % 2 ? -term : term;
  }
  return total;
}

}  // namespace vlh

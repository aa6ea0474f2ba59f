#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

Splice splice(const vlh::VirtualLinkDiagram& d, const std::string& bits) {
  const int n = d.crossing_count();
  if (static_cast<int>(bits.size()) != n) throw std::invalid_argument("state length");
  int segments = 0;
  for (const auto& comp : d.components()) segments += std::max<int>(1, static_cast<int>(comp.size()));

  // Node 2s is the start of segment s, node 2s + 1 its end.
  UnionFind uf(2 * segments);
  for (int s = 0; s < segments; ++s) uf.unite(2 * s, 2 * s + 1);

  struct Ends {
    int over_in = -1, over_out = -1, under_in = -1, under_out = -1;
  };
  std::vector<Ends> ends(static_cast<std::size_t>(n));
  int base = 0;
  for (const auto& comp : d.components()) {
    const int len = static_cast<int>(comp.size());
    if (len == 0) {
      ++base;
      continue;
    }
    for (int i = 0; i < len; ++i) {
      const auto& p = comp[static_cast<std::size_t>(i)];
      const int in_segment = base + (i + len - 1) % len;
      const int out_segment = base + i;
      Ends& e = ends[static_cast<std::size_t>(p.crossing - 1)];
      (p.over ? e.over_in : e.under_in) = in_segment;
      (p.over ? e.over_out : e.under_out) = out_segment;
    }
    base += len;
  }

  Splice out;
  for (int j = 1; j <= n; ++j) {
    const Ends& e = ends[static_cast<std::size_t>(j - 1)];
    out.crossing_segments.push_back({e.over_in, e.over_out, e.under_in, e.under_out});
    const bool zero = bits[static_cast<std::size_t>(j - 1)] == '0';
    const bool positive = d.sign(j) > 0;
    const int oi = 2 * e.over_in + 1, ui = 2 * e.under_in + 1;  // incoming ends
    const int oo = 2 * e.over_out, uo = 2 * e.under_out;        // outgoing starts
    if (zero == positive) {
      // Resolution that follows the strand orientations.
      uf.unite(oi, uo);
      uf.unite(ui, oo);
    } else {
      uf.unite(oi, ui);
      uf.unite(oo, uo);
    }
  }
  std::map<int, int> label;
  for (int s = 0; s < segments; ++s) {
    const int root = uf.find(2 * s);
    auto [it, inserted] = label.emplace(root, static_cast<int>(label.size()));
    out.segment_circle.push_back(it->second);
  }
  out.circles = static_cast<int>(label.size());
  return out;
}

int circle_count(const vlh::VirtualLinkDiagram& d, const std::string& bits) { return splice(d, bits).circles; }

std::vector<std::string> states(int n) {
  std::vector<std::string> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    std::string bits(static_cast<std::size_t>(n), '0');
    for (int j = 0; j < n; ++j) {
      if ((s >> (n - 1 - j)) & 1) bits[static_cast<std::size_t>(j)] = '1';
    }
    out.push_back(bits);
  }
  return out;
}

std::map<int, std::int64_t> jones(const vlh::VirtualLinkDiagram& d) {
  const int np = d.n_plus(), nm = d.n_minus();
  std::map<int, std::int64_t> out;
  for (const auto& bits : states(d.crossing_count())) {
    const int r = static_cast<int>(std::count(bits.begin(), bits.end(), '1'));
    const int k = circle_count(d, bits);
    // (q + 1/q)^k expanded by the binomial theorem.
    std::int64_t binom = 1;
    for (int i = 0; i <= k; ++i) {
      const int exponent = (k - 2 * i) + r + np - 2 * nm;
      const std::int64_t sign = ((r + nm) % 2) ? -1 : 1;
      out[exponent] += sign * binom;
      binom = binom * (k - i) / (i + 1);
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::size_t dense_rank(std::vector<std::vector<vlh::Scalar>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      const vlh::Scalar factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::map<int, std::size_t> classical_betti(const vlh::VirtualLinkDiagram& d, const vlh::Scalar& a,
                                           const vlh::Scalar& h, const vlh::Scalar& t) {
  const vlh::Field F = a.field();
  const vlh::Scalar zero = vlh::Scalar::zero(F), one = vlh::Scalar::one(F);
  const vlh::Scalar f = one / a;
  const int n = d.crossing_count();
  const auto all = states(n);

  struct Piece {
    std::string bits;
    Splice sp;
    std::size_t offset = 0;
  };
  std::vector<std::vector<Piece>> by_r(static_cast<std::size_t>(n + 1));
  std::vector<std::size_t> dims(static_cast<std::size_t>(n + 1), 0);
  std::map<std::string, std::pair<int, std::size_t>> where;
  for (const auto& bits : all) {
    const int r = static_cast<int>(std::count(bits.begin(), bits.end(), '1'));
    Piece p{bits, splice(d, bits), dims[static_cast<std::size_t>(r)]};
    dims[static_cast<std::size_t>(r)] += std::size_t{1} << p.sp.circles;
    where[bits] = {r, by_r[static_cast<std::size_t>(r)].size()};
    by_r[static_cast<std::size_t>(r)].push_back(std::move(p));
  }

  std::vector<std::size_t> ranks(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < n; ++r) {
    std::vector<std::vector<vlh::Scalar>> m(dims[static_cast<std::size_t>(r + 1)],
                                            std::vector<vlh::Scalar>(dims[static_cast<std::size_t>(r)], zero));
    for (const Piece& src : by_r[static_cast<std::size_t>(r)]) {
      for (int j = 1; j <= n; ++j) {
        if (src.bits[static_cast<std::size_t>(j - 1)] == '1') continue;
        std::string tb = src.bits;
        tb[static_cast<std::size_t>(j - 1)] = '1';
        const auto [tr, ti] = where.at(tb);
        const Piece& dst = by_r[static_cast<std::size_t>(tr)][ti];
        const int ones_before = static_cast<int>(std::count(src.bits.begin(), src.bits.begin() + (j - 1), '1'));
        const vlh::Scalar sign = ones_before % 2 ? -one : one;

        const auto& segs = src.sp.crossing_segments[static_cast<std::size_t>(j - 1)];
        std::set<int> from, to;
        for (int s : segs) {
          from.insert(src.sp.segment_circle[static_cast<std::size_t>(s)]);
          to.insert(dst.sp.segment_circle[static_cast<std::size_t>(s)]);
        }
        // Unaffected circles, matched through any segment they contain.
        std::map<int, int> carried;
        for (std::size_t s = 0; s < src.sp.segment_circle.size(); ++s) {
          const int c = src.sp.segment_circle[s];
          if (!from.count(c)) carried[c] = dst.sp.segment_circle[s];
        }
        const int ks = src.sp.circles, kt = dst.sp.circles;
        auto bit_of = [](std::size_t dec, int k, int circle) { return (dec >> (k - 1 - circle)) & 1u; };
        auto with = [](std::size_t dec, int k, int circle, std::size_t b) {
          return dec | (b << (k - 1 - circle));
        };
        for (std::size_t dec = 0; dec < (std::size_t{1} << ks); ++dec) {
          std::size_t base = 0;
          for (const auto& [c, c2] : carried) base = with(base, kt, c2, bit_of(dec, ks, c));
          std::vector<std::pair<std::size_t, vlh::Scalar>> image;
          if (from.size() == 2 && to.size() == 1) {
            const int out = *to.begin();
            const auto u = bit_of(dec, ks, *from.begin()), v = bit_of(dec, ks, *from.rbegin());
            if (u + v == 0) image = {{with(base, kt, out, 0), one}};
            if (u + v == 1) image = {{with(base, kt, out, 1), one}};
            if (u + v == 2) image = {{with(base, kt, out, 1), h}, {with(base, kt, out, 0), t}};
          } else if (from.size() == 1 && to.size() == 2) {
            const int o1 = *to.begin(), o2 = *to.rbegin();
            auto both = [&](std::size_t b1, std::size_t b2) { return with(with(base, kt, o1, b1), kt, o2, b2); };
            if (bit_of(dec, ks, *from.begin()) == 0) {
              image = {{both(0, 1), f}, {both(1, 0), f}, {both(0, 0), -(h * f)}};
            } else {
              image = {{both(1, 1), f}, {both(0, 0), f * t}};
            }
          } else {
            throw std::logic_error("saddle keeps the circle count; not a planar diagram");
          }
          for (const auto& [row, value] : image) m[dst.offset + row][src.offset + dec] += sign * value;
        }
      }
    }
    ranks[static_cast<std::size_t>(r)] = dense_rank(std::move(m));
  }

  std::map<int, std::size_t> betti;
  for (int r = 0; r <= n; ++r) {
    const std::size_t b = dims[static_cast<std::size_t>(r)] - (r < n ? ranks[static_cast<std::size_t>(r)] : 0) -
                          (r > 0 ? ranks[static_cast<std::size_t>(r - 1)] : 0);
    if (b) betti[r - d.n_minus()] = b;
  }
  return betti;
}

std::vector<vlh::DiagramRecord> corpus() { return vlh::load_corpus(VLH_CORPUS_DIR); }

}  // namespace oracle

#include "vlh/complex.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "vlh/error.hpp"
#include "vlh/linalg.hpp"

namespace vlh {

const ChainGroup& ChainComplex::group(int degree) const {
  return groups.at(static_cast<std::size_t>(degree - min_degree()));
}

const ExactLinearMap& ChainComplex::differential(int degree) const {
  return differentials.at(static_cast<std::size_t>(degree - min_degree()));
}

std::vector<std::size_t> ChainComplex::dimensions() const {
  std::vector<std::size_t> out;
  for (const auto& g : groups) out.push_back(g.dimension);
  return out;
}

std::pair<int, std::size_t> ChainComplex::locate(State s) const {
  const int degree = popcount(s) - n_minus;
  const auto& sums = group(degree).summands;
  auto it = std::lower_bound(sums.begin(), sums.end(), s,
                             [](const Summand& m, State v) { return m.state < v; });
  if (it == sums.end() || it->state != s) throw std::out_of_range("state not in complex");
  return {degree, static_cast<std::size_t>(it - sums.begin())};
}

namespace {

std::size_t summand_at(const ChainGroup& g, std::size_t index) {
  auto it = std::upper_bound(g.summands.begin(), g.summands.end(), index,
                             [](std::size_t v, const Summand& m) { return v < m.offset; });
  return static_cast<std::size_t>(it - g.summands.begin()) - 1;
}

}  // namespace

int ChainComplex::q_degree(int degree, std::size_t index) const {
  const ChainGroup& g = group(degree);
  const Summand& m = g.summands[summand_at(g, index)];
  const int k = static_cast<int>(m.circles.size());
  const int xs = std::popcount(index - m.offset);
  return (k - 2 * xs) + (degree + n_minus) + n_plus - 2 * n_minus;
}

namespace {

struct Cube {
  ChainComplex complex;
  DiagramArcs arcs;
  std::vector<Smoothing> smoothings;
};

Cube make_cube(const VirtualLinkDiagram& d, const TheoryParams& th) {
  Cube cube{ChainComplex{}, DiagramArcs(d), {}};
  cube.smoothings = smooth_all(cube.arcs);
  ChainComplex& c = cube.complex;
  c.field = th.field();
  c.crossings = d.crossing_count();
  c.n_plus = d.n_plus();
  c.n_minus = d.n_minus();
  c.groups.resize(static_cast<std::size_t>(c.crossings + 1));
  for (std::size_t i = 0; i < c.groups.size(); ++i) c.groups[i].degree = static_cast<int>(i) - c.n_minus;
  for (const Smoothing& sm : cube.smoothings) {
    ChainGroup& g = c.groups[static_cast<std::size_t>(sm.r())];
    Summand m{sm.state, {}, g.dimension};
    for (const Circle& circle : sm.circles) m.circles.push_back(circle.id);
    g.dimension += m.dimension();
    g.summands.push_back(std::move(m));
  }
  for (int i = 0; i < c.crossings; ++i) {
    c.differentials.emplace_back(c.field, c.groups[static_cast<std::size_t>(i + 1)].dimension,
                                 c.groups[static_cast<std::size_t>(i)].dimension);
  }
  return cube;
}

// Small maps for every twist pattern, evaluated once per build.
class LocalMaps {
 public:
  explicit LocalMaps(const TheoryParams& th)
      : single_(elementary_map(th, SingleCycle{})), phi_(elementary_map(th, Cylinder{true})) {
    for (int bits = 0; bits < 8; ++bits) {
      const bool b0 = bits & 4, b1 = bits & 2, b2 = bits & 1;
      merge_[static_cast<std::size_t>(bits)] = elementary_map(th, Merge{{b0, b1}, b2});
      split_[static_cast<std::size_t>(bits)] = elementary_map(th, Split{b0, {b1, b2}});
    }
  }

  const ExactLinearMap& get(const ElementaryCobordism& c) const {
    if (const auto* m = std::get_if<Merge>(&c)) {
      return merge_[static_cast<std::size_t>(m->twist_in[0] * 4 + m->twist_in[1] * 2 + m->twist_out)];
    }
    if (const auto* s = std::get_if<Split>(&c)) {
      return split_[static_cast<std::size_t>(s->twist_in * 4 + s->twist_out[0] * 2 + s->twist_out[1])];
    }
    return single_;
  }
  const ExactLinearMap& phi() const { return phi_; }

 private:
  std::array<ExactLinearMap, 8> merge_, split_;
  ExactLinearMap single_, phi_;
};

// Adds the signed edge map of `sd` to the columns of the source summand.
void accumulate_edge(const SaddleDescriptor& sd, const Summand& src, const Summand& dst,
                     const LocalMaps& maps, const Scalar& sign,
                     std::vector<std::vector<ExactLinearMap::Entry>>& columns) {
  const std::size_t kin = src.circles.size();
  const std::size_t kout = dst.circles.size();
  const ExactLinearMap& local = maps.get(sd.cobordism);
  const bool merging = sd.kind == SaddleKind::merge;
  const bool splitting = sd.kind == SaddleKind::split;
  auto in_bit = [&](std::size_t b, int i) { return (b >> (kin - 1 - static_cast<std::size_t>(i))) & 1u; };
  auto out_shift = [&](int i) { return kout - 1 - static_cast<std::size_t>(i); };

  struct Term {
    std::size_t row;
    Scalar value;
  };
  std::vector<Term> terms, next;
  for (std::size_t b = 0; b < src.dimension(); ++b) {
    terms.clear();
    const std::size_t local_col =
        merging ? (in_bit(b, sd.from_circles[0]) << 1) | in_bit(b, sd.from_circles[1]) : in_bit(b, sd.from_circles[0]);
    for (const auto& e : local.column(local_col)) {
      std::size_t row;
      if (splitting) {
        row = ((e.row >> 1) << out_shift(sd.to_circles[0])) | ((e.row & 1u) << out_shift(sd.to_circles[1]));
      } else {
        row = e.row << out_shift(sd.to_circles[0]);
      }
      terms.push_back({row, e.value * sign});
    }
    for (const auto& carried : sd.carried) {
      const std::size_t bit = in_bit(b, carried.from);
      const std::size_t shift = out_shift(carried.to);
      if (!carried.twist) {
        for (auto& t : terms) t.row |= bit << shift;
        continue;
      }
      next.clear();
      for (const auto& t : terms) {
        for (const auto& e : maps.phi().column(bit)) next.push_back({t.row | (e.row << shift), t.value * e.value});
      }
      terms.swap(next);
    }
    auto& column = columns[b];
    for (auto& t : terms) column.push_back({dst.offset + t.row, std::move(t.value)});
  }
}

std::string face_witness(const ChainComplex& c, int degree, std::size_t row, std::size_t col) {
  const ChainGroup& from = c.group(degree);
  const ChainGroup& to = c.group(degree + 2);
  const Summand& s = from.summands[summand_at(from, col)];
  const Summand& u = to.summands[summand_at(to, row)];
  return state_string(s.state, c.crossings) + "->" + state_string(u.state, c.crossings) + " basis " +
         std::to_string(col - s.offset) + "->" + std::to_string(row - u.offset);
}

void check_d_squared(const ChainComplex& c) {
  const int count = static_cast<int>(c.differentials.size()) - 1;
  std::vector<std::string> witnesses(static_cast<std::size_t>(std::max(count, 0)));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    const ExactLinearMap dd = compose(c.differentials[static_cast<std::size_t>(i + 1)],
                                      c.differentials[static_cast<std::size_t>(i)]);
    for (std::size_t col = 0; col < dd.cols() && witnesses[static_cast<std::size_t>(i)].empty(); ++col) {
      if (!dd.column(col).empty()) {
        witnesses[static_cast<std::size_t>(i)] =
            face_witness(c, i + c.min_degree(), dd.column(col).front().row, col);
      }
    }
  }
  for (int i = 0; i < count; ++i) {
    const auto& w = witnesses[static_cast<std::size_t>(i)];
    if (!w.empty()) {
      throw Error(ErrorKind::d_squared_nonzero,
                  "d o d != 0 at degree " + std::to_string(i + c.min_degree()) + ": " + w,
                  std::to_string(i + c.min_degree()), w);
    }
  }
}

}  // namespace

ChainComplex build_complex(const VirtualLinkDiagram& d, const TheoryParams& th,
                           const OrientationConvention& convention) {
  Cube cube = make_cube(d, th);
  ChainComplex& c = cube.complex;
  const int n = c.crossings;
  const LocalMaps maps(th);
  const Scalar plus = Scalar::one(c.field);
  const Scalar minus = -plus;
  const auto count = static_cast<std::int64_t>(cube.smoothings.size());
  std::string failure;

#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t si = 0; si < count; ++si) {
    const Smoothing& from = cube.smoothings[static_cast<std::size_t>(si)];
    const int r = from.r();
    if (r == n) continue;
    try {
      const ChainGroup& g = c.groups[static_cast<std::size_t>(r)];
      const ChainGroup& h = c.groups[static_cast<std::size_t>(r + 1)];
      auto find = [](const ChainGroup& grp, State s) -> const Summand& {
        return *std::lower_bound(grp.summands.begin(), grp.summands.end(), s,
                                 [](const Summand& m, State v) { return m.state < v; });
      };
      const Summand& src = find(g, from.state);
      std::vector<std::vector<ExactLinearMap::Entry>> columns(src.dimension());
      for (int j = 1; j <= n; ++j) {
        if (state_bit(from.state, n, j)) continue;
        const Smoothing& to = cube.smoothings[with_bit(from.state, n, j)];
        const SaddleDescriptor sd = classify_saddle(cube.arcs, from, to, convention);
        accumulate_edge(sd, src, find(h, to.state), maps, sd.sign_exponent % 2 ? minus : plus, columns);
      }
      ExactLinearMap& dm = c.differentials[static_cast<std::size_t>(r)];
      for (std::size_t b = 0; b < columns.size(); ++b) dm.set_column(src.offset + b, std::move(columns[b]));
    } catch (const std::exception& e) {
#pragma omp critical(vlh_build_failure)
      if (failure.empty()) failure = e.what();
    }
  }
  if (!failure.empty()) throw std::logic_error(failure);
  check_d_squared(c);
  return std::move(cube.complex);
}

ChainComplex build_complex_reference(const VirtualLinkDiagram& d, const TheoryParams& th,
                                     const OrientationConvention& convention) {
  Cube cube = make_cube(d, th);
  ChainComplex& c = cube.complex;
  const ExactLinearMap phi_map = elementary_map(th, Cylinder{true});
  const Scalar minus = -Scalar::one(c.field);
  for (const SaddleDescriptor& sd : cube_edges(d, convention)) {
    const auto [degree, si] = c.locate(sd.from);
    const auto [target_degree, ti] = c.locate(sd.to);
    const Summand& src = c.group(degree).summands[si];
    const Summand& dst = c.group(target_degree).summands[ti];

    std::vector<std::size_t> in(sd.from_circles.begin(), sd.from_circles.end());
    std::vector<std::size_t> out(sd.to_circles.begin(), sd.to_circles.end());
    ExactLinearMap edge = tensor_extend(elementary_map(th, sd.cobordism), in, out, src.circles.size());
    for (const auto& carried : sd.carried) {
      if (!carried.twist) continue;
      const std::size_t at[] = {static_cast<std::size_t>(carried.to)};
      edge = compose(tensor_extend(phi_map, at, at, dst.circles.size()), edge);
    }
    if (sd.sign_exponent % 2) edge = edge.scaled(minus);

    ExactLinearMap& dm = c.differentials[static_cast<std::size_t>(degree - c.min_degree())];
    for (std::size_t col = 0; col < edge.cols(); ++col) {
      for (const auto& e : edge.column(col)) dm.add(dst.offset + e.row, src.offset + col, e.value);
    }
  }
  check_d_squared(c);
  return std::move(cube.complex);
}

ExactLinearMap differential_block(const ChainComplex& c, State s, State t) {
  const auto [ds, is] = c.locate(s);
  const auto [dt, it] = c.locate(t);
  if (dt != ds + 1) throw Error(ErrorKind::not_cube_edge, "states are not in adjacent degrees");
  const Summand& src = c.group(ds).summands[is];
  const Summand& dst = c.group(dt).summands[it];
  const ExactLinearMap& dm = c.differential(ds);
  ExactLinearMap block(c.field, dst.dimension(), src.dimension());
  for (std::size_t col = 0; col < src.dimension(); ++col) {
    for (const auto& e : dm.column(src.offset + col)) {
      if (e.row >= dst.offset && e.row < dst.offset + dst.dimension()) block.add(e.row - dst.offset, col, e.value);
    }
  }
  return block;
}

HomologyResult homology(const ChainComplex& c) {
  const std::vector<std::size_t> rk = ranks(c.differentials);
  HomologyResult out;
  for (std::size_t g = 0; g < c.groups.size(); ++g) {
    const std::size_t outgoing = g < rk.size() ? rk[g] : 0;
    const std::size_t incoming = g > 0 ? rk[g - 1] : 0;
    const std::size_t b = c.groups[g].dimension - outgoing - incoming;
    const int degree = c.groups[g].degree;
    if (b) out.betti[degree] = b;
    out.euler += degree % 2 ? -static_cast<std::int64_t>(b) : static_cast<std::int64_t>(b);
  }
  return out;
}

HomologyResult graded_homology(const ChainComplex& c) {
  const std::size_t groups = c.groups.size();
  // Columns of each chain group split by quantum degree.
  std::vector<std::map<int, std::vector<std::size_t>>> by_q(groups);
  for (std::size_t g = 0; g < groups; ++g) {
    const int degree = c.groups[g].degree;
    for (std::size_t i = 0; i < c.groups[g].dimension; ++i) by_q[g][c.q_degree(degree, i)].push_back(i);
  }
  for (std::size_t g = 0; g + 1 < groups; ++g) {
    const int degree = c.groups[g].degree;
    const ExactLinearMap& dm = c.differentials[g];
    for (std::size_t col = 0; col < dm.cols(); ++col) {
      const int q = c.q_degree(degree, col);
      for (const auto& e : dm.column(col)) {
        if (c.q_degree(degree + 1, e.row) != q) {
          throw Error(ErrorKind::not_graded,
                      "differential at degree " + std::to_string(degree) + " does not preserve the quantum grading",
                      std::to_string(degree));
        }
      }
    }
  }

  struct Task {
    std::size_t group;
    int q;
    std::size_t rank = 0;
  };
  std::vector<Task> tasks;
  for (std::size_t g = 0; g + 1 < groups; ++g) {
    for (const auto& [q, cols] : by_q[g]) tasks.push_back({g, q});
  }
  const auto task_count = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < task_count; ++k) {
    Task& t = tasks[static_cast<std::size_t>(k)];
    t.rank = rank_of_columns(c.differentials[t.group], by_q[t.group].at(t.q));
  }
  std::map<std::pair<std::size_t, int>, std::size_t> rank_of;
  for (const auto& t : tasks) rank_of[{t.group, t.q}] = t.rank;
  auto lookup = [&](std::size_t g, int q) {
    auto it = rank_of.find({g, q});
    return it == rank_of.end() ? std::size_t{0} : it->second;
  };

  HomologyResult out;
  out.qtable.emplace();
  for (std::size_t g = 0; g < groups; ++g) {
    const int degree = c.groups[g].degree;
    for (const auto& [q, cols] : by_q[g]) {
      const std::size_t b = cols.size() - lookup(g, q) - (g > 0 ? lookup(g - 1, q) : 0);
      if (!b) continue;
      (*out.qtable)[{degree, q}] = b;
      out.betti[degree] += b;
      out.euler += degree % 2 ? -static_cast<std::int64_t>(b) : static_cast<std::int64_t>(b);
    }
  }
  return out;
}

LaurentPoly graded_euler(const HomologyResult& h) {
  if (!h.qtable) throw Error(ErrorKind::not_graded, "homology carries no quantum grading");
  LaurentPoly out;
  for (const auto& [key, dim] : *h.qtable) {
    const auto [degree, q] = key;
    out.add(q, degree % 2 ? -static_cast<std::int64_t>(dim) : static_cast<std::int64_t>(dim));
  }
  return out;
}

std::int64_t chain_euler(const ChainComplex& c) {
  std::int64_t total = 0;
  for (const auto& g : c.groups) {
    total += g.degree % 2 ? -static_cast<std::int64_t>(g.dimension) : static_cast<std::int64_t>(g.dimension);
  }
  return total;
}

HomologyResult betti_with_reversed_anchor(const VirtualLinkDiagram& d, const TheoryParams& th,
                                          const OrientationConvention& convention) {
  return homology(build_complex(d, th, convention));
}

HomologyResult betti_with_reversed_anchor(const VirtualLinkDiagram& d, const TheoryParams& th, State state,
                                          int circle_index) {
  const Smoothing sm = smooth(d, state);
  if (circle_index < 0 || circle_index >= sm.k()) {
    throw Error(ErrorKind::invalid_config, "no circle " + std::to_string(circle_index) + " in this state");
  }
  OrientationConvention conv;
  conv.flip(state, sm.circles[static_cast<std::size_t>(circle_index)].id);
  return betti_with_reversed_anchor(d, th, conv);
}

}  // namespace vlh

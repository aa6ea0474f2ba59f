#include "vlh/smoothing.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <stdexcept>

#include "vlh/error.hpp"

namespace vlh {

namespace {
constexpr int kMaxCrossings = 62;
}

int popcount(State s) { return std::popcount(s); }

std::string state_string(State s, int n) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int j = 1; j <= n; ++j) {
    if (state_bit(s, n, j)) out[static_cast<std::size_t>(j - 1)] = '1';
  }
  return out;
}

State parse_state(std::string_view bits) {
  if (bits.size() > kMaxCrossings) throw Error(ErrorKind::length_mismatch, "state too long");
  State s = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') {
      throw Error(ErrorKind::bad_syntax, "state strings use only 0 and 1", std::to_string(i));
    }
    s = (s << 1) | static_cast<State>(bits[i] == '1');
  }
  return s;
}

DiagramArcs::DiagramArcs(const VirtualLinkDiagram& d) : n_minus_(d.n_minus()) {
  if (d.crossing_count() > kMaxCrossings) {
    throw Error(ErrorKind::invalid_config, "diagrams are limited to 62 crossings");
  }
  crossings_.resize(static_cast<std::size_t>(d.crossing_count()));
  for (auto& c : crossings_) c = {-1, -1, -1, -1, 0};
  int base = 0;
  for (const auto& component : d.components()) {
    const int len = static_cast<int>(component.size());
    if (len == 0) {
      loop_arcs_.push_back(base);
      ++base;
      continue;
    }
    for (int i = 0; i < len; ++i) {
      const Passage& p = component[static_cast<std::size_t>(i)];
      const int out_end = 2 * (base + i);
      const int in_end = 2 * (base + (i - 1 + len) % len) + 1;
      CrossingEnds& e = crossings_[static_cast<std::size_t>(p.crossing - 1)];
      e.sign = p.sign;
      if (p.over) {
        e.over_in = in_end;
        e.over_out = out_end;
      } else {
        e.under_in = in_end;
        e.under_out = out_end;
      }
    }
    base += len;
  }
  arc_count_ = base;
}

DiagramArcs::Pairing DiagramArcs::pairing(int crossing, bool one_smoothing) const {
  const CrossingEnds& e = ends(crossing);
  // The A-smoothing (0) of a positive crossing follows the orientation; for a
  // negative crossing the oriented resolution is the B-smoothing (1).
  const bool oriented = one_smoothing == (e.sign < 0);
  if (oriented) return {{{e.over_out, e.under_in}, {e.over_in, e.under_out}}};
  return {{{e.over_out, e.under_out}, {e.over_in, e.under_in}}};
}

int Smoothing::index_of(int circle_id) const {
  auto it = std::lower_bound(circles.begin(), circles.end(), circle_id,
                             [](const Circle& c, int id) { return c.id < id; });
  return it != circles.end() && it->id == circle_id ? static_cast<int>(it - circles.begin()) : -1;
}

Smoothing smooth(const DiagramArcs& arcs, State state) {
  const int n = arcs.crossing_count();
  const std::size_t half_edges = 2 * static_cast<std::size_t>(arcs.arc_count());
  std::vector<int> junction(half_edges, -1);
  for (int j = 1; j <= n; ++j) {
    for (const auto& [p, q] : arcs.pairing(j, state_bit(state, n, j))) {
      junction[static_cast<std::size_t>(p)] = q;
      junction[static_cast<std::size_t>(q)] = p;
    }
  }
  for (int a : arcs.loop_arcs()) {
    junction[static_cast<std::size_t>(2 * a)] = 2 * a + 1;
    junction[static_cast<std::size_t>(2 * a + 1)] = 2 * a;
  }

  Smoothing sm;
  sm.state = state;
  sm.crossings = n;
  sm.arc_circle.assign(static_cast<std::size_t>(arcs.arc_count()), -1);
  sm.arc_direction.assign(static_cast<std::size_t>(arcs.arc_count()), 0);
  for (int start = 0; start < static_cast<int>(half_edges); start += 2) {
    if (sm.arc_circle[static_cast<std::size_t>(start / 2)] >= 0) continue;
    const int index = static_cast<int>(sm.circles.size());
    Circle circle{start, {}};
    int current = start;
    while (true) {
      const int other = current ^ 1;
      const auto arc = static_cast<std::size_t>(current / 2);
      circle.half_edges.push_back(current);
      circle.half_edges.push_back(other);
      sm.arc_circle[arc] = index;
      sm.arc_direction[arc] = (current & 1) ? -1 : 1;
      const int next = junction[static_cast<std::size_t>(other)];
      if (next == start) break;
      current = next;
    }
    sm.circles.push_back(std::move(circle));
  }
  return sm;
}

Smoothing smooth(const VirtualLinkDiagram& d, State state) { return smooth(DiagramArcs(d), state); }

Smoothing smooth(const VirtualLinkDiagram& d, std::string_view bits) {
  if (static_cast<int>(bits.size()) != d.crossing_count()) {
    throw Error(ErrorKind::length_mismatch,
                "state has " + std::to_string(bits.size()) + " bits for " +
                    std::to_string(d.crossing_count()) + " crossings");
  }
  return smooth(d, parse_state(bits));
}

Circle normalized(Circle c) {
  if (c.half_edges.empty()) return c;
  auto min_it = std::min_element(c.half_edges.begin(), c.half_edges.end());
  std::rotate(c.half_edges.begin(), min_it, c.half_edges.end());
  c.id = c.half_edges.front();
  return c;
}

std::vector<Smoothing> smooth_all(const DiagramArcs& arcs) {
  const std::int64_t count = std::int64_t{1} << arcs.crossing_count();
  std::vector<Smoothing> out(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t s = 0; s < count; ++s) {
    out[static_cast<std::size_t>(s)] = smooth(arcs, static_cast<State>(s));
  }
  return out;
}

void OrientationConvention::flip(State state, int circle_id) {
  auto key = std::make_pair(state, circle_id);
  if (!flips_.erase(key)) flips_.insert(key);
}

bool OrientationConvention::flipped(State state, int circle_id) const {
  return !flips_.empty() && flips_.count({state, circle_id}) > 0;
}

std::string_view to_string(SaddleKind kind) {
  switch (kind) {
    case SaddleKind::merge: return "merge";
    case SaddleKind::split: return "split";
    case SaddleKind::single_cycle: return "single_cycle";
  }
  return "?";
}

namespace {

std::vector<int> affected_circles(const Smoothing& sm, const DiagramArcs::CrossingEnds& e) {
  std::vector<int> out{sm.circle_of_half_edge(e.over_in), sm.circle_of_half_edge(e.over_out),
                       sm.circle_of_half_edge(e.under_in), sm.circle_of_half_edge(e.under_out)};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Reference direction of an arc: canonical traversal, reversed when the
// convention flips its circle.
int reference_direction(const Smoothing& sm, const OrientationConvention& conv, int arc) {
  const auto a = static_cast<std::size_t>(arc);
  const int dir = sm.arc_direction[a];
  const int circle = sm.arc_circle[a];
  return conv.flipped(sm.state, sm.circles[static_cast<std::size_t>(circle)].id) ? -dir : dir;
}

// Whether an oriented curve crosses into the crossing disc at half-edge h.
bool enters_disc(int h, int arc_dir) { return ((h & 1) == 1) == (arc_dir > 0); }

// Compares a proposed orientation (direction per arc) of a target circle with
// its reference orientation. The comparison must be uniform along the circle.
template <class Induced>
bool orientation_mismatch(const Smoothing& to, const OrientationConvention& conv, int circle,
                          Induced induced) {
  const Circle& c = to.circles[static_cast<std::size_t>(circle)];
  std::optional<bool> mismatch;
  for (std::size_t i = 0; i < c.half_edges.size(); i += 2) {
    const int arc = c.half_edges[i] / 2;
    const bool m = induced(arc) != reference_direction(to, conv, arc);
    if (mismatch && *mismatch != m) {
      throw std::logic_error("saddle does not induce a coherent orientation");
    }
    mismatch = m;
  }
  return mismatch.value_or(false);
}

}  // namespace

SaddleDescriptor classify_saddle(const DiagramArcs& arcs, const Smoothing& from, const Smoothing& to,
                                 const OrientationConvention& conv) {
  const int n = arcs.crossing_count();
  const State diff = from.state ^ to.state;
  if (std::popcount(diff) != 1 || (to.state & diff) != diff) {
    throw Error(ErrorKind::not_cube_edge,
                state_string(from.state, n) + " -> " + state_string(to.state, n) + " is not a cube edge");
  }
  SaddleDescriptor sd;
  sd.from = from.state;
  sd.to = to.state;
  sd.crossing = n - std::countr_zero(diff);
  sd.sign_exponent = sd.crossing == 1 ? 0 : std::popcount(to.state >> (n - sd.crossing + 1));

  const auto& ends = arcs.ends(sd.crossing);
  sd.from_circles = affected_circles(from, ends);
  sd.to_circles = affected_circles(to, ends);

  auto from_dir = [&](int arc) { return reference_direction(from, conv, arc); };
  auto entering = [&](int h) { return enters_disc(h, from_dir(h / 2)); };
  const auto joined = arcs.pairing(sd.crossing, true);

  if (sd.from_circles.size() == 2 && sd.to_circles.size() == 1) {
    sd.kind = SaddleKind::merge;
    const bool coherent = entering(joined[0].first) != entering(joined[0].second);
    const int second = sd.from_circles[1];
    Merge m;
    m.twist_in = {false, !coherent};
    m.twist_out = orientation_mismatch(to, conv, sd.to_circles[0], [&](int arc) {
      const bool reversed = !coherent && from.arc_circle[static_cast<std::size_t>(arc)] == second;
      return reversed ? -from_dir(arc) : from_dir(arc);
    });
    sd.cobordism = m;
  } else if (sd.from_circles.size() == 1 && sd.to_circles.size() == 2) {
    sd.kind = SaddleKind::split;
    if (entering(joined[0].first) == entering(joined[0].second)) {
      throw std::logic_error("split saddle with incoherent band");
    }
    Split s;
    for (std::size_t i = 0; i < 2; ++i) {
      s.twist_out[i] = orientation_mismatch(to, conv, sd.to_circles[i], from_dir);
    }
    sd.cobordism = s;
  } else if (sd.from_circles.size() == 1 && sd.to_circles.size() == 1) {
    sd.kind = SaddleKind::single_cycle;
    sd.cobordism = SingleCycle{};
  } else {
    throw std::logic_error("saddle touches an unexpected number of circles");
  }

  for (int c = 0; c < from.k(); ++c) {
    if (std::binary_search(sd.from_circles.begin(), sd.from_circles.end(), c)) continue;
    const int id = from.circles[static_cast<std::size_t>(c)].id;
    const int target = to.index_of(id);
    if (target < 0) throw std::logic_error("circle away from the saddle vanished");
    const int arc = id / 2;
    sd.carried.push_back({c, target, from_dir(arc) != reference_direction(to, conv, arc)});
  }
  return sd;
}

SaddleDescriptor classify_saddle(const VirtualLinkDiagram& d, State s, State t,
                                 const OrientationConvention& conv) {
  const DiagramArcs arcs(d);
  const int n = d.crossing_count();
  if (n < 64 && ((s >> n) != 0 || (t >> n) != 0)) {
    throw Error(ErrorKind::length_mismatch, "state wider than the crossing count");
  }
  return classify_saddle(arcs, smooth(arcs, s), smooth(arcs, t), conv);
}

std::vector<SaddleDescriptor> cube_edges(const VirtualLinkDiagram& d, const OrientationConvention& conv) {
  const DiagramArcs arcs(d);
  const int n = d.crossing_count();
  const auto smoothings = smooth_all(arcs);
  std::vector<SaddleDescriptor> edges;
  for (State s = 0; s < smoothings.size(); ++s) {
    for (int j = 1; j <= n; ++j) {
      if (state_bit(s, n, j)) continue;
      edges.push_back(classify_saddle(arcs, smoothings[s], smoothings[with_bit(s, n, j)], conv));
    }
  }
  return edges;
}

}  // namespace vlh

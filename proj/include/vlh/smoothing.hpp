#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vlh/diagram.hpp"
#include "vlh/tqft.hpp"

namespace vlh {

/// A state of the cube: crossing j (1-based) of an n-crossing diagram is bit
/// n - j, so numeric order on states is lexicographic order on bit strings.
using State = std::uint64_t;

inline bool state_bit(State s, int n, int crossing) { return (s >> (n - crossing)) & 1u; }
inline State with_bit(State s, int n, int crossing) { return s | (State{1} << (n - crossing)); }
int popcount(State s);
std::string state_string(State s, int n);
/// Throws BadSyntax on characters other than '0'/'1'.
State parse_state(std::string_view bits);

/// Arcs and crossing neighbourhoods derived from a Gauss code. Arc a runs
/// from one passage to the next along its component; its half-edges are
/// 2a (tail) and 2a + 1 (head). An empty component is a single arc whose
/// head is joined to its own tail.
class DiagramArcs {
 public:
  struct CrossingEnds {
    int over_in, over_out, under_in, under_out;
    int sign;
  };
  using Pairing = std::array<std::pair<int, int>, 2>;

  explicit DiagramArcs(const VirtualLinkDiagram& d);

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int arc_count() const { return arc_count_; }
  int n_minus() const { return n_minus_; }
  const CrossingEnds& ends(int crossing) const { return crossings_.at(static_cast<std::size_t>(crossing - 1)); }
  /// Half-edge pairs joined by the 0- (A) or 1- (B) smoothing.
  Pairing pairing(int crossing, bool one_smoothing) const;
  const std::vector<int>& loop_arcs() const { return loop_arcs_; }

 private:
  int arc_count_ = 0;
  int n_minus_ = 0;
  std::vector<CrossingEnds> crossings_;
  std::vector<int> loop_arcs_;
};

struct Circle {
  int id = 0;                   // minimal half-edge on the circle
  std::vector<int> half_edges;  // traversal order, starting at id
};

/// The circles of one state. Circles are sorted by id; the canonical
/// orientation of a circle runs forward along its minimal arc.
struct Smoothing {
  State state = 0;
  int crossings = 0;
  std::vector<Circle> circles;
  std::vector<int> arc_circle;               // circle index of each arc
  std::vector<std::int8_t> arc_direction;    // +1: traversal runs tail -> head

  int r() const { return popcount(state); }
  int k() const { return static_cast<int>(circles.size()); }
  int circle_of_half_edge(int h) const { return arc_circle[static_cast<std::size_t>(h / 2)]; }
  /// Index of the circle with the given id, or -1.
  int index_of(int circle_id) const;
};

Smoothing smooth(const DiagramArcs& arcs, State state);
/// Throws LengthMismatch if `bits.size()` differs from the crossing count.
Smoothing smooth(const VirtualLinkDiagram& d, std::string_view bits);
Smoothing smooth(const VirtualLinkDiagram& d, State state);

/// Rotates a circle's half-edge list to start at its minimal element.
Circle normalized(Circle c);

/// All 2^n smoothings in state order; OpenMP over states.
std::vector<Smoothing> smooth_all(const DiagramArcs& arcs);

/// Per-state overrides of the canonical circle orientations.
class OrientationConvention {
 public:
  void flip(State state, int circle_id);
  bool flipped(State state, int circle_id) const;
  bool empty() const { return flips_.empty(); }

 private:
  std::set<std::pair<State, int>> flips_;
};

enum class SaddleKind { merge, split, single_cycle };
std::string_view to_string(SaddleKind kind);

struct SaddleDescriptor {
  State from = 0, to = 0;
  int crossing = 0;  // j, the crossing in the changing disc
  SaddleKind kind = SaddleKind::merge;
  std::vector<int> from_circles;  // affected circle indices in the source, ascending
  std::vector<int> to_circles;    // affected circle indices in the target, ascending
  ElementaryCobordism cobordism;
  /// Circles away from the changing disc: (source index, target index, twist).
  struct Carried {
    int from, to;
    bool twist;
  };
  std::vector<Carried> carried;
  int sign_exponent = 0;  // number of 1-smoothings among crossings 1..j-1
};

SaddleDescriptor classify_saddle(const DiagramArcs& arcs, const Smoothing& from, const Smoothing& to,
                                 const OrientationConvention& convention = {});
/// Throws NotCubeEdge unless t = s plus one 1-smoothing.
SaddleDescriptor classify_saddle(const VirtualLinkDiagram& d, State s, State t,
                                 const OrientationConvention& convention = {});

/// All n * 2^(n-1) edges, ordered by source state then crossing.
std::vector<SaddleDescriptor> cube_edges(const VirtualLinkDiagram& d,
                                         const OrientationConvention& convention = {});

}  // namespace vlh

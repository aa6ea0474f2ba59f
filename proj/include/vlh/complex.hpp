#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "vlh/algebra.hpp"
#include "vlh/diagram.hpp"
#include "vlh/jones.hpp"
#include "vlh/smoothing.hpp"
#include "vlh/tqft.hpp"

namespace vlh {

/// The state space of one smoothing inside a chain group.
struct Summand {
  State state = 0;
  std::vector<int> circles;  // circle ids in canonical order
  std::size_t offset = 0;    // first basis index inside the chain group

  std::size_t dimension() const { return std::size_t{1} << circles.size(); }
};

struct ChainGroup {
  int degree = 0;
  std::vector<Summand> summands;  // states in increasing order
  std::size_t dimension = 0;
};

/// C^i = direct sum over states with r(s) = i + n-, for i = -n- .. n+.
/// differentials[i - min_degree] maps C^i to C^(i+1).
struct ChainComplex {
  Field field;
  int crossings = 0;
  int n_plus = 0;
  int n_minus = 0;
  std::vector<ChainGroup> groups;
  std::vector<ExactLinearMap> differentials;

  int min_degree() const { return -n_minus; }
  int max_degree() const { return n_plus; }
  const ChainGroup& group(int degree) const;
  const ExactLinearMap& differential(int degree) const;
  std::vector<std::size_t> dimensions() const;

  /// Degree and summand index holding a state.
  std::pair<int, std::size_t> locate(State s) const;
  /// Quantum degree of a basis vector: (#1 - #x) + r(s) + n+ - 2 n-.
  int q_degree(int degree, std::size_t index) const;
};

/// Builds every differential, concurrently over source states, and checks
/// d o d = 0. Throws DSquaredNonzero naming the first offending face.
ChainComplex build_complex(const VirtualLinkDiagram& d, const TheoryParams& th,
                           const OrientationConvention& convention = {});

/// Serial construction from cube_edges, elementary_map and tensor_extend.
ChainComplex build_complex_reference(const VirtualLinkDiagram& d, const TheoryParams& th,
                                     const OrientationConvention& convention = {});

/// The (s, t) block of the differential, rows indexed by the basis of t.
ExactLinearMap differential_block(const ChainComplex& c, State s, State t);

struct HomologyResult {
  std::map<int, std::size_t> betti;  // nonzero entries only
  std::optional<std::map<std::pair<int, int>, std::size_t>> qtable;
  std::int64_t euler = 0;
};

HomologyResult homology(const ChainComplex& c);

/// Splits each chain group by quantum degree. Throws NotGraded if some
/// differential entry changes the quantum degree.
HomologyResult graded_homology(const ChainComplex& c);

/// sum_i (-1)^i q^j qtable[i, j]. Requires a graded result.
LaurentPoly graded_euler(const HomologyResult& h);

/// sum_i (-1)^i dim C^i.
std::int64_t chain_euler(const ChainComplex& c);

/// Homology with the reference orientation of some circles reversed.
HomologyResult betti_with_reversed_anchor(const VirtualLinkDiagram& d, const TheoryParams& th,
                                          const OrientationConvention& convention);
/// Reverses circle `circle_index` of state `state` only.
HomologyResult betti_with_reversed_anchor(const VirtualLinkDiagram& d, const TheoryParams& th,
                                          State state, int circle_index);

}  // namespace vlh

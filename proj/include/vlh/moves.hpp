#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "vlh/diagram.hpp"

namespace vlh {

/// Insertion point: before passage `position` of `component`
/// (position == length appends).
struct Site {
  int component = 0;
  int position = 0;
};

struct KinkVariant {
  bool over_first = true;
  int sign = 1;
};

/// The over strand gains "O a s, O b -s"; the under strand gains the two
/// under passages in the same order, or reversed for antiparallel strands.
struct BigonVariant {
  int sign = 1;
  bool same_order = true;
};

/// Adds a kink with the new label n + 1. Throws InvalidSite.
VirtualLinkDiagram apply_r1(const VirtualLinkDiagram& d, Site site, KinkVariant variant = {});
/// Pushes one strand across another, adding labels n + 1 and n + 2. The two
/// sites must differ. Throws InvalidSite.
VirtualLinkDiagram apply_r2(const VirtualLinkDiagram& d, Site over_site, Site under_site,
                            BigonVariant variant = {});

/// Removes the kink at `label`; labels above it shift down. Throws
/// PatternNotFound unless its two passages are cyclically adjacent.
VirtualLinkDiagram inverse_r1(const VirtualLinkDiagram& d, int label);
/// Removes the bigon formed by crossings `a` and `b`. Throws PatternNotFound
/// unless the signs are opposite and both the over and the under passages
/// are cyclically adjacent.
VirtualLinkDiagram inverse_r2(const VirtualLinkDiagram& d, int a, int b);

std::vector<int> r1_candidates(const VirtualLinkDiagram& d);
std::vector<std::pair<int, int>> r2_candidates(const VirtualLinkDiagram& d);

struct RandomMove {
  VirtualLinkDiagram result;
  std::string description;
};

/// One random R1/R2 move or inverse move. Forward moves that would push the
/// crossing count above `max_crossings` are skipped while an inverse move is
/// available.
RandomMove random_move(const VirtualLinkDiagram& d, std::mt19937_64& rng, int max_crossings);

}  // namespace vlh

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vlh/tqft.hpp"

namespace vlh {

/// Exact rank by sparse column reduction: arithmetic mod p for prime fields,
/// fraction-free integer elimination (columns cleared of denominators and
/// kept primitive) for the rationals.
std::size_t rank(const ExactLinearMap& m);

/// Dense textbook Gaussian elimination on Scalars. Slow; kept as a reference.
std::size_t rank_reference(const ExactLinearMap& m);

/// Ranks of several maps, computed concurrently.
std::vector<std::size_t> ranks(std::span<const ExactLinearMap> maps);

/// Rank of the submatrix with the given columns (rows are left unrestricted).
std::size_t rank_of_columns(const ExactLinearMap& m, std::span<const std::size_t> columns);

}  // namespace vlh

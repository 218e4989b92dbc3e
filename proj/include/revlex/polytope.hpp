#pragma once

#include <cstdint>
#include <vector>

#include "revlex/configuration.hpp"

namespace revlex {

/// A facet of conv(A), described by the lattice heights of the columns above
/// it: heights[i] = psi(u_i) where psi is the linear functional vanishing on
/// the facet, nonnegative on A, and mapping the lattice ZA onto Z.
struct FacetHeights {
  std::vector<std::int64_t> heights;

  /// Columns lying on the facet, as a bitmask over generator indices.
  std::uint64_t on_facet() const;
  std::int64_t width() const;
};

/// Every facet of conv(A), by exact double description over the integers.
/// Facets come out sorted by their height vectors. A single-column
/// configuration has no facets. Throws Error on int64 overflow.
std::vector<FacetHeights> facets(const Configuration& config);

}  // namespace revlex

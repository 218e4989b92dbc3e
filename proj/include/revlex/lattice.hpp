#pragma once

#include <cstdint>
#include <vector>

#include "revlex/configuration.hpp"
#include "revlex/exponent.hpp"

namespace revlex {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

/// Rank over Q of the matrix whose rows are `rows`.
std::size_t integer_rank(IntMatrix rows);

/// A Z-basis of {v in Z^cols : a v = 0}. The basis comes from a unimodular
/// row reduction of [a^T | I], so it spans the full integer kernel, and is
/// then size-reduced pairwise. Throws Error on int64 overflow.
IntMatrix integer_kernel(const IntMatrix& a, std::size_t cols);

/// Integer kernel of the exponent matrix of a configuration.
struct LatticeBasis {
  std::size_t ambient = 0;
  std::vector<ExponentVector> vectors;
};

/// Basis of ker_Z(A); rank n - rank(A), every vector of coordinate sum 0.
LatticeBasis kernel_lattice(const Configuration& config);

}  // namespace revlex

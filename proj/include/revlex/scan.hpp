#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "revlex/binomial.hpp"
#include "revlex/groebner.hpp"
#include "revlex/order.hpp"
#include "revlex/parallel.hpp"

namespace revlex {

/// Returns the offending element of a reduced basis, or nullopt if the
/// basis is acceptable.
using BasisCheck = std::function<std::optional<Binomial>(const GroebnerBasis&)>;

/// Offending element: first basis element of degree > 2.
std::optional<Binomial> first_non_quadratic(const GroebnerBasis& gb);
/// Offending element: first basis element whose initial is not squarefree.
std::optional<Binomial> first_non_squarefree_initial(const GroebnerBasis& gb);

struct ScanOutcome {
  bool passed = true;
  /// Set iff !passed.
  std::optional<VariableOrdering> witness_ordering;
  std::optional<Binomial> witness_element;
  /// Reduced bases computed up to the reported failure. Speculative work by
  /// other threads is left out, so the count depends only on the input and
  /// the thread count.
  std::size_t groebner_computations = 0;
  /// Orderings checked (sampled/brute force) or cones of orderings sharing
  /// one reduced basis (exhaustive).
  std::size_t regions = 0;
};

/// Checks the revlex reduced basis of (generators) under every one of the
/// n! variable orderings.
///
/// Orderings are grouped into cones: a set of precedence constraints whose
/// linear extensions all orient every element of one reduced basis the
/// same way, and hence share that basis. A cone is split on the first
/// element whose smallest variable is not yet forced. Stops at the first
/// failing ordering in depth-first order, which is independent of the
/// thread count.
ScanOutcome scan_all_revlex(std::span<const Binomial> generators, std::size_t n,
                            const BasisCheck& check, Parallelism par = {});

/// Reference implementation: one reduced basis per permutation, in
/// lexicographic permutation order. Serial.
ScanOutcome scan_all_revlex_brute_force(std::span<const Binomial> generators,
                                        std::size_t n, const BasisCheck& check);

/// Checks the listed orderings; reports the failure with the smallest
/// index.
ScanOutcome scan_revlex_orderings(std::span<const Binomial> generators,
                                  std::span<const VariableOrdering> orderings,
                                  const BasisCheck& check, Parallelism par = {});

/// `count` orderings drawn by seeded uniform shuffles.
std::vector<VariableOrdering> sample_orderings(std::size_t n, std::size_t count,
                                               std::uint64_t seed);

}  // namespace revlex

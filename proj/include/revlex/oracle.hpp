#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revlex/configuration.hpp"
#include "revlex/parallel.hpp"

namespace revlex {

/// layers[m] holds every sum of m columns, sorted and deduplicated.
struct SemigroupLayers {
  std::vector<std::vector<ExponentVector>> layers;

  bool contains(std::size_t m, const ExponentVector& a) const;
};

inline constexpr std::size_t kDefaultOracleCap = 4;
inline constexpr std::size_t kDefaultLayerLimit = 2'000'000;

/// Layers 0..cap by dynamic programming over the degree. Throws Error if
/// cap < 1 or a layer grows past `layer_limit` elements.
SemigroupLayers semigroup_elements(const Configuration& config, std::size_t cap,
                                   std::size_t layer_limit = kDefaultLayerLimit);

struct IntersectionGenerator {
  std::size_t degree = 0;
  ExponentVector element;

  friend bool operator==(const IntersectionGenerator&, const IntersectionGenerator&) = default;
  friend auto operator<=>(const IntersectionGenerator&, const IntersectionGenerator&) = default;
};

/// Minimal generators of degree <= cap of the ideal (u_i) ∩ (u_j) of K[A],
/// sorted by degree, then by exponent vector.
std::vector<IntersectionGenerator> intersection_min_gens(const SemigroupLayers& layers,
                                                         const Configuration& config,
                                                         std::size_t i, std::size_t j);
std::vector<IntersectionGenerator> intersection_min_gens(const Configuration& config,
                                                         std::size_t i, std::size_t j,
                                                         std::size_t cap);

enum class OracleVerdict { yes_up_to_cap, no };

std::string to_string(OracleVerdict v);
OracleVerdict parse_oracle_verdict(std::string_view text);

struct OracleWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  IntersectionGenerator generator;

  friend bool operator==(const OracleWitness&, const OracleWitness&) = default;
};

struct OracleResult {
  OracleVerdict verdict = OracleVerdict::yes_up_to_cap;
  std::size_t cap = kDefaultOracleCap;
  /// First pair (lexicographically) with a minimal generator of degree >= 3,
  /// and its smallest such generator.
  std::optional<OracleWitness> witness;

  friend bool operator==(const OracleResult&, const OracleResult&) = default;
};

struct OracleOptions {
  std::size_t cap = kDefaultOracleCap;
  std::size_t layer_limit = kDefaultLayerLimit;
  Parallelism par;
};

/// "no" iff some (u_i) ∩ (u_j) has a minimal generator of degree 3..cap.
/// A "yes" is only a statement about degrees up to the cap. Throws Error
/// if cap < 3.
OracleResult oracle_strongly_koszul(const Configuration& config,
                                    const OracleOptions& options = {});

}  // namespace revlex

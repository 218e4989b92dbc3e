#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "revlex/binomial.hpp"
#include "revlex/configuration.hpp"
#include "revlex/groebner.hpp"
#include "revlex/order.hpp"
#include "revlex/parallel.hpp"

namespace revlex {

/// Outcome of one pairwise test. Indices are 0-based, i < j.
struct PairEvidence {
  std::size_t i = 0;
  std::size_t j = 0;
  VariableOrdering ordering;
  bool passed = true;
  /// A minimal generator of the initial ideal, divisible by the second
  /// smallest variable, of degree >= 3. Present iff !passed.
  std::optional<ExponentVector> witness;

  friend bool operator==(const PairEvidence&, const PairEvidence&) = default;
};

enum class KoszulVerdict { certified_yes, no, inconclusive };

std::string to_string(KoszulVerdict v);
KoszulVerdict parse_koszul_verdict(std::string_view text);

struct KoszulReport {
  KoszulVerdict verdict = KoszulVerdict::certified_yes;
  /// In pair order (0,1), (0,2), ..., cut after the first failure when the
  /// configuration is squarefree.
  std::vector<PairEvidence> pair_evidence;
  bool squarefree = false;
  std::vector<Binomial> flagged_squares;
  std::vector<std::string> notes;
  /// Reduced bases computed for the pair checks (the toric ideal itself is
  /// not counted).
  std::size_t groebner_computations = 0;

  friend bool operator==(const KoszulReport&, const KoszulReport&) = default;
};

/// x_j < x_i < {x_k : u_i + u_k - u_j is a column, k != i, j} < the rest,
/// each block ascending by index. Throws Error if i == j or out of range.
VariableOrdering converse_ordering(const Configuration& config, std::size_t i,
                                   std::size_t j);

/// Computes the revlex basis of I_A (given by any generating set, usually
/// toric_ideal's output) under `ordering` and inspects the minimal
/// generators of the initial ideal divisible by the second smallest
/// variable. The two smallest variables must be {i, j}.
PairEvidence pair_check(std::span<const Binomial> toric_generators, std::size_t i,
                        std::size_t j, const VariableOrdering& ordering);

/// Same, computing I_A first.
PairEvidence pair_check(const Configuration& config, std::size_t i, std::size_t j,
                        const VariableOrdering& ordering);

/// Runs pair_check under converse_ordering for every pair i < j. A failure
/// is conclusive only for squarefree input, which is also the only case
/// that stops early.
KoszulReport decide_strongly_koszul(const Configuration& config, Parallelism par = {});
KoszulReport decide_strongly_koszul(const Configuration& config,
                                    std::span<const Binomial> toric_generators,
                                    Parallelism par = {});

enum class ScanMode { exhaustive, sample };

std::string to_string(ScanMode m);

struct UniversalOptions {
  ScanMode mode = ScanMode::exhaustive;
  std::size_t sample_count = 1000;
  std::uint64_t seed = 0;
  /// Largest n accepted in exhaustive mode.
  std::size_t cap = 8;
  Parallelism par;
};

struct UniversalResult {
  bool holds = true;
  ScanMode mode = ScanMode::exhaustive;
  std::optional<VariableOrdering> witness_ordering;
  std::optional<Binomial> witness_element;
  std::size_t groebner_computations = 0;

  friend bool operator==(const UniversalResult&, const UniversalResult&) = default;
};

/// Whether the revlex reduced basis is quadratic under every (exhaustive)
/// or every sampled variable ordering.
UniversalResult universal_revlex_quadratic(const Configuration& config,
                                           const UniversalOptions& options = {});

enum class CompressedMode { certified, exhaustive, sample };

std::string to_string(CompressedMode m);
CompressedMode parse_compressed_mode(std::string_view text);

enum class ExhaustiveMethod {
  /// Lattice width of every facet of conv(A); exact for all n! orderings.
  facet_width,
  /// One reduced basis per cone of orderings (see scan_all_revlex).
  ordering_scan,
};

struct CompressedOptions {
  CompressedMode mode = CompressedMode::exhaustive;
  ExhaustiveMethod method = ExhaustiveMethod::facet_width;
  std::size_t sample_count = 1000;
  std::uint64_t seed = 0;
  /// Largest n accepted in exhaustive mode.
  std::size_t cap = 8;
  Parallelism par;
};

struct CompressedResult {
  bool compressed = true;
  CompressedMode mode = CompressedMode::exhaustive;
  std::optional<VariableOrdering> witness_ordering;
  /// Reduced basis element whose initial monomial (plus) is a
  /// non-squarefree minimal generator under witness_ordering.
  std::optional<Binomial> witness_element;
  std::size_t groebner_computations = 0;

  friend bool operator==(const CompressedResult&, const CompressedResult&) = default;
};

/// Whether every revlex initial ideal of I_A is squarefree.
///
/// Certified mode needs a certified-yes strong Koszul verdict (taken from
/// `certificate`, or computed when it is null) and then answers by the
/// absence of relations x_i^2 - x_j x_k. Throws Error when there is no
/// certificate, or when exhaustive mode is asked for more than `cap`
/// variables.
///
/// The facet-width method rests on two facts. A revlex initial ideal is
/// squarefree iff the pulling triangulation it induces (smallest variable
/// pulled first) is unimodular. Pulling u_v first cones v over the facets
/// missing it, so all pulling triangulations are unimodular iff every column
/// has lattice height 0 or 1 over every facet. A column of height >= 2 gives
/// a witness: any ordering with that variable smallest.
CompressedResult is_compressed(const Configuration& config,
                               const CompressedOptions& options = {},
                               const KoszulReport* certificate = nullptr);

/// Ordering with `smallest` first and the remaining variables ascending.
VariableOrdering ordering_with_smallest(std::size_t n, std::size_t smallest);

}  // namespace revlex

#pragma once

#include <vector>

#include "revlex/binomial.hpp"
#include "revlex/configuration.hpp"
#include "revlex/groebner.hpp"

namespace revlex {

struct ToricOptions {
  /// Variables to saturate by, in order; empty means 0, 1, ..., n-1.
  std::vector<int> saturation_order;
};

struct ToricStats {
  std::size_t lattice_rank = 0;
  std::size_t buchberger_runs = 0;
};

/// I_A as its reduced Groebner basis under graded revlex with
/// x_1 < ... < x_n (the canonical form used for ideal comparisons).
///
/// Starts from the binomials of a kernel lattice basis, then for each
/// variable x_k computes a revlex basis with x_k smallest and divides every
/// element by its largest power of x_k, which saturates by x_k.
GroebnerBasis toric_ideal(const Configuration& config,
                          const ToricOptions& options = {},
                          ToricStats* stats = nullptr);

/// The canonical order: graded revlex, x_1 < ... < x_n.
MonomialOrder canonical_order(std::size_t n);

/// True iff x^plus and x^minus map to the same monomial of K[T].
bool vanishes_on(const Configuration& config, const Binomial& g);

struct QuadraticRelations {
  /// Every x_p x_q - x_r x_s in I_A, {p,q} != {r,s}, each once.
  std::vector<Binomial> binomials;
  /// The members of the shape x_i^2 - x_j x_k, written with the square as
  /// plus.
  std::vector<Binomial> flagged_squares;
};

/// All degree-2 binomials of I_A, enumerated directly from column sums.
QuadraticRelations degree2_binomials(const Configuration& config);

/// Mutual reduction: every element of `a` reduces to zero modulo an exact
/// Groebner basis of (b) and vice versa. Works for any pure difference
/// binomials, prime or not.
bool generate_same_ideal(std::span<const Binomial> a, std::span<const Binomial> b);

}  // namespace revlex

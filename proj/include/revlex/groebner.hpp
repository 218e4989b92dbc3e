#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "revlex/binomial.hpp"
#include "revlex/order.hpp"

namespace revlex {

/// Reduced Groebner basis of a pure-difference binomial ideal.
///
/// Elements are oriented (plus is the initial monomial) and sorted by
/// initial monomial, ascending under the order.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(MonomialOrder order, std::vector<Binomial> elements)
      : order_(std::move(order)), elements_(std::move(elements)) {}

  const MonomialOrder& order() const noexcept { return order_; }
  std::span<const Binomial> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }

  /// True iff every element has degree 2.
  bool is_quadratic() const noexcept;
  /// Largest element degree; 0 for the empty basis.
  std::int64_t max_degree() const noexcept;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.order_ == b.order_ && a.elements_ == b.elements_;
  }

 private:
  MonomialOrder order_;
  std::vector<Binomial> elements_;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped_coprime = 0;
  std::size_t pairs_skipped_chain = 0;
  std::size_t zero_reductions = 0;
  std::size_t elements_added = 0;
};

/// Normal form of the monomial x^m modulo `basis` (elements oriented under
/// the order that produced them, plus = initial).
ExponentVector normal_form(ExponentVector m, std::span<const Binomial> basis);

/// Normal form of g: both monomials fully reduced, the common factor
/// cancelled. nullopt when both sides reach the same monomial.
std::optional<Binomial> reduce(const Binomial& g, std::span<const Binomial> basis,
                               const MonomialOrder& order);

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first, ties by index pair) and both Buchberger criteria. Every new
/// element has its common monomial factor cancelled. The cancelled element
/// still lies in any toric ideal containing the generators, so the result is
/// the reduced basis of an ideal between (generators) and that toric ideal;
/// it is exactly the toric ideal's basis when the generators generate it.
GroebnerBasis buchberger(std::span<const Binomial> generators,
                         const MonomialOrder& order,
                         BuchbergerStats* stats = nullptr);

/// G(in(I)): the initial monomials of a reduced basis, ascending.
std::vector<ExponentVector> initial_ideal_min_gens(const GroebnerBasis& gb);

namespace detail {

/// Binomial head - tail that may carry a common monomial factor.
struct RawBinomial {
  ExponentVector head;
  ExponentVector tail;
};

/// buchberger() without cancelling common factors in the final tail
/// reduction. With `cancel_common_factors` false no factor is ever
/// cancelled and the output is the reduced basis of the ideal the
/// generators span, prime or not.
std::vector<RawBinomial> buchberger_raw(std::span<const RawBinomial> generators,
                                        const MonomialOrder& order,
                                        BuchbergerStats* stats = nullptr,
                                        bool cancel_common_factors = true);

}  // namespace detail

/// Post-hoc check that every S-pair of `gb` reduces to zero.
bool s_pairs_reduce_to_zero(const GroebnerBasis& gb);

/// Post-hoc check of reducedness: initials pairwise non-divisible and no
/// tail divisible by any initial.
bool is_reduced(const GroebnerBasis& gb);

}  // namespace revlex

#pragma once

#include <optional>
#include <span>
#include <string>

#include "revlex/exponent.hpp"
#include "revlex/order.hpp"

namespace revlex {

/// Pure-difference binomial x^plus - x^minus in K[x_1..x_n].
///
/// Construction cancels the common monomial factor, so plus and minus always
/// have disjoint supports. Both sides are nonnegative and of equal degree.
class Binomial {
 public:
  /// Throws Error on length mismatch, negative entries, unequal degrees, or
  /// when plus == minus (the zero binomial).
  Binomial(ExponentVector plus, ExponentVector minus);

  /// Like the constructor, but returns nullopt for x^a - x^a.
  static std::optional<Binomial> make(ExponentVector plus, ExponentVector minus);

  /// x^{v+} - x^{v-} for an integer vector v with coordinate sum 0.
  static Binomial from_lattice_vector(const ExponentVector& v);

  const ExponentVector& plus() const noexcept { return plus_; }
  const ExponentVector& minus() const noexcept { return minus_; }
  std::size_t num_vars() const noexcept { return plus_.size(); }
  std::int64_t degree() const noexcept { return plus_.degree(); }

  /// plus - minus as an integer vector.
  ExponentVector lattice_vector() const;
  /// Support of both monomials as a bitmask (n <= 64).
  std::uint64_t support_mask() const noexcept {
    return plus_.support_mask() | minus_.support_mask();
  }

  /// Same binomial with plus being the initial monomial under `order`.
  Binomial oriented(const MonomialOrder& order) const;
  /// Same binomial up to sign.
  bool same_up_to_sign(const Binomial& other) const noexcept;
  Binomial negated() const { return Binomial(minus_, plus_, Trusted{}); }

  std::string to_string(std::span<const std::string> names = {}) const;

  friend bool operator==(const Binomial&, const Binomial&) = default;
  friend auto operator<=>(const Binomial&, const Binomial&) = default;

 private:
  struct Trusted {};
  Binomial(ExponentVector plus, ExponentVector minus, Trusted)
      : plus_(std::move(plus)), minus_(std::move(minus)) {}

  ExponentVector plus_;
  ExponentVector minus_;
};

/// The larger monomial of g under `order`.
const ExponentVector& initial_monomial(const MonomialOrder& order,
                                       const Binomial& g);

}  // namespace revlex

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace revlex {

/// Raised for every malformed input or violated precondition in the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Exponent = std::int32_t;

/// Dense exponent vector of a (Laurent) monomial.
///
/// Used both for monomials in the x-variables of K[X] (entries must then be
/// nonnegative) and for monomials in the t-variables of K[T], where negative
/// entries describe Laurent monomials. All arithmetic is overflow checked.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t length) : entries_(length, 0) {}
  explicit ExponentVector(std::vector<Exponent> entries)
      : entries_(std::move(entries)) {}
  ExponentVector(std::initializer_list<Exponent> entries) : entries_(entries) {}

  /// x_var as an exponent vector of the given length.
  static ExponentVector unit(std::size_t length, std::size_t var);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  Exponent operator[](std::size_t i) const { return entries_[i]; }
  Exponent& operator[](std::size_t i) { return entries_[i]; }

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  std::span<const Exponent> entries() const noexcept { return entries_; }

  /// Sum of the entries.
  std::int64_t degree() const noexcept;
  bool is_nonnegative() const noexcept;
  bool is_zero() const noexcept;
  /// True iff every entry is 0 or 1.
  bool is_squarefree() const noexcept;
  /// Bitmask of the support; only meaningful for length <= 64.
  std::uint64_t support_mask() const noexcept;

  ExponentVector& operator+=(const ExponentVector& other);
  ExponentVector& operator-=(const ExponentVector& other);

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&,
                          const ExponentVector&) = default;

 private:
  std::vector<Exponent> entries_;
};

ExponentVector operator+(ExponentVector a, const ExponentVector& b);
ExponentVector operator-(ExponentVector a, const ExponentVector& b);
/// Scalar multiple; used for powers of monomials.
ExponentVector operator*(Exponent k, const ExponentVector& a);

/// Componentwise a <= b, i.e. x^a divides x^b.
bool divides(const ExponentVector& a, const ExponentVector& b);
ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
ExponentVector gcd(const ExponentVector& a, const ExponentVector& b);
/// x^b / x^a; throws Error unless divides(a, b).
ExponentVector quotient(const ExponentVector& b, const ExponentVector& a);

/// Renders x^a as "x1*x5^2" using `names` (or x1..xn when empty); "1" for
/// the unit monomial.
std::string format_monomial(const ExponentVector& a,
                            std::span<const std::string> names = {});

/// Default variable names x1..xn.
std::vector<std::string> default_names(std::size_t n);

namespace detail {
void require_same_length(const ExponentVector& a, const ExponentVector& b);
Exponent checked_add(Exponent a, Exponent b);
Exponent checked_sub(Exponent a, Exponent b);
}  // namespace detail

}  // namespace revlex

#include "revlex/exponent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace revlex {

namespace detail {

void require_same_length(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) {
    throw Error("exponent vectors have different lengths (" +
                std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                ")");
  }
}

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out{};
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error("exponent overflow in addition");
  }
  return out;
}

Exponent checked_sub(Exponent a, Exponent b) {
  Exponent out{};
  if (__builtin_sub_overflow(a, b, &out)) {
    throw Error("exponent overflow in subtraction");
  }
  return out;
}

}  // namespace detail

ExponentVector ExponentVector::unit(std::size_t length, std::size_t var) {
  if (var >= length) throw Error("variable index out of range");
  ExponentVector e(length);
  e.entries_[var] = 1;
  return e;
}

std::int64_t ExponentVector::degree() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

bool ExponentVector::is_nonnegative() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](Exponent e) { return e >= 0; });
}

bool ExponentVector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](Exponent e) { return e == 0; });
}

bool ExponentVector::is_squarefree() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](Exponent e) { return e == 0 || e == 1; });
}

std::uint64_t ExponentVector::support_mask() const noexcept {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < entries_.size() && i < 64; ++i) {
    if (entries_[i] != 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& other) {
  detail::require_same_length(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] = detail::checked_add(entries_[i], other.entries_[i]);
  }
  return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& other) {
  detail::require_same_length(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] = detail::checked_sub(entries_[i], other.entries_[i]);
  }
  return *this;
}

ExponentVector operator+(ExponentVector a, const ExponentVector& b) {
  a += b;
  return a;
}

ExponentVector operator-(ExponentVector a, const ExponentVector& b) {
  a -= b;
  return a;
}

ExponentVector operator*(Exponent k, const ExponentVector& a) {
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (__builtin_mul_overflow(k, a[i], &out[i])) {
      throw Error("exponent overflow in scalar multiplication");
    }
  }
  return out;
}

bool divides(const ExponentVector& a, const ExponentVector& b) {
  detail::require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  detail::require_same_length(a, b);
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

ExponentVector gcd(const ExponentVector& a, const ExponentVector& b) {
  detail::require_same_length(a, b);
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

ExponentVector quotient(const ExponentVector& b, const ExponentVector& a) {
  if (!divides(a, b)) {
    throw Error("quotient of non-divisible monomials");
  }
  return b - a;
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

std::string format_monomial(const ExponentVector& a,
                            std::span<const std::string> names) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!first) out << '*';
    first = false;
    if (i < names.size()) {
      out << names[i];
    } else {
      out << 'x' << (i + 1);
    }
    if (a[i] != 1) out << '^' << a[i];
  }
  if (first) return "1";
  return out.str();
}

}  // namespace revlex

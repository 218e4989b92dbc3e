#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "revlex/exponent.hpp"

namespace revlex {

/// A total ordering of the variables x_1..x_n, listed from smallest to
/// largest. Indices are 0-based internally; x_{k+1} is variable k.
class VariableOrdering {
 public:
  VariableOrdering() = default;
  /// Throws Error unless `smallest_first` is a permutation of 0..n-1.
  explicit VariableOrdering(std::vector<int> smallest_first);

  /// x_1 < x_2 < ... < x_n.
  static VariableOrdering identity(std::size_t n);

  /// Parses "x4<x3<x2<x1" against `names`. Every name must appear exactly
  /// once.
  static VariableOrdering parse(std::string_view text,
                                std::span<const std::string> names);

  std::size_t size() const noexcept { return perm_.size(); }
  /// Variable at position `pos` (0 = smallest).
  int at(std::size_t pos) const { return perm_[pos]; }
  /// Position of `var` (0 = smallest).
  int rank(int var) const { return rank_[var]; }
  std::span<const int> smallest_first() const noexcept { return perm_; }

  std::string to_string(std::span<const std::string> names = {}) const;

  friend bool operator==(const VariableOrdering& a, const VariableOrdering& b) {
    return a.perm_ == b.perm_;
  }

 private:
  std::vector<int> perm_;
  std::vector<int> rank_;
};

enum class OrderKind { graded_revlex, graded_lex };

std::string_view to_string(OrderKind kind);
/// Accepts "revlex" and "lex".
OrderKind parse_order_kind(std::string_view text);

/// Graded monomial order induced by a variable ordering.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(VariableOrdering ordering, OrderKind kind)
      : ordering_(std::move(ordering)), kind_(kind) {}

  static MonomialOrder revlex(VariableOrdering ordering) {
    return {std::move(ordering), OrderKind::graded_revlex};
  }

  const VariableOrdering& ordering() const noexcept { return ordering_; }
  OrderKind kind() const noexcept { return kind_; }
  std::size_t num_vars() const noexcept { return ordering_.size(); }

  /// Degree first. Graded revlex then finds the smallest variable where the
  /// exponents differ and calls the monomial with the larger exponent there
  /// the smaller one; graded lex looks at the largest differing variable and
  /// calls the monomial with the larger exponent the larger one.
  std::strong_ordering compare(const ExponentVector& a,
                               const ExponentVector& b) const;

  /// Same as compare() with both degrees already known.
  std::strong_ordering compare(const ExponentVector& a, std::int64_t deg_a,
                               const ExponentVector& b,
                               std::int64_t deg_b) const;

  bool less(const ExponentVector& a, const ExponentVector& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.ordering_ == b.ordering_;
  }

 private:
  VariableOrdering ordering_;
  OrderKind kind_ = OrderKind::graded_revlex;
};

}  // namespace revlex

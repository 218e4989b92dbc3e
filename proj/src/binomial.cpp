#include "revlex/binomial.hpp"

namespace revlex {

namespace {

void validate(const ExponentVector& plus, const ExponentVector& minus) {
  detail::require_same_length(plus, minus);
  if (!plus.is_nonnegative() || !minus.is_nonnegative()) {
    throw Error("binomial monomials must have nonnegative exponents");
  }
  if (plus.degree() != minus.degree()) {
    throw Error("binomial is not homogeneous: degrees " +
                std::to_string(plus.degree()) + " and " +
                std::to_string(minus.degree()));
  }
}

}  // namespace

std::optional<Binomial> Binomial::make(ExponentVector plus,
                                       ExponentVector minus) {
  validate(plus, minus);
  if (plus == minus) return std::nullopt;
  const auto common = gcd(plus, minus);
  plus -= common;
  minus -= common;
  return Binomial(std::move(plus), std::move(minus), Trusted{});
}

Binomial::Binomial(ExponentVector plus, ExponentVector minus) {
  auto b = make(std::move(plus), std::move(minus));
  if (!b) throw Error("zero binomial (both monomials are equal)");
  *this = std::move(*b);
}

Binomial Binomial::from_lattice_vector(const ExponentVector& v) {
  ExponentVector plus(v.size());
  ExponentVector minus(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > 0) {
      plus[i] = v[i];
    } else {
      minus[i] = detail::checked_sub(0, v[i]);
    }
  }
  return Binomial(std::move(plus), std::move(minus));
}

ExponentVector Binomial::lattice_vector() const { return plus_ - minus_; }

Binomial Binomial::oriented(const MonomialOrder& order) const {
  if (order.less(plus_, minus_)) return negated();
  return *this;
}

bool Binomial::same_up_to_sign(const Binomial& other) const noexcept {
  return (plus_ == other.plus_ && minus_ == other.minus_) ||
         (plus_ == other.minus_ && minus_ == other.plus_);
}

std::string Binomial::to_string(std::span<const std::string> names) const {
  return format_monomial(plus_, names) + " - " + format_monomial(minus_, names);
}

const ExponentVector& initial_monomial(const MonomialOrder& order,
                                       const Binomial& g) {
  return order.less(g.plus(), g.minus()) ? g.minus() : g.plus();
}

}  // namespace revlex

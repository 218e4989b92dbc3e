#include "revlex/order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace revlex {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

VariableOrdering::VariableOrdering(std::vector<int> smallest_first)
    : perm_(std::move(smallest_first)), rank_(perm_.size(), -1) {
  for (std::size_t pos = 0; pos < perm_.size(); ++pos) {
    const int v = perm_[pos];
    if (v < 0 || static_cast<std::size_t>(v) >= perm_.size()) {
      throw Error("variable ordering: index " + std::to_string(v + 1) +
                  " out of range");
    }
    if (rank_[v] != -1) {
      throw Error("variable ordering: x" + std::to_string(v + 1) +
                  " listed twice");
    }
    rank_[v] = static_cast<int>(pos);
  }
}

VariableOrdering VariableOrdering::identity(std::size_t n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  return VariableOrdering(std::move(perm));
}

VariableOrdering VariableOrdering::parse(std::string_view text,
                                         std::span<const std::string> names) {
  std::vector<int> perm;
  std::vector<bool> seen(names.size(), false);
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto stop = text.find('<', start);
    const auto token =
        trim(text.substr(start, stop == std::string_view::npos
                                    ? std::string_view::npos
                                    : stop - start));
    if (token.empty()) throw Error("ordering: empty variable name");
    const auto it = std::find(names.begin(), names.end(), token);
    if (it == names.end()) {
      throw Error("ordering: unknown variable '" + std::string(token) + "'");
    }
    const auto var = static_cast<std::size_t>(it - names.begin());
    if (seen[var]) {
      throw Error("ordering: variable '" + std::string(token) +
                  "' appears more than once");
    }
    seen[var] = true;
    perm.push_back(static_cast<int>(var));
    if (stop == std::string_view::npos) break;
    start = stop + 1;
  }
  if (perm.size() != names.size()) {
    throw Error("ordering: lists " + std::to_string(perm.size()) + " of " +
                std::to_string(names.size()) + " variables");
  }
  return VariableOrdering(std::move(perm));
}

std::string VariableOrdering::to_string(std::span<const std::string> names) const {
  std::ostringstream out;
  for (std::size_t pos = 0; pos < perm_.size(); ++pos) {
    if (pos) out << '<';
    const auto v = static_cast<std::size_t>(perm_[pos]);
    if (v < names.size()) {
      out << names[v];
    } else {
      out << 'x' << (v + 1);
    }
  }
  return out.str();
}

std::string_view to_string(OrderKind kind) {
  return kind == OrderKind::graded_revlex ? "revlex" : "lex";
}

OrderKind parse_order_kind(std::string_view text) {
  if (text == "revlex") return OrderKind::graded_revlex;
  if (text == "lex") return OrderKind::graded_lex;
  throw Error("unknown order kind '" + std::string(text) +
              "' (expected revlex or lex)");
}

std::strong_ordering MonomialOrder::compare(const ExponentVector& a,
                                            const ExponentVector& b) const {
  return compare(a, a.degree(), b, b.degree());
}

std::strong_ordering MonomialOrder::compare(const ExponentVector& a,
                                            std::int64_t deg_a,
                                            const ExponentVector& b,
                                            std::int64_t deg_b) const {
  if (a.size() != ordering_.size() || b.size() != ordering_.size()) {
    throw Error("monomial order on " + std::to_string(ordering_.size()) +
                " variables applied to vectors of length " +
                std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
  if (deg_a != deg_b) return deg_a <=> deg_b;
  const auto perm = ordering_.smallest_first();
  if (kind_ == OrderKind::graded_revlex) {
    for (const int v : perm) {
      if (a[v] != b[v]) {
        return a[v] > b[v] ? std::strong_ordering::less
                           : std::strong_ordering::greater;
      }
    }
  } else {
    for (auto it = perm.rbegin(); it != perm.rend(); ++it) {
      const int v = *it;
      if (a[v] != b[v]) {
        return a[v] > b[v] ? std::strong_ordering::greater
                           : std::strong_ordering::less;
      }
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace revlex

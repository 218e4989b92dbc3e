// Shared helpers for the test binaries: seeded generators and reference
// implementations that do not go through the library's fast paths.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "revlex/builders.hpp"
#include "revlex/configuration.hpp"
#include "revlex/graph.hpp"
#include "revlex/groebner.hpp"
#include "revlex/order.hpp"

namespace revlex::testing {

inline ExponentVector ev(std::vector<Exponent> e) { return ExponentVector(std::move(e)); }

/// n x 1 monomial from a map of 1-based variable -> exponent.
inline ExponentVector mono(std::size_t n, std::initializer_list<std::pair<int, int>> powers) {
  ExponentVector e(n);
  for (auto [var, p] : powers) e[static_cast<std::size_t>(var - 1)] += p;
  return e;
}

/// Random 0/1 configuration: `base` coordinates plus an appended 1, n
/// distinct columns (n is clamped to 2^base).
inline Configuration random_01_config(std::mt19937& rng, std::size_t base, std::size_t n) {
  n = std::min<std::size_t>(n, std::size_t{1} << base);
  std::vector<std::uint32_t> codes(std::size_t{1} << base);
  std::iota(codes.begin(), codes.end(), 0U);
  std::shuffle(codes.begin(), codes.end(), rng);
  codes.resize(n);
  std::sort(codes.begin(), codes.end());
  std::vector<ExponentVector> cols;
  for (auto code : codes) {
    ExponentVector c(base + 1);
    for (std::size_t k = 0; k < base; ++k) c[k] = static_cast<Exponent>((code >> k) & 1U);
    c[base] = 1;
    cols.push_back(std::move(c));
  }
  return Configuration(base + 1, std::move(cols));
}

/// Random homogeneous configuration with small entries: columns of length
/// `dim` with coordinate sum `degree`, possibly non-squarefree.
inline Configuration random_graded_config(std::mt19937& rng, std::size_t dim, Exponent degree,
                                          std::size_t n) {
  std::set<std::vector<Exponent>> seen;
  std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
  std::size_t attempts = 0;
  while (seen.size() < n && attempts++ < 1000) {
    std::vector<Exponent> c(dim, 0);
    for (Exponent k = 0; k < degree; ++k) ++c[pick(rng)];
    seen.insert(c);
  }
  std::vector<ExponentVector> cols;
  for (const auto& c : seen) cols.emplace_back(c);
  return Configuration(dim, std::move(cols));
}

inline VariableOrdering random_ordering(std::mt19937& rng, std::size_t n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return VariableOrdering(perm);
}

/// Textbook revlex/lex comparison written from the definition with the
/// variables listed from largest to smallest: for revlex the last nonzero
/// entry of a - b decides (negative means a is larger); for lex the first
/// nonzero entry decides (positive means a is larger).
inline int reference_compare(const ExponentVector& a, const ExponentVector& b,
                             const VariableOrdering& ordering, OrderKind kind) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  std::vector<int> diff;
  for (std::size_t pos = ordering.size(); pos-- > 0;) {
    const auto v = static_cast<std::size_t>(ordering.at(pos));
    diff.push_back(a[v] - b[v]);
  }
  if (kind == OrderKind::graded_revlex) {
    for (std::size_t k = diff.size(); k-- > 0;) {
      if (diff[k] != 0) return diff[k] < 0 ? 1 : -1;
    }
  } else {
    for (int d : diff) {
      if (d != 0) return d > 0 ? 1 : -1;
    }
  }
  return 0;
}

/// Plain Buchberger over binomials with +-1 coefficients: every S-pair,
/// no criteria, no cancellation of common factors, then the textbook
/// reduction to the reduced basis. Slow; for cross-checking only.
inline std::vector<std::pair<ExponentVector, ExponentVector>> reference_groebner(
    const std::vector<Binomial>& gens, const MonomialOrder& order) {
  using Raw = std::pair<ExponentVector, ExponentVector>;  // head, tail
  auto orient = [&](ExponentVector a, ExponentVector b) -> Raw {
    return order.less(a, b) ? Raw{b, a} : Raw{a, b};
  };
  auto nf = [&](ExponentVector m, const std::vector<Raw>& basis) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [h, t] : basis) {
        if (divides(h, m)) {
          m = m - h + t;
          changed = true;
          break;
        }
      }
    }
    return m;
  };
  std::vector<Raw> g;
  for (const auto& b : gens) g.push_back(orient(b.plus(), b.minus()));
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const auto l = lcm(g[i].first, g[j].first);
      auto a = nf(l - g[i].first + g[i].second, g);
      auto b = nf(l - g[j].first + g[j].second, g);
      if (a != b) g.push_back(orient(std::move(a), std::move(b)));
    }
  }
  // Minimal basis: drop elements whose head is divisible by another head.
  std::vector<Raw> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !divides(g[j].first, g[i].first)) continue;
      redundant = g[j].first != g[i].first || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  for (auto& [h, t] : minimal) t = nf(t, minimal);
  std::sort(minimal.begin(), minimal.end(),
            [&](const Raw& a, const Raw& b) { return order.less(a.first, b.first); });
  return minimal;
}

/// Every simple graph on d vertices (2^(d(d-1)/2) of them).
inline std::vector<SimpleGraph> all_graphs(std::size_t d) {
  std::vector<SimpleGraph::Edge> slots;
  for (std::size_t u = 0; u < d; ++u) {
    for (std::size_t v = u + 1; v < d; ++v) slots.emplace_back(int(u), int(v));
  }
  std::vector<SimpleGraph> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << slots.size()); ++code) {
    std::vector<SimpleGraph::Edge> edges;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if ((code >> k) & 1U) edges.push_back(slots[k]);
    }
    out.emplace_back(d, std::move(edges));
  }
  return out;
}

/// One representative per isomorphism class, by canonical adjacency codes
/// over all vertex permutations.
inline std::vector<SimpleGraph> graphs_up_to_isomorphism(std::size_t d) {
  std::map<std::uint64_t, SimpleGraph> classes;
  for (auto& g : all_graphs(d)) {
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = UINT64_MAX;
    do {
      std::uint64_t code = 0;
      std::size_t bitpos = 0;
      for (std::size_t u = 0; u < d; ++u) {
        for (std::size_t v = u + 1; v < d; ++v, ++bitpos) {
          if (g.adjacent(perm[u], perm[v])) code |= std::uint64_t{1} << bitpos;
        }
      }
      best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.emplace(best, std::move(g));
  }
  std::vector<SimpleGraph> out;
  for (auto& [code, g] : classes) out.push_back(std::move(g));
  return out;
}

/// Monomials of degree exactly `deg` in n variables.
inline std::vector<ExponentVector> monomials_of_degree(std::size_t n, Exponent deg) {
  std::vector<ExponentVector> out;
  ExponentVector cur(n);
  auto fill = [&](auto&& self, std::size_t var, Exponent left) -> void {
    if (var + 1 == n) {
      cur[var] = left;
      out.push_back(cur);
      return;
    }
    for (Exponent e = left; e >= 0; --e) {
      cur[var] = e;
      self(self, var + 1, left - e);
    }
  };
  fill(fill, 0, deg);
  return out;
}

}  // namespace revlex::testing

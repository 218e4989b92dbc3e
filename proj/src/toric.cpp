#include "revlex/toric.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "revlex/lattice.hpp"

namespace revlex {

namespace {

using detail::RawBinomial;

VariableOrdering with_smallest(std::size_t n, int var) {
  std::vector<int> perm;
  perm.reserve(n);
  perm.push_back(var);
  for (int v = 0; v < static_cast<int>(n); ++v) {
    if (v != var) perm.push_back(v);
  }
  return VariableOrdering(std::move(perm));
}

}  // namespace

MonomialOrder canonical_order(std::size_t n) {
  return MonomialOrder::revlex(VariableOrdering::identity(n));
}

GroebnerBasis toric_ideal(const Configuration& config, const ToricOptions& options,
                          ToricStats* stats) {
  const std::size_t n = config.num_gens();
  const auto lattice = kernel_lattice(config);
  if (stats) stats->lattice_rank = lattice.vectors.size();

  std::vector<RawBinomial> gens;
  for (const auto& v : lattice.vectors) {
    const auto g = Binomial::from_lattice_vector(v);
    gens.push_back({g.plus(), g.minus()});
  }

  std::vector<int> order = options.saturation_order;
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
  }
  for (const int var : order) {
    if (var < 0 || static_cast<std::size_t>(var) >= n) {
      throw Error("saturation order: variable index out of range");
    }
    if (gens.empty()) break;
    const auto pass_order = MonomialOrder::revlex(with_smallest(n, var));
    gens = detail::buchberger_raw(gens, pass_order);
    if (stats) ++stats->buchberger_runs;
    for (auto& g : gens) {
      const Exponent k = std::min(g.head[var], g.tail[var]);
      g.head[var] -= k;
      g.tail[var] -= k;
    }
  }

  std::vector<Binomial> saturated;
  saturated.reserve(gens.size());
  for (auto& g : gens) {
    if (auto b = Binomial::make(std::move(g.head), std::move(g.tail))) {
      saturated.push_back(std::move(*b));
    }
  }
  if (stats) ++stats->buchberger_runs;
  return buchberger(saturated, canonical_order(n));
}

bool vanishes_on(const Configuration& config, const Binomial& g) {
  return config.evaluate(g.plus()) == config.evaluate(g.minus());
}

QuadraticRelations degree2_binomials(const Configuration& config) {
  const std::size_t n = config.num_gens();
  // Column sums a_p + a_q, p <= q, grouped; std::map keeps the output order
  // independent of hashing.
  std::map<ExponentVector, std::vector<std::pair<std::size_t, std::size_t>>> sums;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p; q < n; ++q) {
      sums[config.column(p) + config.column(q)].emplace_back(p, q);
    }
  }
  auto monomial = [n](std::size_t p, std::size_t q) {
    ExponentVector e(n);
    e[p] += 1;
    e[q] += 1;
    return e;
  };
  std::vector<Binomial> flagged;
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Binomial>> keyed;
  for (const auto& [sum, group] : sums) {
    for (std::size_t a = 0; a < group.size(); ++a) {
      for (std::size_t b = a + 1; b < group.size(); ++b) {
        auto [p, q] = group[a];
        auto [r, s] = group[b];
        const bool a_square = p == q;
        const bool b_square = r == s;
        // Write a square first so flagged binomials read x_i^2 - x_j x_k.
        if (b_square && !a_square) {
          std::swap(p, r);
          std::swap(q, s);
        }
        Binomial g(monomial(p, q), monomial(r, s));
        if (a_square != b_square) flagged.push_back(g);
        keyed.push_back({group[a], std::move(g)});
      }
    }
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  QuadraticRelations out;
  for (auto& [key, g] : keyed) out.binomials.push_back(std::move(g));
  std::sort(flagged.begin(), flagged.end(), [](const Binomial& x, const Binomial& y) {
    return x.plus() > y.plus() || (x.plus() == y.plus() && x.minus() > y.minus());
  });
  out.flagged_squares = std::move(flagged);
  return out;
}

bool generate_same_ideal(std::span<const Binomial> a, std::span<const Binomial> b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  const auto order = canonical_order(a.front().num_vars());
  // Exact bases: cancelling common factors would compare saturations.
  auto exact = [&](std::span<const Binomial> gens) {
    std::vector<RawBinomial> raw;
    for (const auto& g : gens) raw.push_back({g.plus(), g.minus()});
    return detail::buchberger_raw(raw, order, nullptr, false);
  };
  auto normal_form_raw = [](ExponentVector m, const std::vector<RawBinomial>& basis) {
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& g : basis) {
        if (divides(g.head, m)) {
          m = m - g.head + g.tail;
          changed = true;
          break;
        }
      }
    }
    return m;
  };
  auto contained = [&](std::span<const Binomial> gens, const std::vector<RawBinomial>& basis) {
    return std::all_of(gens.begin(), gens.end(), [&](const Binomial& g) {
      return normal_form_raw(g.plus(), basis) == normal_form_raw(g.minus(), basis);
    });
  };
  return contained(a, exact(b)) && contained(b, exact(a));
}

}  // namespace revlex

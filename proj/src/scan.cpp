#include "revlex/scan.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>
#include <variant>

namespace revlex {

int Parallelism::resolved() const {
  if (threads > 0) return threads;
  if (const char* env = std::getenv(kThreadsEnv)) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return std::max(1, omp_get_max_threads());
}

std::optional<Binomial> first_non_quadratic(const GroebnerBasis& gb) {
  for (const auto& g : gb.elements()) {
    if (g.degree() != 2) return g;
  }
  return std::nullopt;
}

std::optional<Binomial> first_non_squarefree_initial(const GroebnerBasis& gb) {
  for (const auto& g : gb.elements()) {
    if (!g.plus().is_squarefree()) return g;
  }
  return std::nullopt;
}

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

// Precedence constraints on the variables: above[v] holds every variable
// forced to be larger than v. Kept transitively closed.
struct Cone {
  std::vector<Mask> above;

  explicit Cone(std::size_t n) : above(n, 0) {}

  bool forced_min(int u, Mask support) const {
    return ((support & ~bit(u)) & ~above[u]) == 0;
  }

  bool is_minimal_in(int u, Mask support) const {
    for (Mask rest = support & ~bit(u); rest != 0; rest &= rest - 1) {
      if (above[std::countr_zero(rest)] & bit(u)) return false;
    }
    return true;
  }

  // Adds u < w for every w in `larger`.
  void add_below(int u, Mask larger) {
    Mask closure = larger;
    for (Mask rest = larger; rest != 0; rest &= rest - 1) {
      closure |= above[std::countr_zero(rest)];
    }
    for (std::size_t x = 0; x < above.size(); ++x) {
      if (static_cast<int>(x) == u || (above[x] & bit(u))) above[x] |= closure;
    }
  }

  // Linear extension taking the smallest available index at each step.
  VariableOrdering greedy_extension() const {
    const std::size_t n = above.size();
    std::vector<int> perm;
    perm.reserve(n);
    Mask remaining = n == 64 ? ~Mask{0} : bit(static_cast<int>(n)) - 1;
    while (remaining != 0) {
      // Variables with no remaining predecessor.
      Mask blocked = 0;
      for (Mask rest = remaining; rest != 0; rest &= rest - 1) {
        blocked |= above[std::countr_zero(rest)];
      }
      const Mask available = remaining & ~blocked;
      const int v = std::countr_zero(available);
      perm.push_back(v);
      remaining &= ~bit(v);
    }
    return VariableOrdering(std::move(perm));
  }
};

struct Failure {
  VariableOrdering ordering;
  Binomial element;
};

struct Node {
  Cone cone;
  // Reduced basis under cone.greedy_extension(), when inherited from the
  // parent.
  std::optional<GroebnerBasis> basis;
};

struct Leaf {};
using Expansion = std::variant<Failure, Leaf, std::vector<Node>>;

struct Counters {
  std::size_t computations = 0;
  std::size_t regions = 0;

  Counters& operator+=(const Counters& o) {
    computations += o.computations;
    regions += o.regions;
    return *this;
  }
};

class ConeExplorer {
 public:
  ConeExplorer(std::span<const Binomial> generators, const BasisCheck& check)
      : generators_(generators), check_(check) {}

  Expansion expand(Node node, Counters& counters) const {
    const auto ordering = node.cone.greedy_extension();
    GroebnerBasis gb;
    if (node.basis) {
      gb = std::move(*node.basis);
    } else {
      gb = buchberger(generators_, MonomialOrder::revlex(ordering));
      ++counters.computations;
    }
    if (auto bad = check_(gb)) return Failure{ordering, std::move(*bad)};

    for (const auto& g : gb.elements()) {
      const Mask support = g.support_mask();
      bool forced = false;
      for (Mask rest = support; rest != 0 && !forced; rest &= rest - 1) {
        forced = node.cone.forced_min(std::countr_zero(rest), support);
      }
      if (forced) continue;
      // Split on which variable of the support comes first.
      const int tau_min = [&] {
        int best = -1;
        for (Mask rest = support; rest != 0; rest &= rest - 1) {
          const int v = std::countr_zero(rest);
          if (best < 0 || ordering.rank(v) < ordering.rank(best)) best = v;
        }
        return best;
      }();
      std::vector<Node> children;
      for (Mask rest = support; rest != 0; rest &= rest - 1) {
        const int u = std::countr_zero(rest);
        if (!node.cone.is_minimal_in(u, support)) continue;
        Node child{node.cone, std::nullopt};
        child.cone.add_below(u, support & ~bit(u));
        // The parent's ordering satisfies this child's constraints and is
        // still its greedy extension.
        if (u == tau_min) child.basis = gb;
        children.push_back(std::move(child));
      }
      return children;
    }
    ++counters.regions;
    return Leaf{};
  }

  std::optional<Failure> explore(Node node, Counters& counters) const {
    auto result = expand(std::move(node), counters);
    if (auto* f = std::get_if<Failure>(&result)) return std::move(*f);
    if (std::holds_alternative<Leaf>(result)) return std::nullopt;
    for (auto& child : std::get<std::vector<Node>>(result)) {
      if (auto f = explore(std::move(child), counters)) return f;
    }
    return std::nullopt;
  }

 private:
  std::span<const Binomial> generators_;
  const BasisCheck& check_;
};

void require_scan_size(std::size_t n) {
  if (n == 0 || n > 64) {
    throw Error("ordering scan: number of variables must be in 1..64");
  }
}

ScanOutcome finish(std::optional<Failure> failure, Counters counters) {
  ScanOutcome out;
  out.groebner_computations = counters.computations;
  out.regions = counters.regions;
  if (failure) {
    out.passed = false;
    out.witness_ordering = std::move(failure->ordering);
    out.witness_element = std::move(failure->element);
  }
  return out;
}

}  // namespace

ScanOutcome scan_all_revlex(std::span<const Binomial> generators, std::size_t n,
                            const BasisCheck& check, Parallelism par) {
  require_scan_size(n);
  ConeExplorer explorer(generators, check);
  const int threads = par.resolved();
  Counters counters;
  if (threads == 1) {
    auto failure = explorer.explore(Node{Cone(n), std::nullopt}, counters);
    return finish(std::move(failure), counters);
  }

  // Breadth-first expansion into a frontier kept in depth-first order, then
  // one serial depth-first search per frontier node.
  struct Item {
    std::optional<Node> node;
    std::optional<Failure> failure;
  };
  std::vector<Item> frontier;
  frontier.push_back({Node{Cone(n), std::nullopt}, std::nullopt});
  const std::size_t target = static_cast<std::size_t>(threads) * 8;
  bool grew = true;
  while (grew && frontier.size() < target) {
    grew = false;
    std::vector<Item> next;
    for (auto& item : frontier) {
      if (!item.node) {
        next.push_back(std::move(item));
        if (next.back().failure) break;
        continue;
      }
      auto result = explorer.expand(std::move(*item.node), counters);
      if (auto* f = std::get_if<Failure>(&result)) {
        next.push_back({std::nullopt, std::move(*f)});
        break;
      }
      if (std::holds_alternative<Leaf>(result)) continue;
      for (auto& child : std::get<std::vector<Node>>(result)) {
        next.push_back({std::move(child), std::nullopt});
      }
      grew = true;
    }
    frontier = std::move(next);
  }

  const auto count = static_cast<std::ptrdiff_t>(frontier.size());
  std::atomic<std::ptrdiff_t> first_failure{count};
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    if (frontier[k].failure) {
      first_failure = k;
      break;
    }
  }
  std::vector<std::optional<Failure>> results(frontier.size());
  // Per-item counts, so work done past the first failure is not reported
  // and the totals do not depend on scheduling.
  std::vector<Counters> item_counters(frontier.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    if (k > first_failure.load(std::memory_order_relaxed)) continue;
    if (frontier[k].failure) {
      results[k] = frontier[k].failure;
      continue;
    }
    results[k] = explorer.explore(std::move(*frontier[k].node), item_counters[k]);
    if (results[k]) {
      auto current = first_failure.load();
      while (k < current && !first_failure.compare_exchange_weak(current, k)) {
      }
    }
  }
  std::optional<Failure> failure;
  for (std::size_t k = 0; k < results.size() && !failure; ++k) {
    counters += item_counters[k];
    if (results[k]) failure = std::move(results[k]);
  }
  return finish(std::move(failure), counters);
}

ScanOutcome scan_all_revlex_brute_force(std::span<const Binomial> generators,
                                        std::size_t n, const BasisCheck& check) {
  require_scan_size(n);
  if (n > 10) throw Error("brute-force ordering scan is limited to 10 variables");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t computations = 0;
  do {
    VariableOrdering ordering(perm);
    const auto gb = buchberger(generators, MonomialOrder::revlex(ordering));
    ++computations;
    if (auto bad = check(gb)) {
      return finish(Failure{std::move(ordering), std::move(*bad)},
                    Counters{computations, computations});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return finish(std::nullopt, Counters{computations, computations});
}

ScanOutcome scan_revlex_orderings(std::span<const Binomial> generators,
                                  std::span<const VariableOrdering> orderings,
                                  const BasisCheck& check, Parallelism par) {
  const auto count = static_cast<std::ptrdiff_t>(orderings.size());
  const int threads = par.resolved();
  std::atomic<std::ptrdiff_t> first_failure{count};
  std::vector<std::optional<Binomial>> bad(orderings.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads) if (threads > 1)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    if (k > first_failure.load(std::memory_order_relaxed)) continue;
    bad[k] = check(buchberger(generators, MonomialOrder::revlex(orderings[k])));
    if (bad[k]) {
      auto current = first_failure.load();
      while (k < current && !first_failure.compare_exchange_weak(current, k)) {
      }
    }
  }
  std::optional<Failure> failure;
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    if (bad[k]) {
      failure = Failure{orderings[k], std::move(*bad[k])};
      break;
    }
  }
  // Orderings past the first failure may have been computed by other
  // threads; they are not counted.
  const std::size_t checked = failure ? static_cast<std::size_t>(first_failure.load()) + 1
                                      : orderings.size();
  return finish(std::move(failure), Counters{checked, checked});
}

std::vector<VariableOrdering> sample_orderings(std::size_t n, std::size_t count,
                                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<VariableOrdering> out;
  out.reserve(count);
  std::vector<int> perm(n);
  for (std::size_t k = 0; k < count; ++k) {
    std::iota(perm.begin(), perm.end(), 0);
    // Fisher-Yates with an explicit modulus so the sequence does not depend
    // on the standard library's distribution implementation.
    for (std::size_t i = n; i > 1; --i) {
      const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % i);
      std::uint64_t r = 0;
      do {
        r = rng();
      } while (r >= limit);
      std::swap(perm[i - 1], perm[r % i]);
    }
    out.emplace_back(perm);
  }
  return out;
}

}  // namespace revlex

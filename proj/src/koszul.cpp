#include "revlex/koszul.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "revlex/polytope.hpp"
#include "revlex/scan.hpp"
#include "revlex/toric.hpp"

namespace revlex {

std::string to_string(KoszulVerdict v) {
  switch (v) {
    case KoszulVerdict::certified_yes: return "certified-yes";
    case KoszulVerdict::no: return "no";
    case KoszulVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

KoszulVerdict parse_koszul_verdict(std::string_view text) {
  if (text == "certified-yes") return KoszulVerdict::certified_yes;
  if (text == "no") return KoszulVerdict::no;
  if (text == "inconclusive") return KoszulVerdict::inconclusive;
  throw Error("unknown verdict '" + std::string(text) + "'");
}

std::string to_string(ScanMode m) {
  return m == ScanMode::exhaustive ? "exhaustive" : "sample";
}

std::string to_string(CompressedMode m) {
  switch (m) {
    case CompressedMode::certified: return "certified";
    case CompressedMode::exhaustive: return "exhaustive";
    case CompressedMode::sample: return "sample";
  }
  return "?";
}

CompressedMode parse_compressed_mode(std::string_view text) {
  if (text == "certified") return CompressedMode::certified;
  if (text == "exhaustive") return CompressedMode::exhaustive;
  if (text == "sample") return CompressedMode::sample;
  throw Error("unknown compressed mode '" + std::string(text) +
              "' (expected certified, exhaustive or sample)");
}

VariableOrdering ordering_with_smallest(std::size_t n, std::size_t smallest) {
  if (smallest >= n) throw Error("variable index out of range");
  std::vector<int> perm{static_cast<int>(smallest)};
  for (std::size_t v = 0; v < n; ++v) {
    if (v != smallest) perm.push_back(static_cast<int>(v));
  }
  return VariableOrdering(std::move(perm));
}

namespace {

void require_pair(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw Error("generator index out of range");
  if (i == j) throw Error("pair indices must differ");
}

// Reduced bases keep pairwise non-divisible initials; checked anyway since a
// reported witness must be a minimal generator.
void require_minimal_generator(const GroebnerBasis& gb, const ExponentVector& m) {
  bool found = false;
  for (const auto& g : gb.elements()) {
    if (g.plus() == m) {
      found = true;
    } else if (divides(g.plus(), m)) {
      throw std::logic_error("witness " + format_monomial(m, default_names(m.size())) +
                             " is not a minimal generator");
    }
  }
  if (!found) throw std::logic_error("witness is not an initial monomial");
}

void require_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw Error("exhaustive mode: " + std::to_string(n) +
                " variables exceed the cap of " + std::to_string(cap));
  }
}

}  // namespace

VariableOrdering converse_ordering(const Configuration& config, std::size_t i,
                                   std::size_t j) {
  const std::size_t n = config.num_gens();
  require_pair(n, i, j);
  std::vector<int> perm{static_cast<int>(j), static_cast<int>(i)};
  std::vector<int> rest;
  const ExponentVector shift = config.column(i) - config.column(j);
  for (std::size_t k = 0; k < n; ++k) {
    if (k == i || k == j) continue;
    if (config.find_column(config.column(k) + shift)) {
      perm.push_back(static_cast<int>(k));
    } else {
      rest.push_back(static_cast<int>(k));
    }
  }
  perm.insert(perm.end(), rest.begin(), rest.end());
  return VariableOrdering(std::move(perm));
}

PairEvidence pair_check(std::span<const Binomial> toric_generators, std::size_t i,
                        std::size_t j, const VariableOrdering& ordering) {
  const std::size_t n = ordering.size();
  require_pair(n, i, j);
  if (n < 2) throw Error("pair check needs at least two variables");
  const auto a = static_cast<std::size_t>(ordering.at(0));
  const auto b = static_cast<std::size_t>(ordering.at(1));
  if (!((a == i && b == j) || (a == j && b == i))) {
    throw Error("pair check: the two smallest variables of the ordering must be x" +
                std::to_string(i + 1) + " and x" + std::to_string(j + 1));
  }
  PairEvidence ev{std::min(i, j), std::max(i, j), ordering, true, std::nullopt};
  const auto gb = buchberger(toric_generators, MonomialOrder::revlex(ordering));
  // Elements are sorted by initial, so the first hit is the smallest.
  for (const auto& g : gb.elements()) {
    if (g.plus()[b] > 0 && g.degree() != 2) {
      require_minimal_generator(gb, g.plus());
      ev.passed = false;
      ev.witness = g.plus();
      break;
    }
  }
  return ev;
}

PairEvidence pair_check(const Configuration& config, std::size_t i, std::size_t j,
                        const VariableOrdering& ordering) {
  if (ordering.size() != config.num_gens()) {
    throw Error("ordering has " + std::to_string(ordering.size()) +
                " variables, configuration has " + std::to_string(config.num_gens()));
  }
  const auto toric = toric_ideal(config);
  return pair_check(toric.elements(), i, j, ordering);
}

KoszulReport decide_strongly_koszul(const Configuration& config, Parallelism par) {
  const auto toric = toric_ideal(config);
  return decide_strongly_koszul(config, toric.elements(), par);
}

KoszulReport decide_strongly_koszul(const Configuration& config,
                                    std::span<const Binomial> toric_generators,
                                    Parallelism par) {
  const std::size_t n = config.num_gens();
  KoszulReport report;
  report.squarefree = config.is_squarefree();
  report.flagged_squares = degree2_binomials(config).flagged_squares;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  const auto count = static_cast<std::ptrdiff_t>(pairs.size());
  const bool stop_early = report.squarefree;
  const int threads = par.resolved();
  std::vector<std::optional<PairEvidence>> results(pairs.size());
  std::atomic<std::ptrdiff_t> first_failure{count};

  if (threads == 1) {
    for (std::ptrdiff_t k = 0; k < count; ++k) {
      const auto [i, j] = pairs[k];
      results[k] = pair_check(toric_generators, i, j, converse_ordering(config, i, j));
      if (!results[k]->passed && stop_early) {
        first_failure = k;
        break;
      }
    }
  } else {
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
      if (stop_early && k > first_failure.load(std::memory_order_relaxed)) continue;
      const auto [i, j] = pairs[k];
      results[k] = pair_check(toric_generators, i, j, converse_ordering(config, i, j));
      if (!results[k]->passed && stop_early) {
        auto current = first_failure.load();
        while (k < current && !first_failure.compare_exchange_weak(current, k)) {
        }
      }
    }
  }

  // Keep evidence up to the first conclusive failure, so the report does
  // not depend on how many threads ran past it.
  const std::ptrdiff_t last = stop_early ? std::min(first_failure.load(), count - 1) : count - 1;
  bool any_failed = false;
  for (std::ptrdiff_t k = 0; k <= last; ++k) {
    report.pair_evidence.push_back(std::move(*results[k]));
    any_failed = any_failed || !report.pair_evidence.back().passed;
  }
  report.groebner_computations = report.pair_evidence.size();

  if (!any_failed) {
    report.verdict = KoszulVerdict::certified_yes;
  } else if (report.squarefree) {
    report.verdict = KoszulVerdict::no;
  } else {
    report.verdict = KoszulVerdict::inconclusive;
    report.notes.push_back(
        "a pair failed under its converse ordering; for non-squarefree input this "
        "does not refute strong Koszulness and other orderings are not searched");
  }
  if (!report.squarefree && report.flagged_squares.empty()) {
    report.notes.push_back(
        "no relation x_i^2 - x_j x_k exists, but the columns are not 0/1, so the "
        "input is treated as non-squarefree");
  }
  return report;
}

UniversalResult universal_revlex_quadratic(const Configuration& config,
                                           const UniversalOptions& options) {
  const std::size_t n = config.num_gens();
  UniversalResult result;
  result.mode = options.mode;
  const auto toric = toric_ideal(config);
  ScanOutcome outcome;
  if (options.mode == ScanMode::exhaustive) {
    require_cap(n, options.cap);
    outcome = scan_all_revlex(toric.elements(), n, first_non_quadratic, options.par);
  } else {
    const auto orderings = sample_orderings(n, options.sample_count, options.seed);
    outcome = scan_revlex_orderings(toric.elements(), orderings, first_non_quadratic,
                                    options.par);
  }
  result.holds = outcome.passed;
  result.witness_ordering = std::move(outcome.witness_ordering);
  result.witness_element = std::move(outcome.witness_element);
  result.groebner_computations = outcome.groebner_computations;
  return result;
}

namespace {

struct Found {
  VariableOrdering ordering;
  Binomial element;
};

std::optional<Found> non_squarefree_under(std::span<const Binomial> gens,
                                          const VariableOrdering& ordering) {
  const auto gb = buchberger(gens, MonomialOrder::revlex(ordering));
  if (auto bad = first_non_squarefree_initial(gb)) {
    require_minimal_generator(gb, bad->plus());
    return Found{ordering, std::move(*bad)};
  }
  return std::nullopt;
}

void record(CompressedResult& result, std::optional<Found> found) {
  if (!found) return;
  result.compressed = false;
  result.witness_ordering = std::move(found->ordering);
  result.witness_element = std::move(found->element);
}

CompressedResult certified(const Configuration& config, const GroebnerBasis& toric,
                           const KoszulReport* certificate) {
  std::optional<KoszulReport> computed;
  if (certificate == nullptr) {
    computed = decide_strongly_koszul(config, toric.elements());
    certificate = &*computed;
  }
  if (certificate->verdict != KoszulVerdict::certified_yes) {
    throw Error("certified compressedness needs a certified-yes strong Koszul verdict, got " +
                to_string(certificate->verdict));
  }
  CompressedResult result;
  result.mode = CompressedMode::certified;
  if (certificate->flagged_squares.empty()) return result;

  // x_i^2 - x_j x_k with x_j smallest has initial x_i^2, which no linear
  // initial can divide.
  const auto& square = certificate->flagged_squares.front();
  std::size_t j = 0;
  while (square.minus()[j] == 0) ++j;
  const auto ordering = ordering_with_smallest(config.num_gens(), j);
  const auto gb = buchberger(toric.elements(), MonomialOrder::revlex(ordering));
  result.groebner_computations = 1;
  for (const auto& g : gb.elements()) {
    if (g.plus() == square.plus()) {
      require_minimal_generator(gb, g.plus());
      record(result, Found{ordering, g});
      return result;
    }
  }
  throw std::logic_error("flagged square is not an initial monomial");
}

CompressedResult by_facet_width(const Configuration& config, const GroebnerBasis& toric) {
  const std::size_t n = config.num_gens();
  CompressedResult result;
  std::uint64_t high = 0;
  for (const auto& f : facets(config)) {
    for (std::size_t v = 0; v < n; ++v) {
      if (f.heights[v] >= 2) high |= std::uint64_t{1} << v;
    }
  }
  for (std::size_t v = 0; v < n && result.compressed; ++v) {
    if (!((high >> v) & 1U)) continue;
    ++result.groebner_computations;
    record(result, non_squarefree_under(toric.elements(), ordering_with_smallest(n, v)));
  }
  if (high != 0 && result.compressed) {
    throw std::logic_error("a column of height >= 2 produced no non-squarefree initial");
  }
  return result;
}

}  // namespace

CompressedResult is_compressed(const Configuration& config,
                               const CompressedOptions& options,
                               const KoszulReport* certificate) {
  const std::size_t n = config.num_gens();
  const auto toric = toric_ideal(config);
  if (options.mode == CompressedMode::certified) {
    return certified(config, toric, certificate);
  }

  CompressedResult result;
  if (options.mode == CompressedMode::exhaustive) {
    require_cap(n, options.cap);
    if (options.method == ExhaustiveMethod::facet_width) {
      result = by_facet_width(config, toric);
      result.mode = CompressedMode::exhaustive;
      return result;
    }
  }
  ScanOutcome outcome;
  if (options.mode == CompressedMode::exhaustive) {
    outcome = scan_all_revlex(toric.elements(), n, first_non_squarefree_initial, options.par);
  } else {
    const auto orderings = sample_orderings(n, options.sample_count, options.seed);
    outcome = scan_revlex_orderings(toric.elements(), orderings,
                                    first_non_squarefree_initial, options.par);
  }
  result.mode = options.mode;
  result.compressed = outcome.passed;
  result.witness_ordering = std::move(outcome.witness_ordering);
  result.witness_element = std::move(outcome.witness_element);
  result.groebner_computations = outcome.groebner_computations;
  return result;
}

}  // namespace revlex

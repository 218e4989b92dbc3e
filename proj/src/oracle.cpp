#include "revlex/oracle.hpp"

#include <algorithm>
#include <atomic>

namespace revlex {

bool SemigroupLayers::contains(std::size_t m, const ExponentVector& a) const {
  if (m >= layers.size()) return false;
  return std::binary_search(layers[m].begin(), layers[m].end(), a);
}

SemigroupLayers semigroup_elements(const Configuration& config, std::size_t cap,
                                   std::size_t layer_limit) {
  if (cap < 1) throw Error("semigroup enumeration needs cap >= 1");
  SemigroupLayers out;
  out.layers.push_back({ExponentVector(config.dim_t())});
  for (std::size_t m = 1; m <= cap; ++m) {
    const auto& prev = out.layers.back();
    std::vector<ExponentVector> next;
    next.reserve(prev.size() * config.num_gens());
    for (const auto& a : prev) {
      for (const auto& u : config.columns()) {
        next.push_back(a + u);
      }
      if (next.size() > 2 * layer_limit) {
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.size() > layer_limit) {
      throw Error("semigroup layer " + std::to_string(m) + " exceeds the limit of " +
                  std::to_string(layer_limit) + " elements; lower the cap");
    }
    out.layers.push_back(std::move(next));
  }
  return out;
}

std::vector<IntersectionGenerator> intersection_min_gens(const SemigroupLayers& layers,
                                                         const Configuration& config,
                                                         std::size_t i, std::size_t j) {
  const std::size_t n = config.num_gens();
  if (i >= n || j >= n) throw Error("generator index out of range");
  if (i == j) throw Error("pair indices must differ");
  const std::size_t cap = layers.layers.size() - 1;
  if (cap < 2) throw Error("intersection generators need cap >= 2");

  std::vector<IntersectionGenerator> out;
  std::vector<ExponentVector> previous;  // the intersection in degree m - 1
  for (std::size_t m = 1; m <= cap; ++m) {
    std::vector<ExponentVector> current;
    for (const auto& a : layers.layers[m]) {
      if (!layers.contains(m - 1, a - config.column(i))) continue;
      if (!layers.contains(m - 1, a - config.column(j))) continue;
      current.push_back(a);
      const bool generated = std::any_of(
          config.columns().begin(), config.columns().end(), [&](const ExponentVector& u) {
            return std::binary_search(previous.begin(), previous.end(), a - u);
          });
      if (!generated) out.push_back({m, a});
    }
    previous = std::move(current);
  }
  return out;
}

std::vector<IntersectionGenerator> intersection_min_gens(const Configuration& config,
                                                         std::size_t i, std::size_t j,
                                                         std::size_t cap) {
  if (cap < 2) throw Error("intersection generators need cap >= 2");
  return intersection_min_gens(semigroup_elements(config, cap), config, i, j);
}

std::string to_string(OracleVerdict v) {
  return v == OracleVerdict::no ? "no" : "yes-up-to-cap";
}

OracleVerdict parse_oracle_verdict(std::string_view text) {
  if (text == "no") return OracleVerdict::no;
  if (text == "yes-up-to-cap") return OracleVerdict::yes_up_to_cap;
  throw Error("unknown oracle verdict '" + std::string(text) + "'");
}

OracleResult oracle_strongly_koszul(const Configuration& config,
                                    const OracleOptions& options) {
  if (options.cap < 3) throw Error("oracle needs cap >= 3");
  const std::size_t n = config.num_gens();
  const auto layers = semigroup_elements(config, options.cap, options.layer_limit);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  const auto count = static_cast<std::ptrdiff_t>(pairs.size());
  std::vector<std::optional<IntersectionGenerator>> found(pairs.size());
  std::atomic<std::ptrdiff_t> first{count};
  const int threads = options.par.resolved();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads > 1)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    if (k > first.load(std::memory_order_relaxed)) continue;
    const auto gens = intersection_min_gens(layers, config, pairs[k].first, pairs[k].second);
    for (const auto& g : gens) {
      if (g.degree >= 3) {
        found[k] = g;
        auto current = first.load();
        while (k < current && !first.compare_exchange_weak(current, k)) {
        }
        break;
      }
    }
  }

  OracleResult result;
  result.cap = options.cap;
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    if (found[k]) {
      result.verdict = OracleVerdict::no;
      result.witness = OracleWitness{pairs[k].first, pairs[k].second, *found[k]};
      break;
    }
  }
  return result;
}

}  // namespace revlex

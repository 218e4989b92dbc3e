#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace revlex {

/// Simple graph on vertices 0..d-1 (written 1..d in files and output).
class SimpleGraph {
 public:
  using Edge = std::pair<int, int>;

  SimpleGraph() = default;
  /// 0-based edges; throws Error on loops, duplicates or out-of-range ends.
  SimpleGraph(std::size_t num_vertices, std::vector<Edge> edges);

  static SimpleGraph empty(std::size_t d);
  static SimpleGraph complete(std::size_t d);
  static SimpleGraph path(std::size_t d);
  static SimpleGraph cycle(std::size_t d);

  std::size_t num_vertices() const noexcept { return d_; }
  /// Sorted, each edge (u, v) with u < v.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  /// Neighbourhood of v as a bitmask (d <= 64).
  std::uint64_t neighbours(int v) const { return adj_[v]; }

  /// Stable sets ordered by size, then lexicographically on sorted vertex
  /// lists; the empty set comes first.
  std::vector<std::vector<int>> stable_sets() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.d_ == b.d_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t d_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
};

inline constexpr std::size_t kDefaultGraphCap = 12;

/// For every induced subgraph, the maximum stable set size equals the number
/// of maximal cliques. Checked over all 2^d vertex subsets.
bool is_trivially_perfect(const SimpleGraph& g, std::size_t cap = kDefaultGraphCap);

/// For every induced subgraph, the clique number equals the chromatic number.
bool is_perfect(const SimpleGraph& g, std::size_t cap = kDefaultGraphCap);

/// No induced P4 and no induced C4; equivalent to trivial perfection.
bool is_p4_c4_free(const SimpleGraph& g);

/// Exact invariants of the subgraph induced on `mask`.
int stability_number(const SimpleGraph& g, std::uint64_t mask);
int clique_number(const SimpleGraph& g, std::uint64_t mask);
int chromatic_number(const SimpleGraph& g, std::uint64_t mask);
int count_maximal_cliques(const SimpleGraph& g, std::uint64_t mask);

}  // namespace revlex

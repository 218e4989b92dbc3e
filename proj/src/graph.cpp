#include "revlex/graph.hpp"

#include <algorithm>
#include <bit>

#include "revlex/exponent.hpp"

namespace revlex {

namespace {

int lowest(std::uint64_t mask) { return std::countr_zero(mask); }

void require_cap(const SimpleGraph& g, std::size_t cap) {
  if (g.num_vertices() > cap) {
    throw Error("graph has " + std::to_string(g.num_vertices()) +
                " vertices, above the cap of " + std::to_string(cap));
  }
}

int max_stable(const SimpleGraph& g, std::uint64_t mask) {
  if (mask == 0) return 0;
  const int v = lowest(mask);
  const std::uint64_t rest = mask & ~(std::uint64_t{1} << v);
  const int without = max_stable(g, rest);
  const int with = 1 + max_stable(g, rest & ~g.neighbours(v));
  return std::max(with, without);
}

int max_clique(const SimpleGraph& g, std::uint64_t mask) {
  if (mask == 0) return 0;
  const int v = lowest(mask);
  const std::uint64_t rest = mask & ~(std::uint64_t{1} << v);
  const int without = max_clique(g, rest);
  const int with = 1 + max_clique(g, rest & g.neighbours(v));
  return std::max(with, without);
}

// Bron-Kerbosch; counts maximal cliques of the subgraph on p | r | x.
int bron_kerbosch(const SimpleGraph& g, std::uint64_t r, std::uint64_t p,
                  std::uint64_t x) {
  if (p == 0 && x == 0) return r != 0 ? 1 : 0;
  int count = 0;
  while (p != 0) {
    const int v = lowest(p);
    const std::uint64_t bit = std::uint64_t{1} << v;
    count += bron_kerbosch(g, r | bit, p & g.neighbours(v), x & g.neighbours(v));
    p &= ~bit;
    x |= bit;
  }
  return count;
}

// Tries to colour `order` with at most k colours.
bool colourable(const SimpleGraph& g, const std::vector<int>& order, std::size_t pos,
                std::vector<int>& colour, int k, int used) {
  if (pos == order.size()) return true;
  const int v = order[pos];
  // A fresh colour is only ever tried once (colour symmetry).
  const int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    bool ok = true;
    for (std::size_t q = 0; q < pos && ok; ++q) {
      const int u = order[q];
      if (colour[u] == c && g.adjacent(u, v)) ok = false;
    }
    if (!ok) continue;
    colour[v] = c;
    if (colourable(g, order, pos + 1, colour, k, std::max(used, c + 1))) return true;
    colour[v] = -1;
  }
  return false;
}

}  // namespace

SimpleGraph::SimpleGraph(std::size_t num_vertices, std::vector<Edge> edges)
    : d_(num_vertices), adj_(num_vertices, 0) {
  if (d_ > 64) throw Error("graph: at most 64 vertices are supported");
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= d_ ||
        static_cast<std::size_t>(v) >= d_) {
      throw Error("graph: edge {" + std::to_string(u + 1) + "," +
                  std::to_string(v + 1) + "} has an endpoint outside 1.." +
                  std::to_string(d_));
    }
    if (u == v) throw Error("graph: loop at vertex " + std::to_string(u + 1));
    if (u > v) std::swap(u, v);
    if (adjacent(u, v)) {
      throw Error("graph: duplicate edge {" + std::to_string(u + 1) + "," +
                  std::to_string(v + 1) + "}");
    }
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
}

SimpleGraph SimpleGraph::empty(std::size_t d) { return SimpleGraph(d, {}); }

SimpleGraph SimpleGraph::complete(std::size_t d) {
  std::vector<Edge> e;
  for (int u = 0; u < static_cast<int>(d); ++u) {
    for (int v = u + 1; v < static_cast<int>(d); ++v) e.emplace_back(u, v);
  }
  return SimpleGraph(d, std::move(e));
}

SimpleGraph SimpleGraph::path(std::size_t d) {
  std::vector<Edge> e;
  for (int u = 0; u + 1 < static_cast<int>(d); ++u) e.emplace_back(u, u + 1);
  return SimpleGraph(d, std::move(e));
}

SimpleGraph SimpleGraph::cycle(std::size_t d) {
  if (d < 3) throw Error("graph: a cycle needs at least 3 vertices");
  auto e = path(d).edges();
  e.emplace_back(0, static_cast<int>(d) - 1);
  return SimpleGraph(d, std::move(e));
}

std::vector<std::vector<int>> SimpleGraph::stable_sets() const {
  if (d_ > 30) throw Error("graph: too many vertices to list stable sets");
  std::vector<std::vector<int>> out;
  const std::uint64_t full = (std::uint64_t{1} << d_) - 1;
  for (std::uint64_t s = 0; s <= full; ++s) {
    bool stable = true;
    for (std::uint64_t rest = s; rest != 0 && stable; rest &= rest - 1) {
      if ((adj_[lowest(rest)] & s) != 0) stable = false;
    }
    if (!stable) continue;
    std::vector<int> set;
    for (std::uint64_t rest = s; rest != 0; rest &= rest - 1) set.push_back(lowest(rest));
    out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

int stability_number(const SimpleGraph& g, std::uint64_t mask) {
  return max_stable(g, mask);
}

int clique_number(const SimpleGraph& g, std::uint64_t mask) {
  return max_clique(g, mask);
}

int count_maximal_cliques(const SimpleGraph& g, std::uint64_t mask) {
  return bron_kerbosch(g, 0, mask, 0);
}

int chromatic_number(const SimpleGraph& g, std::uint64_t mask) {
  if (mask == 0) return 0;
  std::vector<int> order;
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) order.push_back(lowest(rest));
  // Highest degree first tightens the search.
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(g.neighbours(a) & mask) > std::popcount(g.neighbours(b) & mask);
  });
  std::vector<int> colour(g.num_vertices(), -1);
  for (int k = clique_number(g, mask);; ++k) {
    if (colourable(g, order, 0, colour, k, 0)) return k;
  }
}

bool is_trivially_perfect(const SimpleGraph& g, std::size_t cap) {
  require_cap(g, cap);
  const std::uint64_t full = (std::uint64_t{1} << g.num_vertices()) - 1;
  for (std::uint64_t w = 1; w <= full; ++w) {
    if (stability_number(g, w) != count_maximal_cliques(g, w)) return false;
  }
  return true;
}

bool is_perfect(const SimpleGraph& g, std::size_t cap) {
  require_cap(g, cap);
  const std::uint64_t full = (std::uint64_t{1} << g.num_vertices()) - 1;
  for (std::uint64_t w = 1; w <= full; ++w) {
    if (clique_number(g, w) != chromatic_number(g, w)) return false;
  }
  return true;
}

bool is_p4_c4_free(const SimpleGraph& g) {
  const int d = static_cast<int>(g.num_vertices());
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      for (int c = b + 1; c < d; ++c) {
        for (int e = c + 1; e < d; ++e) {
          const int vs[4] = {a, b, c, e};
          int degree[4] = {0, 0, 0, 0};
          int edges = 0;
          for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
              if (g.adjacent(vs[i], vs[j])) {
                ++edges;
                ++degree[i];
                ++degree[j];
              }
            }
          }
          std::sort(degree, degree + 4);
          const bool p4 = edges == 3 && degree[0] == 1 && degree[3] == 2;
          const bool c4 = edges == 4 && degree[0] == 2 && degree[3] == 2;
          if (p4 || c4) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace revlex

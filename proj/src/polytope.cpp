#include "revlex/polytope.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "revlex/lattice.hpp"

namespace revlex {

std::uint64_t FacetHeights::on_facet() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < heights.size(); ++i) {
    if (heights[i] == 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

std::int64_t FacetHeights::width() const {
  return heights.empty() ? 0 : *std::max_element(heights.begin(), heights.end());
}

namespace {

using Mask = std::uint64_t;
__extension__ typedef __int128 Wide;

[[noreturn]] void overflow() {
  throw Error("integer overflow in facet enumeration");
}

std::int64_t narrow(Wide v) {
  if (v > INT64_MAX || v < INT64_MIN) overflow();
  return static_cast<std::int64_t>(v);
}

Wide dot(const IntVector& a, const IntVector& b) {
  Wide s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<Wide>(a[i]) * b[i];
  return s;
}

void make_primitive(IntVector& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
}

struct Ray {
  IntVector normal;
  Mask zeros = 0;  // processed columns on which the functional vanishes
};

// Columns re-expressed in a full-rank coordinate system: keep a maximal set
// of linearly independent rows of the d x n matrix. Linear functionals on
// the span of A are then ordinary vectors in Q^r.
std::vector<IntVector> project(const Configuration& config) {
  const std::size_t n = config.num_gens();
  IntMatrix kept;
  for (std::size_t row = 0; row < config.dim_t(); ++row) {
    IntVector r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = config.column(i)[row];
    kept.push_back(r);
    if (integer_rank(kept) < kept.size()) kept.pop_back();
  }
  std::vector<IntVector> cols(n, IntVector(kept.size()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < kept.size(); ++r) cols[i][r] = kept[r][i];
  }
  return cols;
}

}  // namespace

std::vector<FacetHeights> facets(const Configuration& config) {
  const std::size_t n = config.num_gens();
  const auto cols = project(config);
  const std::size_t r = cols.front().size();
  if (n == 1) return {};

  // Start from a simplicial cone on r independent columns; its facet
  // normals are the dual basis.
  std::vector<std::size_t> basis;
  IntMatrix chosen;
  for (std::size_t i = 0; i < n && basis.size() < r; ++i) {
    chosen.push_back(cols[i]);
    if (integer_rank(chosen) == chosen.size()) {
      basis.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  Mask processed = 0;
  for (auto b : basis) processed |= Mask{1} << b;

  std::vector<Ray> rays;
  for (std::size_t k = 0; k < r; ++k) {
    IntMatrix others;
    for (std::size_t m = 0; m < r; ++m) {
      if (m != k) others.push_back(chosen[m]);
    }
    IntVector normal;
    if (others.empty()) {
      normal = IntVector{1};
    } else {
      normal = integer_kernel(others, r).front();
    }
    if (dot(normal, chosen[k]) < 0) {
      for (auto& x : normal) x = -x;
    }
    Ray ray{std::move(normal), 0};
    for (std::size_t m = 0; m < r; ++m) {
      if (m != k) ray.zeros |= Mask{1} << basis[m];
    }
    rays.push_back(std::move(ray));
  }

  // Double description: intersect with one half-space per remaining column.
  for (std::size_t c = 0; c < n; ++c) {
    const Mask cbit = Mask{1} << c;
    if (processed & cbit) continue;
    std::vector<Wide> value(rays.size());
    bool any_negative = false;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      value[k] = dot(rays[k].normal, cols[c]);
      if (value[k] < 0) any_negative = true;
    }
    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (value[k] < 0) continue;
      Ray kept = rays[k];
      if (value[k] == 0) kept.zeros |= cbit;
      next.push_back(std::move(kept));
    }
    if (any_negative) {
      for (std::size_t p = 0; p < rays.size(); ++p) {
        if (value[p] <= 0) continue;
        for (std::size_t q = 0; q < rays.size(); ++q) {
          if (value[q] >= 0) continue;
          const Mask common = rays[p].zeros & rays[q].zeros;
          if (r >= 2 && static_cast<std::size_t>(std::popcount(common)) + 2 < r) continue;
          bool adjacent = true;
          for (std::size_t w = 0; w < rays.size() && adjacent; ++w) {
            if (w != p && w != q && (rays[w].zeros & common) == common) adjacent = false;
          }
          if (!adjacent) continue;
          Ray fresh;
          fresh.normal.resize(r);
          for (std::size_t t = 0; t < r; ++t) {
            fresh.normal[t] = narrow(value[p] * rays[q].normal[t] - value[q] * rays[p].normal[t]);
          }
          make_primitive(fresh.normal);
          fresh.zeros = common | cbit;
          next.push_back(std::move(fresh));
        }
      }
    }
    rays = std::move(next);
    processed |= cbit;
  }

  std::vector<FacetHeights> out;
  out.reserve(rays.size());
  for (const auto& ray : rays) {
    FacetHeights f;
    f.heights.resize(n);
    std::int64_t g = 0;
    for (std::size_t i = 0; i < n; ++i) {
      f.heights[i] = narrow(dot(ray.normal, cols[i]));
      g = std::gcd(g, f.heights[i]);
    }
    // Dividing by the gcd of the values makes the functional map ZA onto Z.
    for (auto& h : f.heights) h /= g;
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(),
            [](const FacetHeights& a, const FacetHeights& b) { return a.heights < b.heights; });
  return out;
}

}  // namespace revlex

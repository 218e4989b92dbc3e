#include <gtest/gtest.h>

#include <set>

#include "revlex/builders.hpp"
#include "revlex/fixtures.hpp"
#include "revlex/lattice.hpp"
#include "revlex/polytope.hpp"
#include "support.hpp"

namespace revlex {
namespace {

// Facets by enumeration: for every set of columns of rank r - 1, the
// functionals vanishing on it, restricted to A, span one line; it is a
// facet when A lies on one side.
std::set<std::vector<std::int64_t>> facets_by_enumeration(const Configuration& c) {
  const std::size_t n = c.num_gens();
  auto rows_of = [&](std::uint64_t mask) {
    IntMatrix m;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) m.emplace_back(c.column(i).begin(), c.column(i).end());
    }
    return m;
  };
  const std::size_t r = integer_rank(rows_of((std::uint64_t{1} << n) - 1));
  std::set<std::vector<std::int64_t>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const auto m = rows_of(mask);
    if (integer_rank(m) + 1 != r) continue;
    for (const auto& w : integer_kernel(m, c.dim_t())) {
      std::vector<std::int64_t> h(n);
      bool pos = false, neg = false;
      std::int64_t g = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < c.dim_t(); ++k) h[i] += w[k] * c.column(i)[k];
        pos |= h[i] > 0;
        neg |= h[i] < 0;
        g = std::gcd(g, h[i]);
      }
      if (g == 0) continue;
      if (!(pos && neg)) {
        for (auto& x : h) x = neg ? -x / g : x / g;
        out.insert(h);
      }
      break;
    }
  }
  return out;
}

std::set<std::vector<std::int64_t>> as_set(const std::vector<FacetHeights>& fs) {
  std::set<std::vector<std::int64_t>> out;
  for (const auto& f : fs) out.insert(f.heights);
  return out;
}

TEST(Facets, Cube) {
  std::vector<ExponentVector> cols;
  for (int code = 0; code < 8; ++code) {
    cols.push_back(testing::ev({code & 1, (code >> 1) & 1, (code >> 2) & 1, 1}));
  }
  const auto fs = facets(Configuration(4, cols));
  ASSERT_EQ(fs.size(), 6U);
  for (const auto& f : fs) {
    EXPECT_EQ(std::popcount(f.on_facet()), 4);
    EXPECT_EQ(f.width(), 1);
  }
}

TEST(Facets, SegmentHeightsAreLatticeLengths) {
  // Degree-4 Veronese in two variables: a segment with five lattice points.
  const auto fs = facets(veronese(2, 4));
  ASSERT_EQ(fs.size(), 2U);
  EXPECT_EQ(fs[0].heights, (std::vector<std::int64_t>{0, 1, 2, 3, 4}));
  EXPECT_EQ(fs[1].heights, (std::vector<std::int64_t>{4, 3, 2, 1, 0}));
  // z sits at the midpoint of the segment from y1 to x1.
  const auto star = facets(star_config(1, true));
  ASSERT_EQ(star.size(), 2U);
  EXPECT_EQ(star[0].width(), 2);
  EXPECT_TRUE(facets(Configuration(1, {testing::ev({1})})).empty());
}

TEST(Facets, MatchEnumerationOnFixturesAndRandomConfigurations) {
  std::mt19937 rng(31);
  std::vector<Configuration> cases;
  for (const auto& f : builtin_fixtures()) {
    if (f.config.num_gens() <= 14) cases.push_back(f.config);
  }
  for (int t = 0; t < 30; ++t) cases.push_back(testing::random_01_config(rng, 4, 5 + t % 6));
  for (int t = 0; t < 15; ++t) cases.push_back(testing::random_graded_config(rng, 4, 3, 7));
  for (const auto& c : cases) {
    const auto fs = facets(c);
    EXPECT_EQ(as_set(fs), facets_by_enumeration(c));
    for (const auto& f : fs) {
      EXPECT_TRUE(std::all_of(f.heights.begin(), f.heights.end(), [](auto h) { return h >= 0; }));
    }
  }
}

}  // namespace
}  // namespace revlex

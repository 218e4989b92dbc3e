#include <gtest/gtest.h>

#include "revlex/builders.hpp"
#include "revlex/fixtures.hpp"
#include "revlex/oracle.hpp"
#include "support.hpp"

namespace revlex {
namespace {

TEST(Semigroup, LayerSizes) {
  // Degree-4 Veronese in two variables: layer m is every (a, 4m - a).
  const auto ver = semigroup_elements(veronese(2, 4), 5);
  for (std::size_t m = 0; m <= 5; ++m) EXPECT_EQ(ver.layers[m].size(), 4 * m + 1);

  // Free semigroup on n generators: C(n + m - 1, m) elements in layer m.
  const Configuration simplex(4, {testing::ev({1, 0, 0, 0}), testing::ev({0, 1, 0, 0}),
                                  testing::ev({0, 0, 1, 0}), testing::ev({0, 0, 0, 1})});
  const auto free = semigroup_elements(simplex, 4);
  const std::vector<std::size_t> expected{1, 4, 10, 20, 35};
  for (std::size_t m = 0; m <= 4; ++m) EXPECT_EQ(free.layers[m].size(), expected[m]);
}

TEST(Semigroup, LayersAreExactlyTheSumsOfColumns) {
  const auto c = example17_config();
  const auto s = semigroup_elements(c, 3);
  for (std::size_t m = 1; m <= 3; ++m) {
    std::set<ExponentVector> sums;
    for (const auto& a : s.layers[m - 1]) {
      for (const auto& u : c.columns()) sums.insert(a + u);
    }
    EXPECT_EQ(std::vector<ExponentVector>(sums.begin(), sums.end()), s.layers[m]);
  }
  EXPECT_TRUE(s.contains(2, c.column(1) + c.column(2)));
  EXPECT_FALSE(s.contains(2, c.column(1)));
  EXPECT_FALSE(s.contains(7, c.column(1)));
}

TEST(Semigroup, LimitsThrow) {
  EXPECT_THROW(semigroup_elements(veronese(2, 4), 0), Error);
  EXPECT_THROW(semigroup_elements(veronese(3, 3), 4, 20), Error);
  OracleOptions low;
  low.cap = 2;
  EXPECT_THROW(oracle_strongly_koszul(veronese(2, 4), low), Error);
}

TEST(Intersection, GeneratorsLieInBothIdealsAndAreMinimal) {
  const auto c = stable_set_config(SimpleGraph::path(4));
  const auto layers = semigroup_elements(c, 4);
  for (std::size_t i = 0; i < c.num_gens(); ++i) {
    for (std::size_t j = i + 1; j < c.num_gens(); ++j) {
      const auto gens = intersection_min_gens(layers, c, i, j);
      EXPECT_TRUE(std::is_sorted(gens.begin(), gens.end()));
      for (const auto& g : gens) {
        EXPECT_GE(g.degree, 2U);
        EXPECT_TRUE(layers.contains(g.degree - 1, g.element - c.column(i)));
        EXPECT_TRUE(layers.contains(g.degree - 1, g.element - c.column(j)));
        for (const auto& h : gens) {
          if (h.degree < g.degree) {
            EXPECT_FALSE(layers.contains(g.degree - h.degree, g.element - h.element));
          }
        }
      }
    }
  }
}

TEST(Intersection, MonotoneInTheCap) {
  const auto c = stable_set_config(SimpleGraph::path(4));
  for (std::size_t i = 0; i + 1 < c.num_gens(); ++i) {
    const auto small = intersection_min_gens(c, i, i + 1, 3);
    auto large = intersection_min_gens(c, i, i + 1, 4);
    std::erase_if(large, [](const IntersectionGenerator& g) { return g.degree > 3; });
    EXPECT_EQ(small, large);
  }
}

TEST(Oracle, KnownExamples) {
  EXPECT_EQ(oracle_strongly_koszul(example17_config()).verdict, OracleVerdict::yes_up_to_cap);
  EXPECT_EQ(oracle_strongly_koszul(veronese(2, 4)).verdict, OracleVerdict::yes_up_to_cap);
  const auto p4 = oracle_strongly_koszul(stable_set_config(SimpleGraph::path(4)));
  EXPECT_EQ(p4.verdict, OracleVerdict::no);
  ASSERT_TRUE(p4.witness.has_value());
  EXPECT_GE(p4.witness->generator.degree, 3U);
  EXPECT_LT(p4.witness->i, p4.witness->j);
}

TEST(Oracle, ParallelMatchesSerial) {
  for (const auto& f : builtin_fixtures()) {
    if (f.config.num_gens() > 9) continue;
    OracleOptions serial;
    serial.par = Parallelism::serial();
    OracleOptions parallel;
    parallel.par = Parallelism{4};
    EXPECT_EQ(oracle_strongly_koszul(f.config, serial), oracle_strongly_koszul(f.config, parallel))
        << f.name;
  }
}

TEST(Oracle, VerdictNames) {
  EXPECT_EQ(to_string(OracleVerdict::yes_up_to_cap), "yes-up-to-cap");
  EXPECT_EQ(parse_oracle_verdict("no"), OracleVerdict::no);
  EXPECT_THROW(parse_oracle_verdict("maybe"), Error);
}

}  // namespace
}  // namespace revlex

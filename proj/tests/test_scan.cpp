#include <gtest/gtest.h>

#include "revlex/builders.hpp"
#include "revlex/fixtures.hpp"
#include "revlex/scan.hpp"
#include "revlex/toric.hpp"
#include "support.hpp"

namespace revlex {
namespace {

std::vector<Binomial> toric_gens(const Configuration& c) {
  const auto gb = toric_ideal(c);
  return {gb.elements().begin(), gb.elements().end()};
}

// The witness must really fail: recompute the basis under it.
void expect_genuine_witness(const std::vector<Binomial>& gens, const ScanOutcome& out,
                            const BasisCheck& check) {
  ASSERT_TRUE(out.witness_ordering.has_value());
  ASSERT_TRUE(out.witness_element.has_value());
  const auto gb = buchberger(gens, MonomialOrder::revlex(*out.witness_ordering));
  const auto found = check(gb);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(*found, *out.witness_element);
}

TEST(Scan, ConeScanAgreesWithBruteForce) {
  std::mt19937 rng(17);
  int failures_seen = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto c = trial % 2 == 0 ? testing::random_01_config(rng, 3, 5 + trial % 2)
                                  : testing::random_graded_config(rng, 3, 2, 5);
    const auto gens = toric_gens(c);
    for (const BasisCheck& check : {BasisCheck(first_non_quadratic),
                                    BasisCheck(first_non_squarefree_initial)}) {
      const auto fast = scan_all_revlex(gens, c.num_gens(), check, Parallelism::serial());
      const auto slow = scan_all_revlex_brute_force(gens, c.num_gens(), check);
      EXPECT_EQ(fast.passed, slow.passed) << trial;
      EXPECT_LE(fast.groebner_computations, slow.groebner_computations);
      if (!fast.passed) {
        ++failures_seen;
        expect_genuine_witness(gens, fast, check);
        expect_genuine_witness(gens, slow, check);
      }
    }
  }
  EXPECT_GT(failures_seen, 0);
}

TEST(Scan, BruteForceCountsEveryPermutation) {
  const auto c = star_config(2, true);
  const auto out = scan_all_revlex_brute_force(toric_gens(c), 5, first_non_quadratic);
  EXPECT_TRUE(out.passed);
  EXPECT_EQ(out.regions, 120U);
  // The twisted cubic is not: some ordering has a cubic in its basis.
  EXPECT_FALSE(scan_all_revlex_brute_force(toric_gens(veronese(2, 3)), 4, first_non_quadratic)
                   .passed);
}

TEST(Scan, ParallelMatchesSerial) {
  for (const auto& f : builtin_fixtures()) {
    if (f.config.num_gens() > 8) continue;
    const auto gens = toric_gens(f.config);
    for (const BasisCheck& check : {BasisCheck(first_non_quadratic),
                                    BasisCheck(first_non_squarefree_initial)}) {
      const auto a = scan_all_revlex(gens, f.config.num_gens(), check, Parallelism::serial());
      const auto b = scan_all_revlex(gens, f.config.num_gens(), check, Parallelism{4});
      EXPECT_EQ(a.passed, b.passed) << f.name;
      EXPECT_EQ(a.witness_ordering, b.witness_ordering) << f.name;
      EXPECT_EQ(a.witness_element, b.witness_element) << f.name;
      if (a.passed) {
        EXPECT_EQ(a.groebner_computations, b.groebner_computations) << f.name;
        EXPECT_EQ(a.regions, b.regions) << f.name;
      }
      for (int repeat = 0; repeat < 3; ++repeat) {
        const auto c = scan_all_revlex(gens, f.config.num_gens(), check, Parallelism{4});
        EXPECT_EQ(c.groebner_computations, b.groebner_computations) << f.name;
        EXPECT_EQ(c.regions, b.regions) << f.name;
      }
    }
  }
}

TEST(Scan, SampledOrderingsAreSeededAndReportSmallestFailure) {
  const auto a = sample_orderings(8, 50, 7);
  EXPECT_EQ(a, sample_orderings(8, 50, 7));
  EXPECT_NE(a, sample_orderings(8, 50, 8));
  EXPECT_EQ(a.size(), 50U);

  const auto c = example17_config();
  const auto gens = toric_gens(c);
  const auto serial = scan_revlex_orderings(gens, a, first_non_quadratic, Parallelism::serial());
  const auto parallel = scan_revlex_orderings(gens, a, first_non_quadratic, Parallelism{3});
  EXPECT_EQ(serial.passed, parallel.passed);
  EXPECT_EQ(serial.witness_ordering, parallel.witness_ordering);
  EXPECT_EQ(serial.groebner_computations, parallel.groebner_computations);
  if (!serial.passed) {
    const auto it = std::find(a.begin(), a.end(), *serial.witness_ordering);
    for (auto p = a.begin(); p != it; ++p) {
      EXPECT_FALSE(first_non_quadratic(buchberger(gens, MonomialOrder::revlex(*p))));
    }
  }
}

}  // namespace
}  // namespace revlex

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status
// if any criterion fails. Exact checks only.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "revlex/builders.hpp"
#include "revlex/fixtures.hpp"
#include "revlex/koszul.hpp"
#include "revlex/oracle.hpp"
#include "revlex/scan.hpp"
#include "revlex/toric.hpp"
#include "support.hpp"

namespace revlex {
namespace {

using testing::mono;

class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  void note(std::string text) { notes_.push_back(std::move(text)); }

  bool passed() const { return failures_.empty(); }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

Binomial bin(std::size_t n, std::initializer_list<std::pair<int, int>> plus,
             std::initializer_list<std::pair<int, int>> minus) {
  return Binomial(mono(n, plus), mono(n, minus));
}

bool contains(const std::vector<ExponentVector>& v, const ExponentVector& m) {
  return std::find(v.begin(), v.end(), m) != v.end();
}

// Confirms a compressedness witness by recomputing the basis under it.
bool witness_is_genuine(const Configuration& c, const CompressedResult& r) {
  if (!r.witness_ordering || !r.witness_element) return false;
  const auto gb = buchberger(toric_ideal(c).elements(), MonomialOrder::revlex(*r.witness_ordering));
  const auto& m = r.witness_element->plus();
  return !m.is_squarefree() && contains(initial_ideal_min_gens(gb), m);
}

void star_configurations(Criterion& c) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto config = star_config(n, true);
    const std::size_t vars = 2 * n + 1;
    std::vector<Binomial> expected;
    for (std::size_t i = 1; i <= n; ++i) {
      expected.push_back(bin(vars, {{int(1 + i), 1}, {int(1 + n + i), 1}}, {{1, 2}}));
    }
    const auto tag = "n=" + std::to_string(n);
    c.expect(generate_same_ideal(toric_ideal(config).elements(), expected),
             tag + ": toric ideal differs from (x_i y_i - z^2)");
    if (n <= 2) {
      const auto u = universal_revlex_quadratic(config);
      c.expect(u.holds, tag + ": some revlex basis is not quadratic");
      const auto brute = scan_all_revlex_brute_force(toric_ideal(config).elements(), vars,
                                                     first_non_quadratic);
      c.expect(brute.passed && brute.regions == (n == 1 ? 6U : 120U),
               tag + ": permutation-by-permutation scan disagrees");
    }
    c.expect(decide_strongly_koszul(config).verdict == KoszulVerdict::certified_yes,
             tag + ": verdict is not certified-yes");
  }
}

void veronese_example(Criterion& c) {
  const auto config = veronese(2, 4);
  const std::size_t n = 5;
  const std::vector<Binomial> listed{
      bin(n, {{3, 1}, {5, 1}}, {{4, 2}}), bin(n, {{1, 1}, {3, 1}}, {{2, 2}}),
      bin(n, {{3, 2}}, {{2, 1}, {4, 1}}), bin(n, {{1, 1}, {5, 1}}, {{2, 1}, {4, 1}}),
      bin(n, {{2, 1}, {3, 1}}, {{1, 1}, {4, 1}}), bin(n, {{3, 1}, {4, 1}}, {{2, 1}, {5, 1}})};
  const auto toric = toric_ideal(config);
  c.expect(generate_same_ideal(toric.elements(), listed), "toric ideal differs from the 6 quadrics");

  const auto x2_cubed = mono(n, {{2, 3}});
  const auto x4_cubed = mono(n, {{4, 3}});
  std::vector<int> rest{0, 2, 4};
  std::size_t failing = 0;
  do {
    for (auto low : {std::vector<int>{1, 3}, std::vector<int>{3, 1}}) {
      std::vector<int> perm = low;
      perm.insert(perm.end(), rest.begin(), rest.end());
      const auto ev = pair_check(toric.elements(), 1, 3, VariableOrdering(perm));
      if (!ev.passed && ev.witness && (*ev.witness == x2_cubed || *ev.witness == x4_cubed)) {
        ++failing;
      }
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  c.expect(failing == 12, "pair (x2, x4) failed with x2^3 or x4^3 under " +
                              std::to_string(failing) + " of 12 orderings");

  c.expect(decide_strongly_koszul(config).verdict == KoszulVerdict::inconclusive,
           "verdict is not inconclusive");
  c.expect(oracle_strongly_koszul(config).verdict == OracleVerdict::yes_up_to_cap,
           "oracle (cap 4) does not answer yes");

  const auto brute = scan_all_revlex_brute_force(toric.elements(), n, first_non_squarefree_initial);
  c.expect(!brute.passed, "all 120 revlex initial ideals are squarefree");
  c.expect(scan_all_revlex_brute_force(toric.elements(), n, [](const GroebnerBasis&) {
             return std::optional<Binomial>{};
           }).regions == 120,
           "permutation scan did not visit 120 orderings");
  for (auto method : {ExhaustiveMethod::facet_width, ExhaustiveMethod::ordering_scan}) {
    CompressedOptions opts;
    opts.method = method;
    const auto r = is_compressed(config, opts);
    c.expect(!r.compressed && witness_is_genuine(config, r),
             "exhaustive compressedness is not false with a verified witness");
  }
}

void stable_set_example(Criterion& c, bool full_scan) {
  const auto config = example17_config();
  const std::size_t n = 8;
  // The builder lists the same columns in stable-set order.
  const auto built = stable_set_config(SimpleGraph::empty(3));
  std::vector<ExponentVector> a(config.columns().begin(), config.columns().end());
  std::vector<ExponentVector> b(built.columns().begin(), built.columns().end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  c.expect(a == b, "builder columns differ from the listed generators");

  const std::vector<Binomial> listed{
      bin(n, {{1, 1}, {5, 1}}, {{2, 1}, {3, 1}}), bin(n, {{1, 1}, {6, 1}}, {{3, 1}, {4, 1}}),
      bin(n, {{1, 1}, {7, 1}}, {{2, 1}, {4, 1}}), bin(n, {{5, 1}, {6, 1}}, {{3, 1}, {8, 1}}),
      bin(n, {{6, 1}, {7, 1}}, {{4, 1}, {8, 1}}), bin(n, {{5, 1}, {7, 1}}, {{2, 1}, {8, 1}}),
      bin(n, {{1, 1}, {8, 1}}, {{4, 1}, {5, 1}}), bin(n, {{2, 1}, {6, 1}}, {{4, 1}, {5, 1}}),
      bin(n, {{3, 1}, {7, 1}}, {{4, 1}, {5, 1}})};
  const auto toric = toric_ideal(config);
  c.expect(generate_same_ideal(toric.elements(), listed), "toric ideal differs from the 9 quadrics");

  const auto ordering = VariableOrdering::parse("x4<x3<x2<x1<x8<x7<x6<x5", config.variable_names());
  const auto gb = buchberger(toric.elements(), MonomialOrder::revlex(ordering));
  const auto x2x3x8 = mono(n, {{2, 1}, {3, 1}, {8, 1}});
  c.expect(contains(initial_ideal_min_gens(gb), x2x3x8), "x2*x3*x8 is not a minimal generator");
  const auto cubic = first_non_quadratic(gb);
  c.expect(cubic.has_value(), "the listed ordering gives a quadratic basis");

  const auto u = universal_revlex_quadratic(config);
  c.expect(!u.holds && u.witness_element && u.witness_element->degree() >= 3,
           "universal revlex quadratic is not false");
  if (u.witness_ordering) {
    c.note("scan witness " + u.witness_ordering->to_string(config.variable_names()) +
           "; listed ordering also verified");
  }

  const auto report = decide_strongly_koszul(config, toric.elements());
  c.expect(report.verdict == KoszulVerdict::certified_yes, "verdict is not certified-yes");
  c.expect(report.groebner_computations <= 28, "more than 28 pair checks");

  CompressedOptions certified;
  certified.mode = CompressedMode::certified;
  c.expect(is_compressed(config, certified, &report).compressed, "certified compressed is false");

  CompressedOptions facet;
  c.expect(is_compressed(config, facet).compressed, "facet-width compressed is false");
  if (full_scan) {
    CompressedOptions scan;
    scan.method = ExhaustiveMethod::ordering_scan;
    c.expect(is_compressed(config, scan).compressed, "8! ordering scan finds a non-squarefree initial");
  }
  CompressedOptions sample;
  sample.mode = CompressedMode::sample;
  sample.sample_count = 1000;
  c.expect(is_compressed(config, sample).compressed, "a sampled ordering is not squarefree");
}

void small_graphs(Criterion& c) {
  std::size_t four_vertex_classes = 0;
  for (std::size_t d = 1; d <= 4; ++d) {
    for (const auto& g : testing::graphs_up_to_isomorphism(d)) {
      if (d == 4) ++four_vertex_classes;
      const auto config = stable_set_config(g);
      std::ostringstream tag;
      tag << "graph on " << d << " vertices with " << g.edges().size() << " edges";
      const bool koszul = decide_strongly_koszul(config).verdict == KoszulVerdict::certified_yes;
      c.expect(koszul == is_trivially_perfect(g), tag.str() + ": verdict vs trivial perfection");
      CompressedOptions opts;
      opts.cap = config.num_gens();
      const auto r = is_compressed(config, opts);
      c.expect(r.compressed == is_perfect(g), tag.str() + ": compressed vs perfection");
      if (!r.compressed) c.expect(witness_is_genuine(config, r), tag.str() + ": bad witness");
    }
  }
  c.expect(four_vertex_classes == 11, "expected 11 classes on 4 vertices");

  const auto c5 = stable_set_config(SimpleGraph::cycle(5));
  CompressedOptions opts;
  opts.cap = c5.num_gens();
  const auto r = is_compressed(c5, opts);
  c.expect(!r.compressed && witness_is_genuine(c5, r), "C5 has no verified witness");
  if (r.witness_ordering && r.witness_element) {
    c.note("C5 witness " + r.witness_ordering->to_string(c5.variable_names()) + ": " +
           r.witness_element->to_string(c5.variable_names()));
  }
}

void oracle_equivalence(Criterion& c) {
  std::mt19937 rng(20240601);
  std::size_t yes = 0;
  std::size_t no = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t base = 2 + static_cast<std::size_t>(trial % 3);  // d = base + 1 <= 5
    const std::size_t n = 3 + static_cast<std::size_t>(rng() % 5);     // n <= 7
    const auto config = testing::random_01_config(rng, base, n);
    const auto verdict = decide_strongly_koszul(config).verdict;
    OracleOptions opts;
    opts.cap = 5;
    const auto oracle = oracle_strongly_koszul(config, opts).verdict;
    const bool agree = (verdict == KoszulVerdict::certified_yes) ==
                       (oracle == OracleVerdict::yes_up_to_cap);
    c.expect(agree && verdict != KoszulVerdict::inconclusive,
             "trial " + std::to_string(trial) + " disagrees");
    (verdict == KoszulVerdict::certified_yes ? yes : no) += 1;
  }
  c.note(std::to_string(yes) + " yes, " + std::to_string(no) + " no");
}

void engine_properties(Criterion& c) {
  std::mt19937 rng(77);
  for (const auto& f : builtin_fixtures()) {
    const auto toric = toric_ideal(f.config);
    c.expect(is_reduced(toric) && s_pairs_reduce_to_zero(toric), f.name + ": S-pair closure");
    std::vector<Binomial> gens(toric.elements().begin(), toric.elements().end());
    const auto order = MonomialOrder::revlex(testing::random_ordering(rng, f.config.num_gens()));
    const auto expected = buchberger(gens, order);
    c.expect(s_pairs_reduce_to_zero(expected), f.name + ": S-pair closure under another ordering");
    bool stable = true;
    for (int shuffle = 0; shuffle < 20; ++shuffle) {
      std::shuffle(gens.begin(), gens.end(), rng);
      for (auto& g : gens) {
        if (rng() & 1U) g = g.negated();
      }
      stable = stable && buchberger(gens, order) == expected;
    }
    c.expect(stable, f.name + ": basis depends on the generator listing");

    if (f.config.num_gens() > 8) continue;
    bool fibres = true;
    for (const auto& g : toric.elements()) fibres = fibres && vanishes_on(f.config, g);
    for (Exponent deg = 1; deg <= 4; ++deg) {
      std::map<ExponentVector, ExponentVector> nf_of_fibre;
      for (const auto& m : testing::monomials_of_degree(f.config.num_gens(), deg)) {
        const auto nf = normal_form(m, toric.elements());
        const auto [it, inserted] = nf_of_fibre.emplace(f.config.evaluate(m), nf);
        fibres = fibres && (inserted || it->second == nf);
      }
    }
    c.expect(fibres, f.name + ": degree <= 4 binomials disagree with brute force");
  }
}

void complexity_contract(Criterion& c) {
  const auto report = decide_strongly_koszul(example17_config());
  c.expect(report.groebner_computations == 28,
           "counted " + std::to_string(report.groebner_computations) + " computations");
  c.expect(report.pair_evidence.size() == 28, "evidence for fewer than 28 pairs");
}

}  // namespace
}  // namespace revlex

int main(int argc, char** argv) {
  using namespace revlex;
  // --quick skips the literal 8! ordering scan in criterion 3.
  const bool full_scan = !(argc > 1 && std::string(argv[1]) == "--quick");

  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"1 star configurations: ideal, universal quadratic, certified-yes", star_configurations},
      {"2 degree-4 Veronese: ideal, pair failures, inconclusive, oracle, not compressed",
       veronese_example},
      {"3 stable set ring of 3 isolated vertices: ideal, cubic initial, certified-yes, compressed",
       [&](Criterion& c) { stable_set_example(c, full_scan); }},
      {"4 graphs on <= 4 vertices: certified-yes iff trivially perfect, compressed iff perfect",
       small_graphs},
      {"5 50 random 0/1 configurations: verdict agrees with oracle (cap 5)", oracle_equivalence},
      {"6 engine: listing independence, S-pair closure, degree <= 4 brute force",
       engine_properties},
      {"7 complexity: exactly 28 pair computations", complexity_contract},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      run(c);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = error.empty() && c.passed();
    failed += ok ? 0 : 1;
    char time_buf[32];
    std::snprintf(time_buf, sizeof time_buf, "%.2fs", secs);
    std::cout << (ok ? "PASS " : "FAIL ") << name << " (" << c.checks() << " checks, " << time_buf
              << ")\n";
    for (const auto& n : c.notes()) std::cout << "     " << n << '\n';
    for (const auto& f : c.failures()) std::cout << "     failed: " << f << '\n';
    if (!error.empty()) std::cout << "     exception: " << error << '\n';
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}

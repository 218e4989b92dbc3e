#include "revlex/fixtures.hpp"

#include "revlex/builders.hpp"
#include "revlex/toric.hpp"

namespace revlex {

Configuration example17_config() {
  std::vector<ExponentVector> cols;
  for (auto e : std::vector<std::vector<Exponent>>{{0, 0, 0, 1},
                                                   {1, 0, 0, 1},
                                                   {0, 1, 0, 1},
                                                   {0, 0, 1, 1},
                                                   {1, 1, 0, 1},
                                                   {0, 1, 1, 1},
                                                   {1, 0, 1, 1},
                                                   {1, 1, 1, 1}}) {
    cols.emplace_back(std::move(e));
  }
  return Configuration(4, std::move(cols));
}

const std::vector<Fixture>& builtin_fixtures() {
  static const std::vector<Fixture> all = [] {
    using V = KoszulVerdict;
    std::vector<Fixture> f;
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto k = std::to_string(n);
      f.push_back({"example15-A" + k, "K[s, t_i s, t_i^-1 s], i <= " + k, star_config(n, true),
                   V::certified_yes, false});
    }
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto k = std::to_string(n);
      f.push_back({"example15-B" + k, "K[t_i s, t_i^-1 s], i <= " + k, star_config(n, false),
                   V::certified_yes, true});
    }
    f.push_back({"example16-veronese24", "fourth Veronese subring of K[t1, t2]", veronese(2, 4),
                 V::inconclusive, false});
    f.push_back({"example17-stableset", "stable set ring of the empty graph on 3 vertices",
                 example17_config(), V::certified_yes, true});
    f.push_back({"p4", "stable set ring of the path on 4 vertices",
                 stable_set_config(SimpleGraph::path(4)), V::no, true});
    f.push_back({"c4", "stable set ring of the 4-cycle", stable_set_config(SimpleGraph::cycle(4)),
                 V::no, true});
    f.push_back({"c5", "stable set ring of the 5-cycle", stable_set_config(SimpleGraph::cycle(5)),
                 V::no, false});
    return f;
  }();
  return all;
}

const Fixture* find_fixture(std::string_view name) {
  for (const auto& f : builtin_fixtures()) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

FixtureOutcome run_fixture(const Fixture& f, Parallelism par) {
  const auto toric = toric_ideal(f.config);
  const auto report = decide_strongly_koszul(f.config, toric.elements(), par);
  CompressedOptions options;
  options.par = par;
  options.cap = f.config.num_gens();
  options.mode = report.verdict == KoszulVerdict::certified_yes ? CompressedMode::certified
                                                               : CompressedMode::exhaustive;
  const auto compressed = is_compressed(f.config, options, &report);

  FixtureOutcome out{report.verdict, compressed.compressed, {}};
  if (out.koszul != f.koszul) {
    out.mismatches.push_back("strongly Koszul: expected " + to_string(f.koszul) + ", got " +
                             to_string(out.koszul));
  }
  if (out.compressed != f.compressed) {
    out.mismatches.push_back(std::string("compressed: expected ") +
                             (f.compressed ? "true" : "false") + ", got " +
                             (out.compressed ? "true" : "false"));
  }
  return out;
}

}  // namespace revlex

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "revlex/configuration.hpp"
#include "revlex/graph.hpp"
#include "revlex/koszul.hpp"

namespace revlex {

/// A configuration with known answers, used by `fixtures` and the tests.
struct Fixture {
  std::string name;
  std::string description;
  Configuration config;
  KoszulVerdict koszul;
  bool compressed;
};

/// example15-A1..A3, example15-B1..B3, example16-veronese24,
/// example17-stableset, p4, c4, c5.
const std::vector<Fixture>& builtin_fixtures();
const Fixture* find_fixture(std::string_view name);

/// K[t4, t1t4, t2t4, t3t4, t1t2t4, t2t3t4, t1t3t4, t1t2t3t4], columns in
/// that order: the stable set ring of the empty graph on three vertices.
Configuration example17_config();

struct FixtureOutcome {
  KoszulVerdict koszul;
  bool compressed;
  /// Empty when both answers match.
  std::vector<std::string> mismatches;
};

/// Recomputes a fixture: the strong Koszul verdict, then compressedness
/// (certified when possible, otherwise exhaustive by facet width).
FixtureOutcome run_fixture(const Fixture& f, Parallelism par = {});

}  // namespace revlex

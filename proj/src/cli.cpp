#include "revlex/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <stdexcept>

#include "revlex/builders.hpp"
#include "revlex/fixtures.hpp"
#include "revlex/io.hpp"
#include "revlex/koszul.hpp"
#include "revlex/oracle.hpp"
#include "revlex/report.hpp"
#include "revlex/toric.hpp"

namespace revlex::cli {

namespace {

using nlohmann::json;

class Stopwatch {
 public:
  double lap_ms() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Common {
  std::string config_path;
  std::string format = "json";
  int threads = 0;
};

void add_format(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
}

// "exhaustive" or "sample N"; the count defaults to 1000.
struct ModeSpec {
  std::string mode;
  std::size_t count = 1000;
};

ModeSpec parse_mode_spec(const std::vector<std::string>& tokens, const char* flag) {
  ModeSpec spec;
  spec.mode = tokens.at(0);
  if (tokens.size() == 2) {
    if (spec.mode != "sample") {
      throw Error(std::string(flag) + ": only 'sample' takes a count");
    }
    try {
      std::size_t used = 0;
      const long long v = std::stoll(tokens[1], &used);
      if (used != tokens[1].size() || v <= 0) throw std::invalid_argument("count");
      spec.count = static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
      throw Error(std::string(flag) + ": sample count must be a positive integer, got '" +
                  tokens[1] + "'");
    }
  }
  return spec;
}

int cmd_gb(const Common& c, const std::string& order_text, const std::string& kind,
           std::ostream& out) {
  const auto config = load_config(c.config_path);
  const auto& names = config.variable_names();
  const auto ordering = order_text.empty() ? VariableOrdering::identity(config.num_gens())
                                           : VariableOrdering::parse(order_text, names);
  const auto toric = toric_ideal(config);
  const auto gb = buchberger(toric.elements(), MonomialOrder(ordering, parse_order_kind(kind)));
  if (c.format == "json") {
    auto j = basis_to_json(gb, names);
    json initials = json::array();
    for (const auto& m : initial_ideal_min_gens(gb)) initials.push_back(format_monomial(m, names));
    j["initial_ideal_min_gens"] = std::move(initials);
    out << j.dump(2) << '\n';
  } else {
    out << basis_to_text(gb, names);
  }
  return kExitOk;
}

int cmd_toric(const Common& c, std::ostream& out) {
  const auto config = load_config(c.config_path);
  const auto& names = config.variable_names();
  ToricStats stats;
  const auto gb = toric_ideal(config, {}, &stats);
  if (c.format == "json") {
    auto j = basis_to_json(gb, names);
    j["lattice_rank"] = stats.lattice_rank;
    out << j.dump(2) << '\n';
  } else {
    out << "# lattice rank " << stats.lattice_rank << '\n' << basis_to_text(gb, names);
  }
  return kExitOk;
}

struct AnalyzeArgs {
  std::vector<std::string> compressed;
  std::vector<std::string> universal;
  std::string method = "facet-width";
  std::uint64_t seed = 0;
  std::size_t exhaustive_cap = 8;
  bool oracle = false;
  std::size_t oracle_cap = kDefaultOracleCap;
};

int cmd_analyze(const Common& c, const AnalyzeArgs& a, std::ostream& out) {
  const auto config = load_config(c.config_path);
  const Parallelism par{c.threads};
  const std::size_t n = config.num_gens();

  AnalysisReport report;
  report.num_gens = n;
  report.dim_t = config.dim_t();
  report.squarefree = config.is_squarefree();
  report.variable_names = config.variable_names();
  report.seed = a.seed;

  Stopwatch clock;
  const auto toric = toric_ideal(config);
  report.timings_ms["toric_ideal"] = clock.lap_ms();
  report.koszul = decide_strongly_koszul(config, toric.elements(), par);
  report.timings_ms["strongly_koszul"] = clock.lap_ms();

  // Without --compressed: certified when the verdict allows, otherwise
  // exhaustive within the cap, otherwise skipped.
  std::optional<ModeSpec> cmode;
  if (!a.compressed.empty()) {
    cmode = parse_mode_spec(a.compressed, "--compressed");
  } else if (report.koszul.verdict == KoszulVerdict::certified_yes) {
    cmode = ModeSpec{"certified"};
  } else if (n <= a.exhaustive_cap) {
    cmode = ModeSpec{"exhaustive"};
  }
  if (cmode) {
    CompressedOptions opt;
    opt.mode = parse_compressed_mode(cmode->mode);
    opt.method = a.method == "ordering-scan" ? ExhaustiveMethod::ordering_scan
                                             : ExhaustiveMethod::facet_width;
    opt.sample_count = cmode->count;
    opt.seed = a.seed;
    opt.cap = a.exhaustive_cap;
    opt.par = par;
    CompressedSection sec;
    sec.result = is_compressed(config, opt, &report.koszul);
    if (opt.mode == CompressedMode::exhaustive) sec.method = a.method;
    if (opt.mode == CompressedMode::sample) sec.sample_count = opt.sample_count;
    report.compressed = std::move(sec);
    report.timings_ms["compressed"] = clock.lap_ms();
  }

  if (!a.universal.empty()) {
    const auto spec = parse_mode_spec(a.universal, "--universal");
    UniversalOptions opt;
    if (spec.mode == "exhaustive") {
      opt.mode = ScanMode::exhaustive;
    } else if (spec.mode == "sample") {
      opt.mode = ScanMode::sample;
    } else {
      throw Error("--universal: expected 'exhaustive' or 'sample N', got '" + spec.mode + "'");
    }
    opt.sample_count = spec.count;
    opt.seed = a.seed;
    opt.cap = a.exhaustive_cap;
    opt.par = par;
    UniversalSection sec;
    sec.result = universal_revlex_quadratic(config, opt);
    if (opt.mode == ScanMode::sample) sec.sample_count = opt.sample_count;
    report.universal = std::move(sec);
    report.timings_ms["universal_revlex_quadratic"] = clock.lap_ms();
  }

  if (a.oracle) {
    OracleOptions opt;
    opt.cap = a.oracle_cap;
    opt.par = par;
    report.oracle = oracle_strongly_koszul(config, opt);
    report.timings_ms["oracle"] = clock.lap_ms();
  }

  if (c.format == "json") {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << to_text(report);
  }
  return kExitOk;
}

int cmd_oracle(const Common& c, std::size_t cap, const std::vector<std::size_t>& pair,
               std::ostream& out) {
  const auto config = load_config(c.config_path);
  const auto& names = config.variable_names();
  if (!pair.empty()) {
    const std::size_t n = config.num_gens();
    for (auto p : pair) {
      if (p < 1 || p > n) {
        throw Error("--pair: index " + std::to_string(p) + " outside 1.." + std::to_string(n));
      }
    }
    if (cap < 2) throw Error("--cap must be at least 2 with --pair");
    const auto gens = intersection_min_gens(config, pair[0] - 1, pair[1] - 1, cap);
    if (c.format == "json") {
      json list = json::array();
      for (const auto& g : gens) {
        list.push_back({{"degree", g.degree}, {"element", to_json(g.element)}});
      }
      out << json{{"i", pair[0]}, {"j", pair[1]}, {"cap", cap}, {"min_gens", std::move(list)}}
                 .dump(2)
          << '\n';
    } else {
      out << "minimal generators of (" << names[pair[0] - 1] << ") ∩ (" << names[pair[1] - 1]
          << ") up to degree " << cap << ":\n";
      for (const auto& g : gens) {
        out << "  degree " << g.degree << ": " << to_json(g.element).dump() << '\n';
      }
    }
    return kExitOk;
  }
  OracleOptions opt;
  opt.cap = cap;
  opt.par = Parallelism{c.threads};
  const auto result = oracle_strongly_koszul(config, opt);
  if (c.format == "json") {
    json w = nullptr;
    if (result.witness) {
      w = {{"i", result.witness->i + 1},
           {"j", result.witness->j + 1},
           {"degree", result.witness->generator.degree},
           {"element", to_json(result.witness->generator.element)}};
    }
    out << json{{"verdict", to_string(result.verdict)}, {"cap", result.cap}, {"witness", w}}.dump(2)
        << '\n';
  } else {
    out << "oracle (cap " << result.cap << "): " << to_string(result.verdict) << '\n';
    if (result.witness) {
      out << "  (" << names[result.witness->i] << ") ∩ (" << names[result.witness->j]
          << ") needs a generator of degree " << result.witness->generator.degree << ": "
          << to_json(result.witness->generator.element).dump() << '\n';
    }
  }
  return kExitOk;
}

int cmd_fixtures(bool list, const Common& c, std::ostream& out) {
  if (list) {
    for (const auto& f : builtin_fixtures()) out << f.name << "  " << f.description << '\n';
    return kExitOk;
  }
  bool ok = true;
  for (const auto& f : builtin_fixtures()) {
    const auto outcome = run_fixture(f, Parallelism{c.threads});
    const bool pass = outcome.mismatches.empty();
    ok = ok && pass;
    out << (pass ? "ok   " : "FAIL ") << f.name << ": strongly Koszul "
        << to_string(outcome.koszul) << ", compressed " << (outcome.compressed ? "yes" : "no")
        << '\n';
    for (const auto& m : outcome.mismatches) out << "     " << m << '\n';
  }
  return ok ? kExitOk : kExitRegression;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toric ideals, revlex Groebner bases, strong Koszulness and compressedness"};
  app.name(args.empty() ? "revlex" : args.front());
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Common common;
  app.add_option("--threads", common.threads,
                 std::string("Worker threads (default: $") + kThreadsEnv + " or all cores)")
      ->check(CLI::NonNegativeNumber);
  app.fallthrough();

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of I_A under a variable ordering");
  std::string order_text;
  std::string kind = "revlex";
  gb->add_option("--config", common.config_path, "Configuration file")->required();
  gb->add_option("--order", order_text, "Ordering such as \"x4<x3<x2<x1\" (default x1<...<xn)");
  gb->add_option("--kind", kind, "Order kind")
      ->check(CLI::IsMember({"revlex", "lex"}))
      ->capture_default_str();
  add_format(gb, common);

  auto* toric = app.add_subcommand("toric-ideal", "Reduced basis of I_A under x1<...<xn");
  toric->add_option("--config", common.config_path, "Configuration file")->required();
  add_format(toric, common);

  auto* analyze = app.add_subcommand("analyze", "Strong Koszulness and related properties");
  AnalyzeArgs aa;
  analyze->add_option("--config", common.config_path, "Configuration file")->required();
  analyze->add_option("--compressed", aa.compressed, "certified | exhaustive | sample N")
      ->expected(1, 2);
  analyze->add_option("--universal", aa.universal, "exhaustive | sample N")->expected(1, 2);
  analyze->add_option("--method", aa.method, "Exhaustive compressedness method")
      ->check(CLI::IsMember({"facet-width", "ordering-scan"}))
      ->capture_default_str();
  analyze->add_option("--seed", aa.seed, "Seed for sampled orderings")->capture_default_str();
  analyze->add_option("--exhaustive-cap", aa.exhaustive_cap,
                      "Largest number of variables for exhaustive modes")
      ->capture_default_str();
  analyze->add_flag("--oracle", aa.oracle, "Also run the semigroup oracle");
  analyze->add_option("--cap", aa.oracle_cap, "Degree cap for the oracle")->capture_default_str();
  add_format(analyze, common);

  auto* oracle = app.add_subcommand("oracle", "Brute-force semigroup test of strong Koszulness");
  std::size_t cap = kDefaultOracleCap;
  std::vector<std::size_t> pair;
  oracle->add_option("--config", common.config_path, "Configuration file")->required();
  oracle->add_option("--cap", cap, "Degree cap")->capture_default_str();
  oracle->add_option("--pair", pair, "Only list the generators of (u_i) ∩ (u_j)")->expected(2);
  add_format(oracle, common);

  auto* build = app.add_subcommand("build", "Write a configuration file for a built-in family");
  build->require_subcommand(1);
  auto* ver = build->add_subcommand("veronese", "All monomials of one degree");
  std::size_t vars = 0;
  std::size_t degree = 0;
  ver->add_option("--vars", vars, "Number of variables")->required();
  ver->add_option("--degree", degree, "Degree")->required();
  auto* stable = build->add_subcommand("stable-set", "Stable set ring of a graph");
  std::string graph_path;
  stable->add_option("--graph", graph_path, "Graph file")->required();
  auto* star = build->add_subcommand("star", "K[t_i s, t_i^-1 s], optionally with s");
  std::size_t star_n = 0;
  bool with_unit = false;
  star->add_option("--n", star_n, "n")->required();
  star->add_flag("--with-unit", with_unit, "Include s itself");

  auto* fixtures = app.add_subcommand("fixtures", "Recheck the built-in example corpus");
  bool list = false;
  fixtures->add_flag("--list", list, "Only list the fixtures");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (gb->parsed()) return cmd_gb(common, order_text, kind, out);
    if (toric->parsed()) return cmd_toric(common, out);
    if (analyze->parsed()) return cmd_analyze(common, aa, out);
    if (oracle->parsed()) return cmd_oracle(common, cap, pair, out);
    if (build->parsed()) {
      if (ver->parsed()) out << write_config_json(veronese(vars, degree));
      if (stable->parsed()) out << write_config_json(stable_set_config(load_graph(graph_path)));
      if (star->parsed()) out << write_config_json(star_config(star_n, with_unit));
      return kExitOk;
    }
    if (fixtures->parsed()) return cmd_fixtures(list, common, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
  return kExitInputError;
}

}  // namespace revlex::cli

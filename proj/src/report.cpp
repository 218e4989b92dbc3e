#include "revlex/report.hpp"

#include <sstream>

#include "revlex/io.hpp"

namespace revlex {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(std::string("report: missing field '") + key + "'");
  }
  return j.at(key);
}

template <typename T>
T get(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::exception& e) {
    throw Error(std::string("report: bad field '") + key + "': " + e.what());
  }
}

std::size_t index_from_json(const json& j, const char* key) {
  const auto v = get<std::int64_t>(j, key);
  if (v < 1) throw Error(std::string("report: '") + key + "' must be a 1-based index");
  return static_cast<std::size_t>(v - 1);
}

json witness_json(const std::optional<VariableOrdering>& ordering,
                  const std::optional<Binomial>& element, std::span<const std::string> names) {
  if (!ordering) return nullptr;
  auto e = to_json(*element);
  e["text"] = element->to_string(names);
  return json{{"ordering", ordering->to_string(names)}, {"element", std::move(e)}};
}

void witness_from_json(const json& j, std::span<const std::string> names,
                       std::optional<VariableOrdering>& ordering,
                       std::optional<Binomial>& element) {
  const auto& w = field(j, "witness");
  if (w.is_null()) return;
  ordering = VariableOrdering::parse(get<std::string>(w, "ordering"), names);
  element = binomial_from_json(field(w, "element"));
}

ScanMode parse_scan_mode(const std::string& s) {
  if (s == "exhaustive") return ScanMode::exhaustive;
  if (s == "sample") return ScanMode::sample;
  throw Error("report: unknown scan mode '" + s + "'");
}

}  // namespace

json to_json(const KoszulReport& report, std::span<const std::string> names) {
  json pairs = json::array();
  for (const auto& p : report.pair_evidence) {
    json e{{"i", p.i + 1},
           {"j", p.j + 1},
           {"ordering", p.ordering.to_string(names)},
           {"passed", p.passed}};
    if (p.witness) {
      e["witness"] = to_json(*p.witness);
      e["witness_text"] = format_monomial(*p.witness, names);
    } else {
      e["witness"] = nullptr;
    }
    pairs.push_back(std::move(e));
  }
  json flagged = json::array();
  for (const auto& g : report.flagged_squares) {
    auto e = to_json(g);
    e["text"] = g.to_string(names);
    flagged.push_back(std::move(e));
  }
  return json{{"verdict", to_string(report.verdict)},
              {"squarefree", report.squarefree},
              {"groebner_computations", report.groebner_computations},
              {"pairs", std::move(pairs)},
              {"flagged_squares", std::move(flagged)},
              {"notes", report.notes}};
}

KoszulReport koszul_report_from_json(const json& j, std::span<const std::string> names) {
  KoszulReport r;
  r.verdict = parse_koszul_verdict(get<std::string>(j, "verdict"));
  r.squarefree = get<bool>(j, "squarefree");
  r.groebner_computations = get<std::size_t>(j, "groebner_computations");
  for (const auto& p : field(j, "pairs")) {
    PairEvidence e;
    e.i = index_from_json(p, "i");
    e.j = index_from_json(p, "j");
    e.ordering = VariableOrdering::parse(get<std::string>(p, "ordering"), names);
    e.passed = get<bool>(p, "passed");
    if (!field(p, "witness").is_null()) e.witness = exponent_from_json(p.at("witness"));
    r.pair_evidence.push_back(std::move(e));
  }
  for (const auto& g : field(j, "flagged_squares")) {
    r.flagged_squares.push_back(binomial_from_json(g));
  }
  r.notes = get<std::vector<std::string>>(j, "notes");
  return r;
}

json to_json(const AnalysisReport& report) {
  const auto& names = report.variable_names;
  json out{{"tool_version", report.tool_version},
           {"configuration",
            {{"n", report.num_gens},
             {"d", report.dim_t},
             {"squarefree", report.squarefree},
             {"variables", names}}},
           {"seed", report.seed},
           {"koszul", to_json(report.koszul, names)}};
  if (report.compressed) {
    const auto& c = *report.compressed;
    out["compressed"] = {
        {"mode", to_string(c.result.mode)},
        {"method", c.method},
        {"sample_count", c.sample_count},
        {"compressed", c.result.compressed},
        {"groebner_computations", c.result.groebner_computations},
        {"witness", witness_json(c.result.witness_ordering, c.result.witness_element, names)}};
  }
  if (report.universal) {
    const auto& u = *report.universal;
    out["universal_revlex_quadratic"] = {
        {"mode", to_string(u.result.mode)},
        {"sample_count", u.sample_count},
        {"holds", u.result.holds},
        {"groebner_computations", u.result.groebner_computations},
        {"witness", witness_json(u.result.witness_ordering, u.result.witness_element, names)}};
  }
  if (report.oracle) {
    const auto& o = *report.oracle;
    json w = nullptr;
    if (o.witness) {
      w = {{"i", o.witness->i + 1},
           {"j", o.witness->j + 1},
           {"degree", o.witness->generator.degree},
           {"element", to_json(o.witness->generator.element)}};
    }
    out["oracle"] = {{"verdict", to_string(o.verdict)}, {"cap", o.cap}, {"witness", std::move(w)}};
  }
  out["timings_ms"] = report.timings_ms;
  return out;
}

AnalysisReport analysis_report_from_json(const json& j) {
  AnalysisReport r;
  r.tool_version = get<std::string>(j, "tool_version");
  const auto& c = field(j, "configuration");
  r.num_gens = get<std::size_t>(c, "n");
  r.dim_t = get<std::size_t>(c, "d");
  r.squarefree = get<bool>(c, "squarefree");
  r.variable_names = get<std::vector<std::string>>(c, "variables");
  r.seed = get<std::uint64_t>(j, "seed");
  const auto& names = r.variable_names;
  r.koszul = koszul_report_from_json(field(j, "koszul"), names);
  if (j.contains("compressed")) {
    const auto& s = j.at("compressed");
    CompressedSection sec;
    sec.result.mode = parse_compressed_mode(get<std::string>(s, "mode"));
    sec.method = get<std::string>(s, "method");
    sec.sample_count = get<std::size_t>(s, "sample_count");
    sec.result.compressed = get<bool>(s, "compressed");
    sec.result.groebner_computations = get<std::size_t>(s, "groebner_computations");
    witness_from_json(s, names, sec.result.witness_ordering, sec.result.witness_element);
    r.compressed = std::move(sec);
  }
  if (j.contains("universal_revlex_quadratic")) {
    const auto& s = j.at("universal_revlex_quadratic");
    UniversalSection sec;
    sec.result.mode = parse_scan_mode(get<std::string>(s, "mode"));
    sec.sample_count = get<std::size_t>(s, "sample_count");
    sec.result.holds = get<bool>(s, "holds");
    sec.result.groebner_computations = get<std::size_t>(s, "groebner_computations");
    witness_from_json(s, names, sec.result.witness_ordering, sec.result.witness_element);
    r.universal = std::move(sec);
  }
  if (j.contains("oracle")) {
    const auto& s = j.at("oracle");
    OracleResult o;
    o.verdict = parse_oracle_verdict(get<std::string>(s, "verdict"));
    o.cap = get<std::size_t>(s, "cap");
    const auto& w = field(s, "witness");
    if (!w.is_null()) {
      o.witness = OracleWitness{index_from_json(w, "i"), index_from_json(w, "j"),
                                {get<std::size_t>(w, "degree"),
                                 exponent_from_json(field(w, "element"))}};
    }
    r.oracle = std::move(o);
  }
  r.timings_ms = get<std::map<std::string, double>>(j, "timings_ms");
  return r;
}

std::string to_text(const AnalysisReport& report) {
  const auto& names = report.variable_names;
  std::ostringstream out;
  out << "configuration: n = " << report.num_gens << ", d = " << report.dim_t
      << (report.squarefree ? ", squarefree" : ", not squarefree") << '\n';
  const auto& k = report.koszul;
  out << "strongly Koszul: " << to_string(k.verdict) << " (" << k.groebner_computations
      << " pair checks)\n";
  for (const auto& p : k.pair_evidence) {
    if (p.passed) continue;
    out << "  pair (" << p.i + 1 << ", " << p.j + 1 << ") fails under "
        << p.ordering.to_string(names) << ": " << format_monomial(*p.witness, names) << '\n';
  }
  for (const auto& g : k.flagged_squares) out << "  square relation: " << g.to_string(names) << '\n';
  for (const auto& note : k.notes) out << "  note: " << note << '\n';
  if (report.compressed) {
    const auto& c = report.compressed->result;
    out << "compressed (" << to_string(c.mode) << "): " << (c.compressed ? "yes" : "no") << '\n';
    if (c.witness_ordering) {
      out << "  under " << c.witness_ordering->to_string(names) << ": "
          << c.witness_element->to_string(names) << '\n';
    }
  }
  if (report.universal) {
    const auto& u = report.universal->result;
    out << "quadratic under every revlex order (" << to_string(u.mode)
        << "): " << (u.holds ? "yes" : "no") << '\n';
    if (u.witness_ordering) {
      out << "  under " << u.witness_ordering->to_string(names) << ": "
          << u.witness_element->to_string(names) << '\n';
    }
  }
  if (report.oracle) {
    const auto& o = *report.oracle;
    out << "oracle (cap " << o.cap << "): " << to_string(o.verdict) << '\n';
    if (o.witness) {
      out << "  (u" << o.witness->i + 1 << ") ∩ (u" << o.witness->j + 1
          << ") has a minimal generator of degree " << o.witness->generator.degree << '\n';
    }
  }
  for (const auto& [phase, ms] : report.timings_ms) {
    out << "time " << phase << ": " << ms << " ms\n";
  }
  return out.str();
}

}  // namespace revlex

#include "revlex/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace revlex {

namespace {

using nlohmann::json;

Exponent exponent_value(const json& j, std::string_view what) {
  if (!j.is_number_integer()) {
    throw Error(std::string(what) + ": expected an integer, got " + j.dump());
  }
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<Exponent>::min() || v > std::numeric_limits<Exponent>::max()) {
    throw Error(std::string(what) + ": exponent " + std::to_string(v) + " out of range");
  }
  return static_cast<Exponent>(v);
}

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    out.push_back(std::move(line));
    start = end + 1;
  }
  return out;
}

std::vector<std::int64_t> integers_of(const std::string& line, std::size_t line_no) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (true) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
    std::int64_t v = 0;
    const char* first = line.data() + pos;
    const char* last = line.data() + end;
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
      throw Error("line " + std::to_string(line_no) + ": '" + line.substr(pos, end - pos) +
                  "' is not an integer");
    }
    out.push_back(v);
    pos = end;
  }
  return out;
}

}  // namespace

Configuration config_from_json(const json& j) {
  if (!j.is_object()) throw Error("configuration: expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "dim_t" && key != "generators" && key != "labels") {
      throw Error("configuration: unknown key '" + key + "'");
    }
  }
  if (!j.contains("dim_t")) throw Error("configuration: missing 'dim_t'");
  if (!j.contains("generators")) throw Error("configuration: missing 'generators'");
  const auto& dim = j.at("dim_t");
  if (!dim.is_number_integer() || dim.get<std::int64_t>() <= 0) {
    throw Error("configuration: 'dim_t' must be a positive integer");
  }
  const auto d = static_cast<std::size_t>(dim.get<std::int64_t>());
  const auto& gens = j.at("generators");
  if (!gens.is_array()) throw Error("configuration: 'generators' must be an array");
  std::vector<ExponentVector> columns;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto& col = gens[g];
    const std::string where = "generator " + std::to_string(g + 1);
    if (!col.is_array()) throw Error(where + ": expected an array of integers");
    if (col.size() != d) {
      throw Error(where + " has " + std::to_string(col.size()) + " entries, expected dim_t = " +
                  std::to_string(d));
    }
    ExponentVector e(d);
    for (std::size_t k = 0; k < d; ++k) e[k] = exponent_value(col[k], where);
    columns.push_back(std::move(e));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const auto& ls = j.at("labels");
    if (!ls.is_array()) throw Error("configuration: 'labels' must be an array of strings");
    for (const auto& l : ls) {
      if (!l.is_string()) throw Error("configuration: 'labels' must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return Configuration(d, std::move(columns), std::move(labels));
}

Configuration parse_config_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("configuration: malformed JSON: ") + e.what());
  }
  return config_from_json(j);
}

Configuration parse_config_matrix(std::string_view text) {
  std::vector<std::vector<std::int64_t>> rows;
  const auto lines = lines_of(text);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    auto row = integers_of(lines[k], k + 1);
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error("line " + std::to_string(k + 1) + ": row has " + std::to_string(row.size()) +
                  " entries, expected " + std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error("configuration: empty matrix");
  const std::size_t d = rows.size();
  const std::size_t n = rows.front().size();
  std::vector<ExponentVector> columns(n, ExponentVector(d));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      columns[c][r] = exponent_value(json(rows[r][c]), "matrix entry");
    }
  }
  return Configuration(d, std::move(columns));
}

Configuration parse_config(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_config_json(text);
  return parse_config_matrix(text);
}

std::string write_config_json(const Configuration& config) {
  std::ostringstream out;
  out << "{\n  \"dim_t\": " << config.dim_t() << ",\n  \"generators\": [\n";
  for (std::size_t i = 0; i < config.num_gens(); ++i) {
    out << "    [";
    const auto& col = config.column(i);
    for (std::size_t k = 0; k < col.size(); ++k) {
      if (k > 0) out << ", ";
      out << col[k];
    }
    out << ']' << (i + 1 < config.num_gens() ? "," : "") << '\n';
  }
  out << "  ]";
  if (!config.labels().empty()) {
    out << ",\n  \"labels\": [";
    for (std::size_t i = 0; i < config.labels().size(); ++i) {
      if (i > 0) out << ", ";
      out << json(config.labels()[i]).dump();
    }
    out << ']';
  }
  out << "\n}\n";
  return out.str();
}

std::string write_config_matrix(const Configuration& config) {
  std::ostringstream out;
  for (std::size_t r = 0; r < config.dim_t(); ++r) {
    for (std::size_t c = 0; c < config.num_gens(); ++c) {
      if (c > 0) out << ' ';
      out << config.column(c)[r];
    }
    out << '\n';
  }
  return out.str();
}

SimpleGraph parse_graph(std::string_view text) {
  const auto lines = lines_of(text);
  std::optional<std::size_t> d;
  std::vector<SimpleGraph::Edge> edges;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const auto values = integers_of(lines[k], k + 1);
    if (values.empty()) continue;
    const std::string where = "graph line " + std::to_string(k + 1);
    if (!d) {
      if (values.size() != 1 || values[0] <= 0 || values[0] > 64) {
        throw Error(where + ": expected the vertex count (1..64)");
      }
      d = static_cast<std::size_t>(values[0]);
      continue;
    }
    if (values.size() != 2) throw Error(where + ": expected an edge 'u v'");
    for (auto v : values) {
      if (v < 1 || v > static_cast<std::int64_t>(*d)) {
        throw Error(where + ": vertex " + std::to_string(v) + " outside 1.." +
                    std::to_string(*d));
      }
    }
    edges.emplace_back(static_cast<int>(values[0] - 1), static_cast<int>(values[1] - 1));
  }
  if (!d) throw Error("graph: missing vertex count");
  return SimpleGraph(*d, std::move(edges));
}

std::string write_graph(const SimpleGraph& g) {
  std::ostringstream out;
  out << g.num_vertices() << '\n';
  for (const auto& [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "': file not found or unreadable");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Configuration load_config(const std::filesystem::path& path) {
  const auto text = read_file(path);
  try {
    return parse_config(text);
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

SimpleGraph load_graph(const std::filesystem::path& path) {
  const auto text = read_file(path);
  try {
    return parse_graph(text);
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

json to_json(const ExponentVector& v) {
  return json(std::vector<Exponent>(v.entries().begin(), v.entries().end()));
}

ExponentVector exponent_from_json(const json& j) {
  if (!j.is_array()) throw Error("expected an exponent array, got " + j.dump());
  ExponentVector v(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) v[k] = exponent_value(j[k], "exponent");
  return v;
}

json to_json(const Binomial& g) {
  return json{{"plus", to_json(g.plus())}, {"minus", to_json(g.minus())}};
}

Binomial binomial_from_json(const json& j) {
  if (!j.is_object() || !j.contains("plus") || !j.contains("minus")) {
    throw Error("expected a binomial {\"plus\": [...], \"minus\": [...]}");
  }
  return Binomial(exponent_from_json(j.at("plus")), exponent_from_json(j.at("minus")));
}

json basis_to_json(const GroebnerBasis& gb, std::span<const std::string> names) {
  json elements = json::array();
  for (const auto& g : gb.elements()) {
    auto e = to_json(g);
    e["text"] = g.to_string(names);
    elements.push_back(std::move(e));
  }
  return json{{"order", gb.order().ordering().to_string(names)},
              {"kind", std::string(to_string(gb.order().kind()))},
              {"elements", std::move(elements)}};
}

std::string basis_to_text(const GroebnerBasis& gb, std::span<const std::string> names) {
  std::ostringstream out;
  out << "# " << to_string(gb.order().kind()) << ' ' << gb.order().ordering().to_string(names)
      << ", " << gb.size() << " elements\n";
  for (const auto& g : gb.elements()) out << g.to_string(names) << '\n';
  return out.str();
}

}  // namespace revlex

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "revlex/binomial.hpp"
#include "revlex/configuration.hpp"
#include "revlex/graph.hpp"
#include "revlex/groebner.hpp"

namespace revlex {

// Configuration files come in two shapes:
//
//   {"dim_t": 2, "generators": [[4, 0], [3, 1]], "labels": ["a", "b"]}
//
// ("labels" optional), or a whitespace matrix with d rows and n columns,
// one generator per column. '#' starts a comment in the matrix form.

Configuration config_from_json(const nlohmann::json& j);
Configuration parse_config_json(std::string_view text);
Configuration parse_config_matrix(std::string_view text);
/// JSON if the first non-blank character is '{', otherwise matrix.
Configuration parse_config(std::string_view text);

/// Canonical JSON: fixed key order, one generator per line. Reading the
/// output back gives an equal Configuration, and writing that again gives
/// identical bytes.
std::string write_config_json(const Configuration& config);
std::string write_config_matrix(const Configuration& config);

/// First line the vertex count, then one 1-based "u v" edge per line.
SimpleGraph parse_graph(std::string_view text);
std::string write_graph(const SimpleGraph& g);

/// Whole file as a string; Error naming the path when it cannot be read.
std::string read_file(const std::filesystem::path& path);
Configuration load_config(const std::filesystem::path& path);
SimpleGraph load_graph(const std::filesystem::path& path);

nlohmann::json to_json(const ExponentVector& v);
ExponentVector exponent_from_json(const nlohmann::json& j);
/// {"plus": [...], "minus": [...]}
nlohmann::json to_json(const Binomial& g);
Binomial binomial_from_json(const nlohmann::json& j);

nlohmann::json basis_to_json(const GroebnerBasis& gb,
                             std::span<const std::string> names);
std::string basis_to_text(const GroebnerBasis& gb, std::span<const std::string> names);

}  // namespace revlex

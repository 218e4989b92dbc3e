#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "revlex/configuration.hpp"
#include "revlex/koszul.hpp"
#include "revlex/oracle.hpp"

namespace revlex {

inline constexpr const char* kToolVersion = "0.1.0";

struct CompressedSection {
  CompressedResult result;
  /// "facet-width" or "ordering-scan" for exhaustive mode, empty otherwise.
  std::string method;
  std::size_t sample_count = 0;

  friend bool operator==(const CompressedSection&, const CompressedSection&) = default;
};

struct UniversalSection {
  UniversalResult result;
  std::size_t sample_count = 0;

  friend bool operator==(const UniversalSection&, const UniversalSection&) = default;
};

/// Everything `analyze` prints.
struct AnalysisReport {
  std::string tool_version = kToolVersion;
  std::size_t num_gens = 0;
  std::size_t dim_t = 0;
  bool squarefree = false;
  std::vector<std::string> variable_names;
  KoszulReport koszul;
  std::optional<CompressedSection> compressed;
  std::optional<UniversalSection> universal;
  std::optional<OracleResult> oracle;
  std::uint64_t seed = 0;
  /// Phase name -> wall time. Not part of report equality checks in tests;
  /// compare with timings cleared.
  std::map<std::string, double> timings_ms;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

nlohmann::json to_json(const KoszulReport& report, std::span<const std::string> names);
KoszulReport koszul_report_from_json(const nlohmann::json& j,
                                     std::span<const std::string> names);

nlohmann::json to_json(const AnalysisReport& report);
/// Inverse of to_json. Human-readable "text" fields are ignored on input.
AnalysisReport analysis_report_from_json(const nlohmann::json& j);

std::string to_text(const AnalysisReport& report);

}  // namespace revlex

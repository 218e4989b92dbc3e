#include "revlex/configuration.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "revlex/lattice.hpp"

namespace revlex {

namespace {

// Integer functional taking one positive value on every column, if any.
std::optional<GradingFunctional> find_grading(
    std::size_t d, std::span<const ExponentVector> columns) {
  // Kernel of the n x (d+1) matrix with rows (u_i, -1): vectors (w, c) with
  // w . u_i = c for all i.
  IntMatrix rows;
  rows.reserve(columns.size());
  for (const auto& col : columns) {
    IntVector row(col.begin(), col.end());
    row.push_back(-1);
    rows.push_back(std::move(row));
  }
  const auto kernel = integer_kernel(rows, d + 1);
  const IntVector* best = nullptr;
  for (const auto& v : kernel) {
    if (v[d] == 0) continue;
    if (best == nullptr || std::llabs(v[d]) < std::llabs((*best)[d])) best = &v;
  }
  if (best == nullptr) return std::nullopt;
  GradingFunctional g;
  const std::int64_t sign = (*best)[d] > 0 ? 1 : -1;
  g.weights.assign(best->begin(), best->begin() + static_cast<std::ptrdiff_t>(d));
  for (auto& w : g.weights) w *= sign;
  g.value = (*best)[d] * sign;
  return g;
}

}  // namespace

Configuration::Configuration(std::size_t dim_t,
                             std::vector<ExponentVector> columns,
                             std::vector<std::string> labels)
    : dim_t_(dim_t), columns_(std::move(columns)), labels_(std::move(labels)) {
  if (dim_t_ == 0) throw Error("configuration: dim_t must be positive");
  if (columns_.empty()) throw Error("configuration: no generators");
  if (columns_.size() > 64) {
    throw Error("configuration: at most 64 generators are supported");
  }
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i].size() != dim_t_) {
      throw Error("configuration: generator " + std::to_string(i + 1) +
                  " has length " + std::to_string(columns_[i].size()) +
                  ", expected " + std::to_string(dim_t_));
    }
  }
  std::set<ExponentVector> distinct(columns_.begin(), columns_.end());
  if (distinct.size() != columns_.size()) {
    throw Error("configuration: generators are not distinct");
  }
  if (!labels_.empty()) {
    if (labels_.size() != columns_.size()) {
      throw Error("configuration: " + std::to_string(labels_.size()) +
                  " labels for " + std::to_string(columns_.size()) +
                  " generators");
    }
    std::set<std::string> unique(labels_.begin(), labels_.end());
    if (unique.size() != labels_.size()) {
      throw Error("configuration: labels are not distinct");
    }
    for (const auto& l : labels_) {
      if (l.empty() || l.find('<') != std::string::npos ||
          l.find_first_of(" \t\r\n") != std::string::npos) {
        throw Error("configuration: invalid label '" + l + "'");
      }
    }
    names_ = labels_;
  } else {
    names_ = default_names(columns_.size());
  }
  auto grading = find_grading(dim_t_, columns_);
  if (!grading) {
    throw Error(
        "configuration: generators are not homogeneous (no linear functional "
        "is constant on all columns)");
  }
  grading_ = std::move(*grading);
  squarefree_ = std::all_of(columns_.begin(), columns_.end(),
                            [](const ExponentVector& c) { return c.is_squarefree(); });
}

std::optional<std::size_t> Configuration::find_column(const ExponentVector& t) const {
  const auto it = std::find(columns_.begin(), columns_.end(), t);
  if (it == columns_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - columns_.begin());
}

ExponentVector Configuration::evaluate(const ExponentVector& x) const {
  if (x.size() != columns_.size()) {
    throw Error("evaluate: expected " + std::to_string(columns_.size()) +
                " exponents, got " + std::to_string(x.size()));
  }
  ExponentVector t(dim_t_);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) t += x[i] * columns_[i];
  }
  return t;
}

}  // namespace revlex

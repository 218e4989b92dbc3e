#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "revlex/exponent.hpp"

namespace revlex {

/// Integer functional w with w . u_i = value > 0 for every generator. Its
/// existence is what makes the toric ideal homogeneous in the standard
/// grading of K[X].
struct GradingFunctional {
  std::vector<std::int64_t> weights;
  std::int64_t value = 0;
};

/// The exponent matrix of A = {u_1, ..., u_n}: n distinct columns of length
/// dim_t, one per generator, homogeneous in the sense that some rational
/// functional takes the same value on every column.
class Configuration {
 public:
  /// Validates every invariant; throws Error on the first violation.
  Configuration(std::size_t dim_t, std::vector<ExponentVector> columns,
                std::vector<std::string> labels = {});

  std::size_t dim_t() const noexcept { return dim_t_; }
  std::size_t num_gens() const noexcept { return columns_.size(); }
  const ExponentVector& column(std::size_t i) const { return columns_[i]; }
  std::span<const ExponentVector> columns() const noexcept { return columns_; }

  /// Labels as given; empty when the input carried none.
  std::span<const std::string> labels() const noexcept { return labels_; }
  /// Labels when present, otherwise x1..xn.
  const std::vector<std::string>& variable_names() const noexcept {
    return names_;
  }

  /// All entries 0 or 1 (judged on the input, not up to isomorphism).
  bool is_squarefree() const noexcept { return squarefree_; }
  const GradingFunctional& grading() const noexcept { return grading_; }

  /// Index of the column equal to `t`, if any.
  std::optional<std::size_t> find_column(const ExponentVector& t) const;

  /// sum_i x_i * u_i: the t-space exponent of the image of x^x.
  ExponentVector evaluate(const ExponentVector& x) const;

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.dim_t_ == b.dim_t_ && a.columns_ == b.columns_ &&
           a.labels_ == b.labels_;
  }

 private:
  std::size_t dim_t_ = 0;
  std::vector<ExponentVector> columns_;
  std::vector<std::string> labels_;
  std::vector<std::string> names_;
  GradingFunctional grading_;
  bool squarefree_ = false;
};

}  // namespace revlex

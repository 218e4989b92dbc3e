#include "revlex/builders.hpp"

#include <algorithm>
#include <functional>

namespace revlex {

Configuration veronese(std::size_t num_vars, std::size_t degree) {
  if (num_vars == 0 || degree == 0) {
    throw Error("veronese: number of variables and degree must be positive");
  }
  std::vector<ExponentVector> columns;
  ExponentVector current(num_vars);
  // Depth-first with the largest first exponent first gives descending
  // lexicographic order.
  std::function<void(std::size_t, Exponent)> fill = [&](std::size_t var,
                                                        Exponent remaining) {
    if (var + 1 == num_vars) {
      current[var] = remaining;
      columns.push_back(current);
      return;
    }
    for (Exponent e = remaining; e >= 0; --e) {
      current[var] = e;
      fill(var + 1, remaining - e);
    }
  };
  fill(0, static_cast<Exponent>(degree));
  if (columns.size() > 64) {
    throw Error("veronese: " + std::to_string(columns.size()) +
                " generators exceed the supported 64");
  }
  return Configuration(num_vars, std::move(columns));
}

Configuration stable_set_config(const SimpleGraph& g) {
  const std::size_t d = g.num_vertices();
  std::vector<ExponentVector> columns;
  for (const auto& s : g.stable_sets()) {
    ExponentVector col(d + 1);
    for (int v : s) col[static_cast<std::size_t>(v)] = 1;
    col[d] = 1;
    columns.push_back(std::move(col));
  }
  return Configuration(d + 1, std::move(columns));
}

Configuration star_config(std::size_t n, bool with_unit) {
  if (n == 0) throw Error("star: n must be positive");
  std::vector<ExponentVector> columns;
  std::vector<std::string> labels;
  if (with_unit) {
    ExponentVector s(n + 1);
    s[n] = 1;
    columns.push_back(std::move(s));
    labels.emplace_back("z");
  }
  for (int sign : {1, -1}) {
    for (std::size_t i = 0; i < n; ++i) {
      ExponentVector c(n + 1);
      c[i] = sign;
      c[n] = 1;
      columns.push_back(std::move(c));
      labels.push_back((sign > 0 ? "x" : "y") + std::to_string(i + 1));
    }
  }
  return Configuration(n + 1, std::move(columns), std::move(labels));
}

}  // namespace revlex

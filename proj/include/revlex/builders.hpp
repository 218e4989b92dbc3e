#pragma once

#include "revlex/configuration.hpp"
#include "revlex/graph.hpp"

namespace revlex {

/// All monomials of degree `degree` in `num_vars` variables, exponent
/// vectors in lexicographically descending order.
Configuration veronese(std::size_t num_vars, std::size_t degree);

/// One column per stable set S of g (empty set included): the indicator of S
/// followed by a final 1, i.e. t_{d+1} * prod_{i in S} t_i.
Configuration stable_set_config(const SimpleGraph& g);

/// Columns t_i s and t_i^{-1} s for i = 1..n in coordinates (t_1..t_n, s),
/// preceded by s itself when `with_unit`. Labelled z, x1..xn, y1..yn.
Configuration star_config(std::size_t n, bool with_unit);

}  // namespace revlex

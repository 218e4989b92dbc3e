#include "revlex/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace revlex {

namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out{};
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error("integer overflow in lattice computation");
  }
  return out;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t out{};
  if (__builtin_sub_overflow(a, b, &out)) {
    throw Error("integer overflow in lattice computation");
  }
  return out;
}

// row -= q * pivot
void axpy(IntVector& row, std::int64_t q, const IntVector& pivot) {
  if (q == 0) return;
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (pivot[c] != 0) row[c] = sub(row[c], mul(q, pivot[c]));
  }
}

// Unimodular row reduction of the first `cols` columns to echelon form.
// Returns the number of pivot rows; rows below are zero in those columns.
std::size_t echelonize(IntMatrix& rows, std::size_t cols) {
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        if (best == rows.size() || std::llabs(rows[r][c]) < std::llabs(rows[best][c])) {
          best = r;
        }
      }
      if (best == rows.size()) break;
      std::swap(rows[pivot_row], rows[best]);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        axpy(rows[r], rows[r][c] / rows[pivot_row][c], rows[pivot_row]);
        if (rows[r][c] != 0) done = false;
      }
      if (done) {
        ++pivot_row;
        break;
      }
    }
  }
  return pivot_row;
}

std::int64_t dot(const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t t{};
    if (__builtin_add_overflow(s, mul(a[i], b[i]), &t)) {
      throw Error("integer overflow in lattice computation");
    }
    s = t;
  }
  return s;
}

// Nearest integer to num / den, den > 0.
std::int64_t round_div(std::int64_t num, std::int64_t den) {
  const std::int64_t twice = mul(2, num) + den;
  const std::int64_t twice_den = mul(2, den);
  std::int64_t q = twice / twice_den;
  if ((twice % twice_den != 0) && (twice < 0)) --q;
  return q;
}

void size_reduce(IntMatrix& basis) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        const std::int64_t nj = dot(basis[j], basis[j]);
        if (nj == 0) continue;
        const std::int64_t q = round_div(dot(basis[i], basis[j]), nj);
        if (q == 0) continue;
        IntVector candidate = basis[i];
        axpy(candidate, q, basis[j]);
        if (dot(candidate, candidate) < dot(basis[i], basis[i])) {
          basis[i] = std::move(candidate);
          changed = true;
        }
      }
    }
  }
  for (auto& v : basis) {
    const auto first = std::find_if(v.begin(), v.end(),
                                    [](std::int64_t e) { return e != 0; });
    if (first != v.end() && *first < 0) {
      for (auto& e : v) e = -e;
    }
  }
  std::sort(basis.begin(), basis.end(), [](const IntVector& a, const IntVector& b) {
    const auto na = dot(a, a);
    const auto nb = dot(b, b);
    return na != nb ? na < nb : a > b;
  });
}

}  // namespace

std::size_t integer_rank(IntMatrix rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  return echelonize(rows, cols);
}

IntMatrix integer_kernel(const IntMatrix& a, std::size_t cols) {
  const std::size_t m = a.size();
  IntMatrix work(cols, IntVector(m + cols, 0));
  for (std::size_t k = 0; k < cols; ++k) {
    for (std::size_t r = 0; r < m; ++r) work[k][r] = a[r][k];
    work[k][m + k] = 1;
  }
  const std::size_t rank = echelonize(work, m);
  IntMatrix basis;
  for (std::size_t k = rank; k < cols; ++k) {
    basis.emplace_back(work[k].begin() + static_cast<std::ptrdiff_t>(m),
                       work[k].end());
  }
  size_reduce(basis);
  return basis;
}

LatticeBasis kernel_lattice(const Configuration& config) {
  const std::size_t d = config.dim_t();
  const std::size_t n = config.num_gens();
  IntMatrix a(d, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < d; ++r) a[r][i] = config.column(i)[r];
  }
  LatticeBasis out;
  out.ambient = n;
  for (const auto& v : integer_kernel(a, n)) {
    ExponentVector e(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] > INT32_MAX || v[i] < INT32_MIN) {
        throw Error("kernel vector entry exceeds exponent range");
      }
      e[i] = static_cast<Exponent>(v[i]);
    }
    out.vectors.push_back(std::move(e));
  }
  return out;
}

}  // namespace revlex

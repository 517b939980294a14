// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "regflow/exact_linalg.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "regflow/errors.hpp"

namespace regflow {

namespace {

using Rows = std::vector<IntegerVector>;

Rows to_rows(const IntegerMatrix& m) {
  Rows a(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) a[i] = m.row(i);
  return a;
}

// Fraction-free row echelon form (Bareiss). Returns the pivot columns.
std::vector<std::size_t> bareiss_echelon(Rows& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  const std::size_t nrows = a.size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && sgn(a[p][c]) == 0) ++p;
    if (p == nrows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(),
                     prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Unimodular row operations making a[p][c] the gcd of column c over rows
// p.., and zeroing the column below it. Only columns [c, width) change.
void gcd_pivot(Rows& a, std::size_t p, std::size_t c) {
  for (std::size_t i = p + 1; i < a.size(); ++i) {
    if (sgn(a[i][c]) == 0) continue;
    if (sgn(a[p][c]) == 0) {
      std::swap(a[p], a[i]);
      continue;
    }
    Integer g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(),
               a[p][c].get_mpz_t(), a[i][c].get_mpz_t());
    const Integer u = a[p][c] / g;
    const Integer v = a[i][c] / g;
    for (std::size_t j = c; j < a[p].size(); ++j) {
      Integer top = x * a[p][j] + y * a[i][j];
      Integer bottom = u * a[i][j] - v * a[p][j];
      a[p][j] = std::move(top);
      a[i][j] = std::move(bottom);
    }
  }
}

}  // namespace

Integer determinant(const IntegerMatrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorCode::kDimension,
                "determinant of a non-square " + std::to_string(m.rows()) +
                    "x" + std::to_string(m.cols()) + " matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Rows a = to_rows(m);
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a[p][k]) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(),
                     prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::size_t rank(const IntegerMatrix& m) {
  return independent_columns(m).size();
}

std::vector<std::size_t> independent_columns(const IntegerMatrix& m) {
  Rows a = to_rows(m);
  return bareiss_echelon(a, m.cols());
}

std::vector<std::size_t> independent_rows(const IntegerMatrix& m) {
  return independent_columns(m.transpose());
}

IntegerMatrix hermite_normal_form(const IntegerMatrix& m) {
  Rows a = to_rows(m);
  std::size_t p = 0;
  for (std::size_t c = 0; c < m.cols() && p < a.size(); ++c) {
    gcd_pivot(a, p, c);
    if (sgn(a[p][c]) == 0) continue;
    if (sgn(a[p][c]) < 0) {
      for (auto& x : a[p]) x = -x;
    }
    for (std::size_t i = 0; i < p; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[p][c].get_mpz_t());
      if (sgn(q) == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= q * a[p][j];
    }
    ++p;
  }
  a.resize(p);
  if (a.empty()) return IntegerMatrix(0, m.cols());
  return IntegerMatrix::from_rows(a);
}

IntegerMatrix integer_kernel_basis(const IntegerMatrix& m) {
  const std::size_t n = m.cols();
  const std::size_t r = m.rows();
  // Rows of [mᵀ | I_n]; unimodular row operations keep the right block
  // unimodular, so rows whose left block vanishes span the full kernel.
  Rows a(n, IntegerVector(r + n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j) a[i][j] = m(j, i);
    a[i][r + i] = 1;
  }
  std::size_t p = 0;
  for (std::size_t c = 0; c < r && p < n; ++c) {
    gcd_pivot(a, p, c);
    if (sgn(a[p][c]) != 0) ++p;
  }
  if (p == n) return IntegerMatrix(n, 0);

  // Canonical form: Hermite form with respect to reversed coordinates.
  IntegerMatrix reversed(n - p, n);
  for (std::size_t i = p; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) reversed(i - p, j) = a[i][r + n - 1 - j];
  }
  const IntegerMatrix h = hermite_normal_form(reversed);
  const std::size_t k = h.rows();
  IntegerMatrix basis(n, k);
  for (std::size_t col = 0; col < k; ++col) {
    for (std::size_t e = 0; e < n; ++e) basis(e, col) = h(k - 1 - col, n - 1 - e);
  }
  return basis;
}

std::optional<std::vector<Rational>> solve_rational(const IntegerMatrix& a,
                                                    std::span<const Integer> b) {
  if (b.size() != a.rows()) {
    throw Error(ErrorCode::kDimension, "right-hand side length mismatch");
  }
  const std::size_t n = a.rows();
  const std::size_t k = a.cols();
  std::vector<std::vector<Rational>> t(n, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) t[i][j] = a(i, j);
    t[i][k] = b[i];
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < n && sgn(t[p][c]) == 0) ++p;
    if (p == n) {
      throw Error(ErrorCode::kPrecondition,
                  "solve_rational needs full column rank");
    }
    std::swap(t[p], t[c]);
    const Rational inv = 1 / t[c][c];
    for (std::size_t j = c; j <= k; ++j) t[c][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(t[i][c]) == 0) continue;
      const Rational f = t[i][c];
      for (std::size_t j = c; j <= k; ++j) t[i][j] -= f * t[c][j];
    }
  }
  for (std::size_t i = k; i < n; ++i) {
    if (sgn(t[i][k]) != 0) return std::nullopt;
  }
  std::vector<Rational> x(k);
  for (std::size_t j = 0; j < k; ++j) x[j] = t[j][k];
  return x;
}

std::optional<IntegerVector> solve_integral(const IntegerMatrix& a,
                                            std::span<const Integer> b) {
  auto x = solve_rational(a, b);
  if (!x) return std::nullopt;
  IntegerVector out;
  out.reserve(x->size());
  for (const auto& q : *x) {
    if (q.get_den() != 1) return std::nullopt;
    out.push_back(q.get_num());
  }
  return out;
}

IntegerMatrix inverse_unimodular(const IntegerMatrix& m) {
  const Integer d = determinant(m);
  if (abs(d) != 1) {
    throw Error(ErrorCode::kPrecondition,
                "matrix is not unimodular (det " + d.get_str() + ")");
  }
  const std::size_t n = m.rows();
  IntegerMatrix inv(n, n);
  IntegerVector e(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(e.begin(), e.end(), Integer(0));
    e[j] = 1;
    inv.set_col(j, *solve_integral(m, e));
  }
  return inv;
}

IntegerMatrix sharp(const IntegerMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = abs(m(i, j));
  }
  return out;
}

bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
  const std::size_t k = comb.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace regflow

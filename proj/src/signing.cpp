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


#include <algorithm>
#include <numeric>

#include "regflow/errors.hpp"
#include "regflow/exact_linalg.hpp"
#include "regflow/gram_analysis.hpp"

namespace regflow {

namespace {

// Orders checked incrementally while signs are being chosen; the complete
// signing is verified by the full TU test.
constexpr std::size_t kIncrementalOrder = 4;

int small_det(const std::vector<int>& m, std::size_t n) {
  if (n == 1) return m[0];
  int total = 0;
  std::vector<int> minor((n - 1) * (n - 1));
  for (std::size_t c = 0; c < n; ++c) {
    if (m[c] == 0) continue;
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0, k = 0; j < n; ++j) {
        if (j != c) minor[(i - 1) * (n - 1) + k++] = m[i * n + j];
      }
    }
    const int term = m[c] * small_det(minor, n - 1);
    total += c % 2 == 0 ? term : -term;
  }
  return total;
}

class SigningSearch {
 public:
  SigningSearch(const IntegerMatrix& x, const std::function<bool(const IntegerMatrix&)>& visit,
                const Limits& limits)
      : rows_(x.rows()), cols_(x.cols()), visit_(visit), limits_(limits),
        sign_(rows_ * cols_, 0), forced_(rows_ * cols_, false) {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        const Integer& v = x(i, j);
        if (v != 0 && v != 1) {
          throw Error(ErrorCode::kPrecondition, "signing needs a {0,1} matrix");
        }
        sign_[i * cols_ + j] = v == 1 ? 1 : 0;
      }
    }
    // Spanning forest of the bipartite row-column graph, scanned row-major.
    std::vector<std::size_t> parent(rows_ + cols_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (sign_[i * cols_ + j] == 0) continue;
        const std::size_t a = find(i), b = find(rows_ + j);
        if (a != b) {
          parent[a] = b;
          forced_[i * cols_ + j] = true;
        }
      }
    }
  }

  void run() { descend(0); }

 private:
  // Every square submatrix of order 2..4 whose last entry in row-major
  // order is (i, j) has integral determinant in {-1, 0, 1}.
  bool completed_minors_ok(std::size_t i, std::size_t j) const {
    const std::size_t top = std::min({kIncrementalOrder, i + 1, j + 1});
    std::vector<int> block;
    for (std::size_t order = 2; order <= top; ++order) {
      std::vector<std::size_t> rs(order - 1), cs(order - 1);
      std::iota(rs.begin(), rs.end(), 0);
      do {
        std::iota(cs.begin(), cs.end(), 0);
        do {
          block.assign(order * order, 0);
          for (std::size_t a = 0; a < order; ++a) {
            const std::size_t r = a + 1 < order ? rs[a] : i;
            for (std::size_t b = 0; b < order; ++b) {
              const std::size_t c = b + 1 < order ? cs[b] : j;
              block[a * order + b] = sign_[r * cols_ + c];
            }
          }
          if (std::abs(small_det(block, order)) > 1) return false;
        } while (next_combination(cs, j));
      } while (next_combination(rs, i));
    }
    return true;
  }

  void descend(std::size_t p) {
    if (stop_) return;
    if (p == rows_ * cols_) {
      IntegerMatrix u(rows_, cols_);
      for (std::size_t q = 0; q < p; ++q) u(q / cols_, q % cols_) = sign_[q];
      if (is_totally_unimodular(u, limits_.tu_order).holds) stop_ = visit_(u);
      return;
    }
    const std::size_t i = p / cols_, j = p % cols_;
    if (sign_[p] == 0 || forced_[p]) {
      if (completed_minors_ok(i, j)) descend(p + 1);
      return;
    }
    for (int value : {1, -1}) {
      sign_[p] = value;
      if (completed_minors_ok(i, j)) descend(p + 1);
      if (stop_) break;
    }
    sign_[p] = 1;
  }

  std::size_t rows_, cols_;
  const std::function<bool(const IntegerMatrix&)>& visit_;
  const Limits& limits_;
  std::vector<int> sign_;
  std::vector<bool> forced_;
  bool stop_ = false;
};

}  // namespace

void for_each_tu_signing(const IntegerMatrix& x,
                         const std::function<bool(const IntegerMatrix&)>& visit,
                         const Limits& limits) {
  if (std::min(x.rows(), x.cols()) > limits.tu_order) {
    throw Error(ErrorCode::kBoundExceeded, "instance too large for exact enumeration");
  }
  SigningSearch(x, visit, limits).run();
}

std::optional<IntegerMatrix> tu_signing(const IntegerMatrix& x, const Limits& limits) {
  std::optional<IntegerMatrix> found;
  for_each_tu_signing(
      x,
      [&](const IntegerMatrix& u) {
        found = u;
        return true;
      },
      limits);
  return found;
}

}  // namespace regflow

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

#include <cstdint>
#include <string>
#include <vector>

#include "regflow/errors.hpp"
#include "regflow/exact_linalg.hpp"

namespace regflow {

namespace {

// Minor tables past this many entries are refused rather than allocated.
constexpr std::uint64_t kMaxMinorTable = std::uint64_t{1} << 28;

class Binomials {
 public:
  explicit Binomials(std::size_t n) : n_(n), table_((n + 1) * (n + 2), 0) {
    for (std::size_t a = 0; a <= n; ++a) {
      at(a, 0) = 1;
      for (std::size_t b = 1; b <= a; ++b) {
        at(a, b) = at(a - 1, b - 1) + (b <= a - 1 ? at(a - 1, b) : 0);
      }
    }
  }
  std::uint64_t operator()(std::size_t a, std::size_t b) const {
    return b > a ? 0 : table_[a * (n_ + 2) + b];
  }

 private:
  std::uint64_t& at(std::size_t a, std::size_t b) { return table_[a * (n_ + 2) + b]; }
  std::size_t n_;
  std::vector<std::uint64_t> table_;
};

[[noreturn]] void bound_exceeded(const IntegerMatrix& m, std::size_t bound) {
  throw Error(ErrorCode::kBoundExceeded,
              "instance too large for exact enumeration: " +
                  std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                  " exceeds order bound " + std::to_string(bound));
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  return c;
}

}  // namespace

UnimodularityVerdict is_totally_unimodular(const IntegerMatrix& m,
                                           std::size_t bound) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  const std::size_t kmax = std::min(nr, nc);
  if (kmax > bound) bound_exceeded(m, bound);

  std::vector<std::int8_t> small(nr * nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) {
      if (abs(m(i, j)) > 1) {
        return {false, SubmatrixWitness{{i}, {j}, m(i, j)}};
      }
      small[i * nc + j] = static_cast<std::int8_t>(m(i, j).get_si());
    }
  }

  // Once every minor of order k-1 lies in {-1,0,1}, an order-k minor is a
  // short signed sum of them (Laplace along the first row), so the memo
  // fits in int8 and the arithmetic cannot overflow.
  const Binomials binom(std::max(nr, nc));
  auto colex = [&](const std::vector<std::size_t>& c) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < c.size(); ++i) r += binom(c[i], i + 1);
    return r;
  };

  std::vector<std::int8_t> prev = small;
  std::uint64_t prev_cols = nc;
  std::vector<std::uint64_t> prefix;
  std::vector<std::uint64_t> suffix;
  for (std::size_t k = 2; k <= kmax; ++k) {
    const std::uint64_t row_count = binom(nr, k);
    const std::uint64_t col_count = binom(nc, k);
    if (row_count > kMaxMinorTable / std::max<std::uint64_t>(col_count, 1)) {
      throw Error(ErrorCode::kBoundExceeded,
                  "instance too large for exact enumeration: minor table of "
                  "order " + std::to_string(k) + " too large");
    }
    std::vector<std::int8_t> cur(row_count * col_count, 0);
    prefix.assign(k + 1, 0);
    suffix.assign(k + 1, 0);

    auto rows = first_combination(k);
    do {
      const std::uint64_t row_rank = colex(rows);
      std::uint64_t sub_row_rank = 0;
      for (std::size_t i = 1; i < k; ++i) sub_row_rank += binom(rows[i], i);
      const std::size_t lead = rows[0];

      auto cols = first_combination(k);
      do {
        prefix[0] = 0;
        for (std::size_t i = 0; i < k; ++i) {
          prefix[i + 1] = prefix[i] + binom(cols[i], i + 1);
        }
        suffix[k] = 0;
        for (std::size_t i = k; i-- > 0;) {
          suffix[i] = suffix[i + 1] + binom(cols[i], i);
        }
        int det = 0;
        for (std::size_t t = 0; t < k; ++t) {
          const int a = small[lead * nc + cols[t]];
          if (a == 0) continue;
          const std::uint64_t sub_col_rank = prefix[t] + suffix[t + 1];
          const int minor = prev[sub_row_rank * prev_cols + sub_col_rank];
          det += (t % 2 == 0 ? a : -a) * minor;
        }
        if (det > 1 || det < -1) {
          return {false, SubmatrixWitness{rows, cols, Integer(det)}};
        }
        cur[row_rank * col_count + colex(cols)] = static_cast<std::int8_t>(det);
      } while (next_combination(cols, nc));
    } while (next_combination(rows, nr));

    prev = std::move(cur);
    prev_cols = col_count;
  }
  return {true, std::nullopt};
}

UnimodularityVerdict is_weakly_unimodular(const IntegerMatrix& m,
                                          std::size_t bound) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  const std::size_t k = std::min(nr, nc);
  if (k > bound) bound_exceeded(m, bound);
  if (k == 0) return {true, std::nullopt};

  const bool wide = nr <= nc;
  const std::vector<std::size_t> all = first_combination(k);
  auto pick = first_combination(k);
  do {
    const IntegerMatrix sub =
        wide ? m.select_columns(pick) : m.select_rows(pick);
    Integer d = determinant(sub);
    if (abs(d) > 1) {
      return {false, wide ? SubmatrixWitness{all, pick, d}
                          : SubmatrixWitness{pick, all, d}};
    }
  } while (next_combination(pick, wide ? nc : nr));
  return {true, std::nullopt};
}

}  // namespace regflow

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


#include "regflow/gram_analysis.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "regflow/errors.hpp"

namespace regflow {

namespace {

// Past this the 2^s tables no longer fit comfortably in memory.
constexpr std::size_t kTableHardCap = 26;

std::vector<std::size_t> mask_indices(IndexMask mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1) out.push_back(i);
  }
  return out;
}

void check_mask(const GramMatrix& a, IndexMask s) {
  if (a.order() < 64 && (s >> a.order()) != 0) {
    throw Error(ErrorCode::kPrecondition, "subset " + mask_text(s) + " is not inside [" +
                                              std::to_string(a.order()) + "]");
  }
}

}  // namespace

std::string mask_text(IndexMask mask) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t i : mask_indices(mask)) {
    if (!first) os << ',';
    os << i + 1;
    first = false;
  }
  os << '}';
  return os.str();
}

std::size_t mask_size(IndexMask mask) { return std::popcount(mask); }

bool subset_order_less(IndexMask a, IndexMask b) {
  const std::size_t na = mask_size(a), nb = mask_size(b);
  if (na != nb) return na < nb;
  return mask_indices(a) < mask_indices(b);
}

SupportFamily SupportFamily::from_columns(const IntegerMatrix& u) {
  if (u.rows() > 64) {
    throw Error(ErrorCode::kBoundExceeded, "support families hold at most 64 ground elements");
  }
  SupportFamily c;
  c.ground_size = u.rows();
  for (std::size_t j = 0; j < u.cols(); ++j) {
    std::uint64_t set = 0;
    for (std::size_t i = 0; i < u.rows(); ++i) {
      if (sgn(u(i, j)) != 0) set |= std::uint64_t{1} << i;
    }
    c.sets.push_back(set);
  }
  return c;
}

PhiGamma phi_gamma(const SupportFamily& c, IndexMask s) {
  const std::size_t n = c.sets.size();
  if (n > kTableHardCap) throw Error(ErrorCode::kBoundExceeded, "too many sets");
  if (n < 64 && (s >> n) != 0) throw Error(ErrorCode::kPrecondition, "subset outside [s]");
  const std::uint64_t everything =
      c.ground_size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << c.ground_size) - 1;

  auto phi = [&](IndexMask t) {
    std::uint64_t meet = everything;
    for (std::size_t i : mask_indices(t)) meet &= c.sets[i];
    return Integer(static_cast<unsigned long>(std::popcount(meet)));
  };

  PhiGamma out;
  out.phi = phi(s);

  const IndexMask full = (IndexMask{1} << n) - 1;
  const IndexMask rest = full & ~s;
  Integer alternating = 0;
  // Walk the subsets of the complement.
  for (IndexMask extra = rest;; extra = (extra - 1) & rest) {
    if (mask_size(extra) % 2 == 0) {
      alternating += phi(s | extra);
    } else {
      alternating -= phi(s | extra);
    }
    if (extra == 0) break;
  }

  unsigned long direct = 0;
  for (std::size_t e = 0; e < c.ground_size; ++e) {
    IndexMask pattern = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((c.sets[i] >> e) & 1) pattern |= IndexMask{1} << i;
    }
    if (pattern == s) ++direct;
  }
  if (alternating != direct) {
    throw std::logic_error("inclusion/exclusion disagrees with direct count at " + mask_text(s));
  }
  out.gamma = alternating;
  return out;
}

TripleSign triple_sign(const GramMatrix& a, std::size_t h, std::size_t i, std::size_t j) {
  if (h == i || i == j || h == j) {
    throw Error(ErrorCode::kPrecondition, "triple needs three distinct indices");
  }
  if (std::max({h, i, j}) >= a.order()) {
    throw Error(ErrorCode::kDimension, "triple index out of range");
  }
  const int sign = sgn(a(h, i)) * sgn(a(i, j)) * sgn(a(j, h));
  return sign > 0 ? TripleSign::kPositive : sign < 0 ? TripleSign::kNegative : TripleSign::kNull;
}

std::vector<std::array<std::size_t, 3>> negative_triples(const GramMatrix& a) {
  std::vector<std::array<std::size_t, 3>> out;
  const std::size_t s = a.order();
  for (std::size_t h = 0; h < s; ++h) {
    for (std::size_t i = h + 1; i < s; ++i) {
      for (std::size_t j = i + 1; j < s; ++j) {
        if (triple_sign(a, h, i, j) == TripleSign::kNegative) out.push_back({h, i, j});
      }
    }
  }
  return out;
}

Integer f_value(const GramMatrix& a, IndexMask s) {
  check_mask(a, s);
  const auto idx = mask_indices(s);
  if (idx.empty()) return 0;
  for (const auto& t : negative_triples(a)) {
    if (std::all_of(t.begin(), t.end(), [&](std::size_t i) { return (s >> i) & 1; })) return 0;
  }
  if (idx.size() == 1) return a(idx[0], idx[0]);
  Integer best = abs(a(idx[0], idx[1]));
  for (std::size_t p = 0; p < idx.size(); ++p) {
    for (std::size_t q = p + 1; q < idx.size(); ++q) best = std::min<Integer>(best, abs(a(idx[p], idx[q])));
  }
  return best;
}

Integer g_value(const GramMatrix& a, IndexMask s) {
  check_mask(a, s);
  if (a.order() > kTableHardCap) throw Error(ErrorCode::kBoundExceeded, "Gram order too large");
  const IndexMask full = (IndexMask{1} << a.order()) - 1;
  const IndexMask rest = full & ~s;
  Integer total = 0;
  for (IndexMask extra = rest;; extra = (extra - 1) & rest) {
    if (mask_size(extra) % 2 == 0) {
      total += f_value(a, s | extra);
    } else {
      total -= f_value(a, s | extra);
    }
    if (extra == 0) break;
  }
  return total;
}

SubsetTables subset_tables(const GramMatrix& a, const Limits& limits) {
  const std::size_t s = a.order();
  if (s > limits.gram_order || s > kTableHardCap) {
    throw Error(ErrorCode::kBoundExceeded,
                "Gram order " + std::to_string(s) + " exceeds the subset-table bound " +
                    std::to_string(std::min(limits.gram_order, kTableHardCap)));
  }
  const std::size_t total = std::size_t{1} << s;

  // Subsets containing a negative triple: mark the triples, close upwards.
  std::vector<char> has_negative(total, 0);
  for (const auto& t : negative_triples(a)) {
    has_negative[(IndexMask{1} << t[0]) | (IndexMask{1} << t[1]) | (IndexMask{1} << t[2])] = 1;
  }
  for (std::size_t bit = 0; bit < s; ++bit) {
    for (std::size_t m = 0; m < total; ++m) {
      if ((m >> bit) & 1) has_negative[m] |= has_negative[m ^ (std::size_t{1} << bit)];
    }
  }

  SubsetTables t;
  t.order = s;
  t.f.assign(total, Integer(0));
  // Minimum |a_ij| over pairs inside m, built by adding the top element.
  std::vector<Integer> pair_min(total);
  for (std::size_t m = 1; m < total; ++m) {
    const std::size_t top = std::bit_width(m) - 1;
    const std::size_t below = m ^ (std::size_t{1} << top);
    if (below == 0) {
      t.f[m] = a(top, top);
      continue;
    }
    Integer best = mask_size(below) >= 2 ? pair_min[below] : Integer(-1);
    for (std::size_t i : mask_indices(below)) {
      const Integer v = abs(a(top, i));
      if (best < 0 || v < best) best = v;
    }
    pair_min[m] = best;
    t.f[m] = has_negative[m] ? Integer(0) : best;
  }

  t.g = t.f;
  for (std::size_t bit = 0; bit < s; ++bit) {
    for (std::size_t m = 0; m < total; ++m) {
      if (!((m >> bit) & 1)) t.g[m] -= t.g[m | (std::size_t{1} << bit)];
    }
  }
  return t;
}

Classification classify(const GramMatrix& a, const Limits& limits) {
  Classification c;
  c.tables = subset_tables(a, limits);
  const std::size_t total = c.tables.g.size();

  Integer sum = 0;
  for (std::size_t m = 1; m < total; ++m) {
    sum += c.tables.g[m];
    if (c.tables.g[m] < 0 && (!c.negative_at || subset_order_less(m, *c.negative_at))) {
      c.negative_at = m;
    }
  }
  if (sum != -c.tables.g[0]) throw std::logic_error("g(∅) differs from -Σ g(S)");

  c.g_nonnegative = !c.negative_at;
  if (c.g_nonnegative) {
    for (std::size_t i = 0; i < a.order(); ++i) {
      if (sgn(c.tables.g[std::size_t{1} << i]) == 0) {
        c.vanishing_singleton = IndexMask{1} << i;
        break;
      }
    }
    c.g_positive = !c.vanishing_singleton;
  }
  if (c.g_positive && c.tables.g[0] > -static_cast<long>(a.order())) {
    throw std::logic_error("g-positive matrix with g(∅) > -s");
  }
  return c;
}

IntegerMatrix build_x(const Classification& c) {
  if (!c.g_nonnegative) {
    throw Error(ErrorCode::kPrecondition,
                "X(A) needs a g-nonnegative matrix; g" + mask_text(*c.negative_at) + " < 0");
  }
  const std::size_t s = c.tables.order;
  std::vector<IndexMask> subsets;
  for (IndexMask m = 1; m < c.tables.g.size(); ++m) {
    if (sgn(c.tables.g[m]) > 0) subsets.push_back(m);
  }
  std::sort(subsets.begin(), subsets.end(), [](IndexMask x, IndexMask y) {
    if (mask_size(x) != mask_size(y)) return mask_size(x) > mask_size(y);
    return mask_indices(x) < mask_indices(y);
  });

  std::vector<IntegerVector> rows;
  for (IndexMask m : subsets) {
    Integer copies = c.tables.g[m];
    if (c.g_positive && mask_size(m) == 1) copies -= 1;
    for (; copies > 0; --copies) {
      IntegerVector row(s);
      for (std::size_t i : mask_indices(m)) row[i] = 1;
      rows.push_back(std::move(row));
    }
  }
  if (c.g_positive) {
    for (std::size_t i = 0; i < s; ++i) {
      IntegerVector row(s);
      row[i] = 1;
      rows.push_back(std::move(row));
    }
  }
  if (Integer(static_cast<unsigned long>(rows.size())) != c.row_count()) {
    throw std::logic_error("X(A) row count differs from -g(∅)");
  }
  IntegerMatrix x(rows.size(), s);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < s; ++j) x(i, j) = rows[i][j];
  }
  return x;
}

IntegerMatrix build_x(const GramMatrix& a, const Limits& limits) {
  return build_x(classify(a, limits));
}

std::optional<std::vector<int>> matching_column_signs(const IntegerMatrix& b,
                                                      const IntegerMatrix& a) {
  const std::size_t s = a.rows();
  if (b.rows() != s || b.cols() != s || a.cols() != s) {
    throw Error(ErrorCode::kDimension, "sign matching needs square matrices of equal order");
  }
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      if (abs(a(i, j)) != abs(b(i, j))) return std::nullopt;
    }
    if (a(i, i) != b(i, i)) return std::nullopt;
  }
  std::vector<int> f(s, 0);
  for (std::size_t root = 0; root < s; ++root) {
    if (f[root] != 0) continue;
    f[root] = 1;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < s; ++j) {
        if (j == i || sgn(a(i, j)) == 0) continue;
        const int want = f[i] * sgn(a(i, j)) * sgn(b(i, j));
        if (f[j] == 0) {
          f[j] = want;
          stack.push_back(j);
        } else if (f[j] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return f;
}

std::string FeasibilityResult::verdict_line() const {
  switch (verdict) {
    case Feasibility::kFeasible:
      return "G-FEASIBLE";
    case Feasibility::kNotGNonnegative:
      return "NOT-G-NONNEGATIVE S=" + mask_text(*classification.negative_at);
    case Feasibility::kNoMatchingSigning:
      break;
  }
  return "NO-MATCHING-SIGNING";
}

FeasibilityResult is_g_feasible(const GramMatrix& a, const Limits& limits) {
  FeasibilityResult r;
  r.classification = classify(a, limits);
  if (!r.classification.g_nonnegative) {
    r.verdict = Feasibility::kNotGNonnegative;
    return r;
  }
  r.x = build_x(r.classification);
  r.verdict = Feasibility::kNoMatchingSigning;
  for_each_tu_signing(
      *r.x,
      [&](const IntegerMatrix& u) {
        const auto f = matching_column_signs(gram_product(u), a.entries());
        if (!f) return false;
        IntegerMatrix cert = u;
        for (std::size_t i = 0; i < cert.rows(); ++i) {
          for (std::size_t j = 0; j < cert.cols(); ++j) cert(i, j) *= (*f)[j];
        }
        if (!(gram_product(cert) == a.entries())) {
          throw std::logic_error("column signs failed to reproduce the Gram matrix");
        }
        r.certificate = std::move(cert);
        r.verdict = Feasibility::kFeasible;
        return true;
      },
      limits);
  return r;
}

}  // namespace regflow

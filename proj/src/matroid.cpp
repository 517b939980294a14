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

#include "regflow/matroid.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "regflow/errors.hpp"
#include "regflow/exact_linalg.hpp"

namespace regflow {

GroundSubset::GroundSubset(std::vector<std::size_t> indices)
    : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw Error(ErrorCode::kPrecondition, "duplicate element in subset");
  }
}

GroundSubset GroundSubset::from_mask(std::uint64_t mask) {
  std::vector<std::size_t> idx;
  for (std::size_t e = 0; mask != 0; ++e, mask >>= 1) {
    if (mask & 1) idx.push_back(e);
  }
  return GroundSubset(std::move(idx));
}

bool GroundSubset::contains(std::size_t e) const {
  return std::binary_search(indices_.begin(), indices_.end(), e);
}

std::uint64_t GroundSubset::to_mask() const {
  std::uint64_t mask = 0;
  for (std::size_t e : indices_) {
    if (e >= 64) throw Error(ErrorCode::kBoundExceeded, "subset index >= 64");
    mask |= std::uint64_t{1} << e;
  }
  return mask;
}

void GroundSubset::check_within(std::size_t ground_size) const {
  if (!indices_.empty() && indices_.back() >= ground_size) {
    throw Error(ErrorCode::kPrecondition,
                "element index " + std::to_string(indices_.back()) +
                    " out of range for ground set of size " +
                    std::to_string(ground_size));
  }
}

RegularMatroid::RegularMatroid(std::vector<std::string> ground, IntegerMatrix rep,
                               const Limits& limits)
    : RegularMatroid(std::move(ground), std::move(rep), true, limits) {}

RegularMatroid RegularMatroid::from_trusted(std::vector<std::string> ground,
                                            IntegerMatrix rep) {
  return RegularMatroid(std::move(ground), std::move(rep), false, Limits{});
}

RegularMatroid::RegularMatroid(std::vector<std::string> ground, IntegerMatrix rep,
                               bool check_tu, const Limits& limits)
    : ground_(std::move(ground)), rep_(std::move(rep)) {
  if (ground_.size() != rep_.cols()) {
    throw Error(ErrorCode::kDimension,
                "ground set has " + std::to_string(ground_.size()) +
                    " labels but representation has " +
                    std::to_string(rep_.cols()) + " columns");
  }
  rep_.set_col_labels(ground_);
  const std::size_t r = regflow::rank(rep_);
  if (r != rep_.rows()) {
    throw Error(ErrorCode::kPrecondition,
                "representation has rank " + std::to_string(r) + " but " +
                    std::to_string(rep_.rows()) + " rows");
  }
  if (check_tu) {
    const auto verdict = is_totally_unimodular(rep_, limits.tu_order);
    if (!verdict.holds) {
      throw Error(ErrorCode::kPrecondition,
                  "representation is not totally unimodular (minor " +
                      verdict.witness->det.get_str() + ")");
    }
  }
}

std::size_t RegularMatroid::index_of(std::string_view label) const {
  auto it = std::find(ground_.begin(), ground_.end(), label);
  if (it == ground_.end()) {
    throw Error(ErrorCode::kPrecondition,
                "unknown element '" + std::string(label) + "'");
  }
  return static_cast<std::size_t>(it - ground_.begin());
}

std::size_t RegularMatroid::rank_of(const GroundSubset& subset) const {
  subset.check_within(size());
  return regflow::rank(rep_.select_columns(subset.indices()));
}

bool RegularMatroid::is_base(const GroundSubset& subset) const {
  return subset.size() == rank() && rank_of(subset) == rank();
}

GroundSubset RegularMatroid::first_base() const {
  return GroundSubset(independent_columns(rep_));
}

RegularMatroid from_graph(std::span<const Edge> edges) {
  if (edges.empty()) {
    throw Error(ErrorCode::kPrecondition, "graph has no edges");
  }
  std::map<long, std::size_t> vertex_index;
  for (const auto& [tail, head] : edges) {
    vertex_index.emplace(tail, 0);
    vertex_index.emplace(head, 0);
  }
  std::size_t next = 0;
  for (auto& [v, idx] : vertex_index) idx = next++;
  const std::size_t nv = vertex_index.size();

  // Union-find over vertices to find each component's least vertex.
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  IntegerMatrix incidence(nv, edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::size_t t = vertex_index[edges[e].first];
    const std::size_t h = vertex_index[edges[e].second];
    if (t == h) continue;
    incidence(h, e) += 1;
    incidence(t, e) -= 1;
    const std::size_t a = find(t);
    const std::size_t b = find(h);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> kept;
  for (std::size_t v = 0; v < nv; ++v) {
    if (find(v) != v) kept.push_back(v);
  }
  std::vector<std::string> labels;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    labels.push_back("e" + std::to_string(e + 1));
  }
  // Signed incidence matrices are TU.
  return RegularMatroid::from_trusted(std::move(labels),
                                      incidence.select_rows(kept));
}

IntegerMatrix Coordinatization::l_block() const {
  const std::size_t r = standard.rows();
  std::vector<std::size_t> idx(standard.cols() - r);
  std::iota(idx.begin(), idx.end(), r);
  return standard.select_columns(idx);
}

Coordinatization coordinatize(const RegularMatroid& m, const GroundSubset& base) {
  base.check_within(m.size());
  if (base.size() != m.rank()) {
    throw Error(ErrorCode::kNotABase,
                "dependent or undersized set: " + std::to_string(base.size()) +
                    " elements given, rank is " + std::to_string(m.rank()));
  }
  const IntegerMatrix square = m.rep().select_columns(base.indices());
  const Integer det = determinant(square);
  if (sgn(det) == 0) {
    throw Error(ErrorCode::kNotABase,
                "dependent or undersized set: the " + std::to_string(m.rank()) +
                    "x" + std::to_string(m.rank()) +
                    " determinant on the given columns vanishes");
  }
  Coordinatization out;
  out.order = base.indices();
  for (std::size_t e = 0; e < m.size(); ++e) {
    if (!base.contains(e)) out.order.push_back(e);
  }
  out.transform = inverse_unimodular(square);
  out.standard = out.transform * m.rep().select_columns(out.order);
  return out;
}

RegularMatroid dual(const RegularMatroid& m, const GroundSubset& base) {
  const Coordinatization c = coordinatize(m, base);
  const std::size_t r = m.rank();
  const std::size_t s = m.nullity();
  IntegerMatrix rep(s, m.size());
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      rep(i, c.order[j]) = -c.standard(j, r + i);
    }
    rep(i, c.order[r + i]) = 1;
  }
  return RegularMatroid::from_trusted(m.ground(), std::move(rep));
}

RegularMatroid dual(const RegularMatroid& m) { return dual(m, m.first_base()); }

namespace {

// Over GF(2) a TU matrix has the same matroid as over Q, so independence
// is tested with XOR elimination on column bitmasks.
std::vector<std::uint64_t> binary_columns(const RegularMatroid& m) {
  if (m.rank() > 64) {
    throw Error(ErrorCode::kBoundExceeded, "rank above 64 in circuit search");
  }
  std::vector<std::uint64_t> cols(m.size(), 0);
  for (std::size_t j = 0; j < m.size(); ++j) {
    for (std::size_t i = 0; i < m.rank(); ++i) {
      if (mpz_odd_p(m.rep()(i, j).get_mpz_t())) cols[j] |= std::uint64_t{1} << i;
    }
  }
  return cols;
}

std::size_t binary_rank(const std::vector<std::uint64_t>& cols, std::uint64_t subset) {
  std::vector<std::uint64_t> basis;
  for (std::size_t e = 0; subset != 0; ++e, subset >>= 1) {
    if (!(subset & 1)) continue;
    std::uint64_t v = cols[e];
    for (std::uint64_t b : basis) v = std::min(v, v ^ b);
    if (v != 0) {
      basis.push_back(v);
      std::sort(basis.rbegin(), basis.rend());
    }
  }
  return basis.size();
}

struct BasisVector {
  std::uint64_t vec;
  int pivot;
  std::uint64_t combo;
};

void circuit_search(const std::vector<std::uint64_t>& cols, std::size_t start,
                    std::uint64_t independent, std::vector<BasisVector>& basis,
                    std::vector<std::uint64_t>& found) {
  for (std::size_t e = start; e < cols.size(); ++e) {
    std::uint64_t v = cols[e];
    std::uint64_t combo = std::uint64_t{1} << e;
    for (const auto& b : basis) {
      if ((v >> b.pivot) & 1) {
        v ^= b.vec;
        combo ^= b.combo;
      }
    }
    if (v == 0) {
      // The unique circuit in independent + e is the whole set exactly when
      // every element of `independent` takes part in the dependency.
      if (combo == (independent | (std::uint64_t{1} << e))) found.push_back(combo);
      continue;
    }
    basis.push_back({v, std::countr_zero(v), combo});
    circuit_search(cols, e + 1, independent | (std::uint64_t{1} << e), basis, found);
    basis.pop_back();
  }
}

}  // namespace

std::vector<GroundSubset> circuits(const RegularMatroid& m, const Limits& limits) {
  if (m.size() > limits.circuit_elements) {
    throw Error(ErrorCode::kBoundExceeded,
                "circuit enumeration limited to " +
                    std::to_string(limits.circuit_elements) + " elements, got " +
                    std::to_string(m.size()));
  }
  const auto cols = binary_columns(m);
  std::vector<BasisVector> basis;
  std::vector<std::uint64_t> found;
  circuit_search(cols, 0, 0, basis, found);

  std::vector<GroundSubset> out;
  out.reserve(found.size());
  for (std::uint64_t mask : found) {
    const std::size_t k = static_cast<std::size_t>(std::popcount(mask));
    bool minimal = binary_rank(cols, mask) + 1 == k;
    for (std::uint64_t rest = mask; minimal && rest != 0; rest &= rest - 1) {
      minimal = binary_rank(cols, mask & ~(rest & -rest)) + 1 == k;
    }
    if (!minimal) {
      throw Error(ErrorCode::kPrecondition, "circuit certification failed");
    }
    out.push_back(GroundSubset::from_mask(mask));
  }
  std::sort(out.begin(), out.end(), [](const GroundSubset& a, const GroundSubset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

LoopsAndColoops loops_and_coloops(const RegularMatroid& m) {
  std::vector<std::size_t> loops;
  std::vector<std::size_t> coloops;
  for (std::size_t e = 0; e < m.size(); ++e) {
    if (m.rep().col_is_zero(e)) {
      loops.push_back(e);
      continue;
    }
    std::vector<std::size_t> rest;
    for (std::size_t f = 0; f < m.size(); ++f) {
      if (f != e) rest.push_back(f);
    }
    if (regflow::rank(m.rep().select_columns(rest)) < m.rank()) coloops.push_back(e);
  }
  return {GroundSubset(std::move(loops)), GroundSubset(std::move(coloops))};
}

RegularMatroid contract_coloops(const RegularMatroid& m) {
  const GroundSubset coloops = loops_and_coloops(m).coloops;
  if (coloops.empty()) return m;
  const GroundSubset base = m.first_base();
  const Coordinatization c = coordinatize(m, base);
  const std::size_t r = m.rank();

  // A co-loop's row of [I_r L] is its identity row and nothing else.
  std::vector<std::size_t> keep_rows;
  for (std::size_t i = 0; i < r; ++i) {
    if (!coloops.contains(c.order[i])) keep_rows.push_back(i);
  }
  std::vector<std::size_t> kept;  // original indices, ground order
  for (std::size_t e = 0; e < m.size(); ++e) {
    if (!coloops.contains(e)) kept.push_back(e);
  }
  std::vector<std::size_t> position(m.size());
  for (std::size_t j = 0; j < c.order.size(); ++j) position[c.order[j]] = j;
  std::vector<std::size_t> cols;
  std::vector<std::string> labels;
  for (std::size_t e : kept) {
    cols.push_back(position[e]);
    labels.push_back(m.ground()[e]);
  }
  return RegularMatroid::from_trusted(std::move(labels),
                                      c.standard.submatrix(keep_rows, cols));
}

RegularMatroid delete_loops(const RegularMatroid& m) {
  std::vector<std::size_t> kept;
  std::vector<std::string> labels;
  for (std::size_t e = 0; e < m.size(); ++e) {
    if (!m.rep().col_is_zero(e)) {
      kept.push_back(e);
      labels.push_back(m.ground()[e]);
    }
  }
  return RegularMatroid::from_trusted(std::move(labels),
                                      m.rep().select_columns(kept));
}

}  // namespace regflow

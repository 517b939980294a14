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


#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "regflow/gram_matrix.hpp"
#include "regflow/integer_matrix.hpp"
#include "regflow/limits.hpp"

namespace regflow {

// Subsets of the index set [s] = {0, …, s-1} as bitmasks; printed 1-based.
using IndexMask = std::uint64_t;

std::string mask_text(IndexMask mask);
std::size_t mask_size(IndexMask mask);
// By size, then lexicographically on the sorted index lists.
bool subset_order_less(IndexMask a, IndexMask b);

// Subsets C_1..C_s of a ground set E with |E| <= 64.
struct SupportFamily {
  std::size_t ground_size = 0;
  std::vector<std::uint64_t> sets;

  // C_i = support of column i.
  static SupportFamily from_columns(const IntegerMatrix& u);
};

struct PhiGamma {
  Integer phi;
  Integer gamma;
};

// phi(S) = |∩_{i∈S} C_i| with ∩∅ = E. gamma(S) counts elements lying in
// exactly the C_i with i ∈ S; it is computed by inclusion/exclusion over
// phi and by a direct count, and the two must agree.
PhiGamma phi_gamma(const SupportFamily& c, IndexMask s);

enum class TripleSign { kPositive, kNull, kNegative };

// Sign of a_hi·a_ij·a_jh. Indices are 0-based and must be distinct.
TripleSign triple_sign(const GramMatrix& a, std::size_t h, std::size_t i, std::size_t j);
std::vector<std::array<std::size_t, 3>> negative_triples(const GramMatrix& a);

// Direct evaluation. g_value sums f over the supersets of S.
Integer f_value(const GramMatrix& a, IndexMask s);
Integer g_value(const GramMatrix& a, IndexMask s);

struct SubsetTables {
  std::size_t order = 0;
  // Indexed by mask, 2^order entries each.
  std::vector<Integer> f;
  std::vector<Integer> g;
};

// f over all subsets, then g by a superset Möbius transform.
SubsetTables subset_tables(const GramMatrix& a, const Limits& limits = {});

struct Classification {
  bool g_nonnegative = false;
  bool g_positive = false;
  // First nonempty S (by size, then lexicographically) with g(S) < 0.
  std::optional<IndexMask> negative_at;
  // First singleton with g = 0, when g-nonnegative but not g-positive.
  std::optional<IndexMask> vanishing_singleton;
  SubsetTables tables;

  // -g(∅): the number of rows of X(A).
  Integer row_count() const { return -tables.g[0]; }
};

Classification classify(const GramMatrix& a, const Limits& limits = {});

// X(A): g(S) copies of the indicator row of each nonempty S. Rows by
// descending support size, then lexicographically; if A is g-positive one
// copy of each singleton row is moved to the bottom in index order.
// Throws kPrecondition when A is not g-nonnegative.
IntegerMatrix build_x(const Classification& c);
IntegerMatrix build_x(const GramMatrix& a, const Limits& limits = {});

// Signings of a {0,1} matrix that are totally unimodular, with the entries
// on a spanning forest of the row-column graph fixed to +1. Every TU signing
// is obtained from one of these by negating rows and columns. The visitor
// returns true to stop.
void for_each_tu_signing(const IntegerMatrix& x,
                         const std::function<bool(const IntegerMatrix&)>& visit,
                         const Limits& limits = {});
std::optional<IntegerMatrix> tu_signing(const IntegerMatrix& x, const Limits& limits = {});

// Diagonal ±1 vector f with f_i f_j b_ij = a_ij, found by propagating
// signs along nonzero off-diagonal entries; nullopt if none exists.
std::optional<std::vector<int>> matching_column_signs(const IntegerMatrix& b,
                                                      const IntegerMatrix& a);

enum class Feasibility { kFeasible, kNotGNonnegative, kNoMatchingSigning };

struct FeasibilityResult {
  Feasibility verdict = Feasibility::kNoMatchingSigning;
  Classification classification;
  // Present unless the verdict is kNotGNonnegative.
  std::optional<IntegerMatrix> x;
  // TU U with UᵀU = A and |U| = X(A), when feasible.
  std::optional<IntegerMatrix> certificate;

  bool feasible() const { return verdict == Feasibility::kFeasible; }
  // "G-FEASIBLE", "NOT-G-NONNEGATIVE S={…}" or "NO-MATCHING-SIGNING".
  std::string verdict_line() const;
};

FeasibilityResult is_g_feasible(const GramMatrix& a, const Limits& limits = {});

}  // namespace regflow

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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "regflow/integer_matrix.hpp"
#include "regflow/limits.hpp"

namespace regflow {

// Fraction-free (Bareiss) determinant. Throws kDimension if not square.
Integer determinant(const IntegerMatrix& m);

// Rank over the rationals.
std::size_t rank(const IntegerMatrix& m);

// Greedy (lexicographically first) maximal set of independent columns.
std::vector<std::size_t> independent_columns(const IntegerMatrix& m);
std::vector<std::size_t> independent_rows(const IntegerMatrix& m);

// Reduced row Hermite normal form of the row lattice of `m`: positive
// pivots, entries above a pivot in [0, pivot), zero rows dropped.
IntegerMatrix hermite_normal_form(const IntegerMatrix& m);

// Columns form a basis of ker(m) ∩ Z^cols. The basis is canonical: each
// column's last nonzero entry is positive, these trailing positions
// strictly increase from column to column, and every other column is
// reduced modulo the trailing entry in that position.
IntegerMatrix integer_kernel_basis(const IntegerMatrix& m);

// Unique solution of a·x = b over Q, or nullopt when inconsistent.
// Requires a to have full column rank (kPrecondition otherwise).
std::optional<std::vector<Rational>> solve_rational(const IntegerMatrix& a,
                                                    std::span<const Integer> b);

// Like solve_rational, but nullopt unless the solution is integral.
std::optional<IntegerVector> solve_integral(const IntegerMatrix& a,
                                            std::span<const Integer> b);

// Inverse of a square matrix with determinant ±1 (kPrecondition otherwise).
IntegerMatrix inverse_unimodular(const IntegerMatrix& m);

// Entrywise absolute value.
IntegerMatrix sharp(const IntegerMatrix& m);

struct SubmatrixWitness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Integer det;
};

struct UnimodularityVerdict {
  bool holds = true;
  // Present exactly when holds is false.
  std::optional<SubmatrixWitness> witness;
};

// Every square submatrix has determinant in {-1, 0, 1}. Enumerates by
// ascending order and lexicographic (rows, cols); the witness is the first
// violation in that order. Throws kBoundExceeded if min(rows, cols) > bound.
UnimodularityVerdict is_totally_unimodular(const IntegerMatrix& m,
                                           std::size_t bound = Limits{}.tu_order);

// Every maximal square submatrix has determinant in {-1, 0, 1}.
UnimodularityVerdict is_weakly_unimodular(const IntegerMatrix& m,
                                          std::size_t bound = Limits{}.tu_order);

// Lexicographic successor of a k-subset of {0..n-1}; false when exhausted.
bool next_combination(std::vector<std::size_t>& comb, std::size_t n);

}  // namespace regflow

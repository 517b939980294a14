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
#include <string>
#include <vector>

#include "regflow/gram_analysis.hpp"
#include "regflow/gram_matrix.hpp"
#include "regflow/integer_matrix.hpp"
#include "regflow/limits.hpp"
#include "regflow/matroid.hpp"

namespace regflow {

struct GPositiveBasis {
  // Q = U·F, totally unimodular, rows identity_rows[j] equal to e_j.
  IntegerMatrix q;
  // F = Z⁻¹ for the lexicographically first invertible row block Z of U.
  IntegerMatrix transform;
  std::vector<std::size_t> identity_rows;
  GramMatrix gram;
};

// Rebases a TU certificate of A onto an identity row block. Throws
// kPrecondition if UᵀU differs from A or U has deficient column rank.
GPositiveBasis to_g_positive_basis(const GramMatrix& a, const IntegerMatrix& u,
                                   const Limits& limits = {});

struct ReconstructionReport {
  GramMatrix gram;
  FeasibilityResult feasibility;
  // Present when feasible.
  std::optional<IntegerMatrix> certificate;
  // [-L; I_s]: the certificate rebased, rows reordered and sign-normalized.
  std::optional<IntegerMatrix> block_basis;
  // [I_r L], columns labelled e1..ek.
  std::optional<IntegerMatrix> standard_form;
  // The co-loop-free matroid represented by standard_form.
  std::optional<RegularMatroid> matroid;
  // Zero rows of the input basis, i.e. co-loops that the lattice cannot see.
  std::size_t zero_rows = 0;

  bool feasible() const { return matroid.has_value(); }
};

// Throws kNotPositiveDefinite before any combinatorial work.
ReconstructionReport reconstruct_matroid(const GramMatrix& a, const Limits& limits = {});

// Same pipeline from an explicit basis (columns in ambient coordinates) of
// a flow lattice. Throws kPrecondition when the basis is not unimodularly
// equivalent to a totally unimodular one.
ReconstructionReport reconstruct_from_basis(const IntegerMatrix& basis,
                                            const Limits& limits = {});

// Sections VERDICT, GRAM, X, CERTIFICATE, STANDARD-FORM, MATROID.
std::string to_text(const ReconstructionReport& report);

struct IsometryWitness {
  // Co-loop-free minors of the two inputs (after the duality reduction).
  RegularMatroid first;
  RegularMatroid second;
  // bijection[i]: element of `second` matched with element i of `first`.
  std::vector<std::size_t> bijection;
  // Fundamental bases matched column by column, with equal Gram matrices.
  IntegerMatrix first_basis;
  IntegerMatrix second_basis;
  GramMatrix gram;
};

struct IsometryResult {
  bool isometric = false;
  std::optional<IsometryWitness> witness;
};

// Λ(M) ≅ Λ(N), decided by matroid isomorphism of M• and N•.
IsometryResult flow_lattices_isometric(const RegularMatroid& m, const RegularMatroid& n,
                                       const Limits& limits = {});
// Γ(M) ≅ Γ(N).
IsometryResult cut_lattices_isometric(const RegularMatroid& m, const RegularMatroid& n,
                                      const Limits& limits = {});
// Λ(M) ≅ Γ(N).
IsometryResult mixed_isometric(const RegularMatroid& m, const RegularMatroid& n,
                               const Limits& limits = {});

}  // namespace regflow

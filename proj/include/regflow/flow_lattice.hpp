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

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regflow/gram_matrix.hpp"
#include "regflow/integer_matrix.hpp"
#include "regflow/limits.hpp"
#include "regflow/matroid.hpp"

namespace regflow {

// An integer vector of the ambient edge space Z^E.
class FlowVector {
 public:
  FlowVector() = default;
  explicit FlowVector(IntegerVector coords) : coords_(std::move(coords)) {}

  const IntegerVector& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  const Integer& operator[](std::size_t e) const { return coords_[e]; }

  GroundSubset support() const;
  bool is_zero() const;
  // ⟨β, β⟩
  Integer norm2() const;
  // Σ |β(e)|
  Integer l1_norm() const;

  FlowVector operator-() const;
  friend FlowVector operator+(const FlowVector& a, const FlowVector& b);
  friend FlowVector operator-(const FlowVector& a, const FlowVector& b);
  friend FlowVector operator*(const Integer& k, const FlowVector& a);
  friend bool operator==(const FlowVector&, const FlowVector&) = default;
  friend auto operator<=>(const FlowVector& a, const FlowVector& b) {
    return a.coords_ <=> b.coords_;
  }

 private:
  IntegerVector coords_;
};

Integer inner(const FlowVector& a, const FlowVector& b);
std::string to_text(const FlowVector& v);

// Checks that the columns are independent and returns basisᵀ·basis; throws
// kNotPositiveDefinite naming the first vanishing leading minor.
GramMatrix gram_of(const IntegerMatrix& columns);

// Sublattice of Z^E with a basis given by matrix columns. When a source
// matroid is attached, the lattice lies in the kernel of its
// representation.
class FlowLattice {
 public:
  FlowLattice() = default;
  explicit FlowLattice(IntegerMatrix basis,
                       std::optional<RegularMatroid> source = std::nullopt);

  std::size_t ambient() const { return basis_.rows(); }
  std::size_t dimension() const { return basis_.cols(); }
  const IntegerMatrix& basis() const { return basis_; }
  const GramMatrix& gram() const { return gram_; }
  const std::optional<RegularMatroid>& source() const { return source_; }

  FlowVector basis_vector(std::size_t i) const;
  FlowVector at(std::span<const Integer> coefficients) const;
  // Coordinates in the basis, or nullopt if v is not a lattice vector.
  std::optional<IntegerVector> coefficients_of(const FlowVector& v) const;

 private:
  IntegerMatrix basis_;
  GramMatrix gram_;
  std::optional<RegularMatroid> source_;
};

// Λ(M) with basis [-L; I_s] read back in ground order.
FlowLattice fundamental_basis(const RegularMatroid& m, const GroundSubset& base);

// Γ(M) with basis the rows of [I_r L] in ground order. The attached source
// is the dual matroid, whose kernel is Row(M).
FlowLattice cut_basis(const RegularMatroid& m, const GroundSubset& base);

// The two {-1,0,1} kernel vectors supported exactly on `circuit`; the
// first has its leading nonzero entry positive.
FlowVector simple_flow_on(const RegularMatroid& m, const GroundSubset& circuit);

// ±α_C for every circuit C, in circuit order, positive orientation first.
std::vector<FlowVector> simple_flows(const RegularMatroid& m, const Limits& limits = {});

// Multiset of simple flows A with Σ A = beta, each supported inside
// supp(beta) and agreeing with beta in sign. Needs a lattice with a source;
// throws kNotInLattice naming a violated kernel equation.
std::vector<FlowVector> consistent_decompose(const FlowLattice& lattice,
                                             const FlowVector& beta);

// Empty when `parts` is a consistent decomposition of `beta` into simple
// flows of `m`; otherwise a description of the first violated condition.
std::optional<std::string> check_consistent_decomposition(
    const RegularMatroid& m, const FlowVector& beta, std::span<const FlowVector> parts);

struct SimplicityVerdict {
  bool simple = false;
  // When not simple: β and γ = α - β, both nonzero, with ⟨β, γ⟩ >= 0.
  // Coefficients are lattice coordinates; β is lexicographically least.
  IntegerVector beta_coefficients;
  IntegerVector gamma_coefficients;
  FlowVector beta;
  FlowVector gamma;
  Integer inner_product;
};

// Condition (b) of the metric characterisation: every splitting α = β + γ
// into nonzero lattice vectors has ⟨β, γ⟩ < 0. Only Gram data are used.
// Throws kDomain for α = 0.
SimplicityVerdict is_simple_element(const GramMatrix& gram,
                                    const IntegerVector& coefficients);
SimplicityVerdict is_simple_metric(const FlowLattice& lattice,
                                   const IntegerVector& coefficients);
// Ambient-coordinate form; kNotInLattice if alpha is not a lattice vector.
SimplicityVerdict is_simple_metric(const FlowLattice& lattice, const FlowVector& alpha);

}  // namespace regflow

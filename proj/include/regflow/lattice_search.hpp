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

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "regflow/gram_matrix.hpp"
#include "regflow/integer_matrix.hpp"

namespace regflow {

// Visits every x in Z^s with (x - center)ᵀ G (x - center) <= radius2,
// where G is positive definite (kNotPositiveDefinite otherwise). All
// arithmetic is exact: G = Uᵀ D U is factored over Q and each coordinate
// range is found by walking outward from the rounded centre.
void enumerate_ellipsoid(const GramMatrix& g, std::span<const Rational> center,
                         const Rational& radius2,
                         const std::function<void(const IntegerVector&)>& visit);

// Nonzero coefficient vectors of norm <= max_norm, in lexicographic order.
std::vector<IntegerVector> short_vectors(const GramMatrix& g, const Integer& max_norm);

// xᵀ G y.
Integer bilinear(const GramMatrix& g, std::span<const Integer> x,
                 std::span<const Integer> y);

// Searches for T with Tᵀ·b·T = a, i.e. an isometry from the lattice with
// Gram a onto the lattice with Gram b; column i of T holds the
// b-coordinates of the image of basis vector i. Such a T is automatically
// unimodular. Works only from the two Gram matrices.
std::optional<IntegerMatrix> find_isometry(const GramMatrix& a, const GramMatrix& b);

}  // namespace regflow

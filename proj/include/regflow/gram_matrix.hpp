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

#include "regflow/integer_matrix.hpp"

namespace regflow {

// Symmetric integer matrix with positive diagonal.
class GramMatrix {
 public:
  GramMatrix() = default;
  // Throws kDimension if not square, kPrecondition if asymmetric or some
  // diagonal entry is not positive.
  explicit GramMatrix(IntegerMatrix entries);

  std::size_t order() const { return entries_.rows(); }
  const IntegerMatrix& entries() const { return entries_; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_(i, j);
  }

  // Leading principal minors all positive. Returns the order (1-based) of
  // the first non-positive leading minor, or 0 when positive definite.
  std::size_t first_nonpositive_leading_minor() const;

  friend bool operator==(const GramMatrix& a, const GramMatrix& b) {
    return a.entries_ == b.entries_;
  }

 private:
  IntegerMatrix entries_;
};

}  // namespace regflow

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

#include "regflow/gram_matrix.hpp"

#include <string>
#include <vector>

#include "regflow/errors.hpp"
#include "regflow/exact_linalg.hpp"

namespace regflow {

GramMatrix::GramMatrix(IntegerMatrix entries) : entries_(std::move(entries)) {
  if (!entries_.is_square()) {
    throw Error(ErrorCode::kDimension, "Gram matrix must be square");
  }
  for (std::size_t i = 0; i < order(); ++i) {
    if (sgn(entries_(i, i)) <= 0) {
      throw Error(ErrorCode::kPrecondition,
                  "Gram diagonal entry " + std::to_string(i + 1) + " is not positive");
    }
    for (std::size_t j = i + 1; j < order(); ++j) {
      if (entries_(i, j) != entries_(j, i)) {
        throw Error(ErrorCode::kPrecondition,
                    "Gram matrix is not symmetric at (" + std::to_string(i + 1) +
                        "," + std::to_string(j + 1) + ")");
      }
    }
  }
}

std::size_t GramMatrix::first_nonpositive_leading_minor() const {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < order(); ++k) {
    idx.push_back(k);
    if (sgn(determinant(entries_.submatrix(idx, idx))) <= 0) return k + 1;
  }
  return 0;
}

}  // namespace regflow

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

namespace regflow {

// Hard caps for the exponential searches. Exceeding one raises
// ErrorCode::kBoundExceeded instead of degrading to an approximation.
struct Limits {
  // min(rows, cols) for TU / WU enumeration and signing search.
  std::size_t tu_order = 10;
  // Ground-set size for circuit enumeration.
  std::size_t circuit_elements = 20;
  // Ground-set size for isomorphism search.
  std::size_t iso_elements = 12;
  // Order s of a Gram matrix for the 2^s subset tables.
  std::size_t gram_order = 20;
};

}  // namespace regflow

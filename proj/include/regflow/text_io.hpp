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

#include <string>
#include <string_view>
#include <vector>

#include "regflow/gram_matrix.hpp"
#include "regflow/integer_matrix.hpp"
#include "regflow/limits.hpp"
#include "regflow/matroid.hpp"

namespace regflow {

// Text formats. Blank lines and anything after '#' are ignored.
//
//   matrix:   "rows cols", then one line of integers per row
//   gram:     "gram s", then an s×s matrix in matrix format
//   matroid:  "matroid r m", a line of m labels, then an r×m matrix in
//             matrix format
//   graph:    one "tail head" pair of vertex ids per line
//
// Parse errors throw kParse with a 1-based line number; shape
// mismatches throw kDimension.

IntegerMatrix parse_matrix(std::string_view text);
GramMatrix parse_gram(std::string_view text);
RegularMatroid parse_matroid(std::string_view text, const Limits& limits = {});
// The matrix of a matroid file, without validating it as a representation.
IntegerMatrix parse_matroid_matrix(std::string_view text);
std::vector<Edge> parse_graph(std::string_view text);

// Comma- or whitespace-separated integers on one line.
IntegerVector parse_vector(std::string_view text);

enum class InputKind { kGraph, kMatroid, kMatrix, kGram };

// By header word: "matroid" or "gram"; anything else reads as a graph.
// Plain matrices are never guessed since "2 3" is also an edge.
InputKind detect_kind(std::string_view text);

// Graph or matroid input, detected or forced.
RegularMatroid parse_regular_matroid(std::string_view text, const Limits& limits = {});

std::string matroid_text(const RegularMatroid& m);
std::string gram_text(const GramMatrix& g);
std::string vector_text(const IntegerVector& v);

// Throws kParse if the file cannot be read.
std::string read_file(const std::string& path);

}  // namespace regflow

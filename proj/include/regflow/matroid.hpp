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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regflow/integer_matrix.hpp"
#include "regflow/limits.hpp"

namespace regflow {

// Sorted, duplicate-free set of ground-element indices.
class GroundSubset {
 public:
  GroundSubset() = default;
  // Sorts; throws kPrecondition on duplicates.
  explicit GroundSubset(std::vector<std::size_t> indices);
  static GroundSubset from_mask(std::uint64_t mask);

  const std::vector<std::size_t>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  bool contains(std::size_t e) const;
  std::uint64_t to_mask() const;
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  // kPrecondition if any index is >= ground_size.
  void check_within(std::size_t ground_size) const;

  friend bool operator==(const GroundSubset&, const GroundSubset&) = default;
  friend auto operator<=>(const GroundSubset& a, const GroundSubset& b) {
    return a.indices_ <=> b.indices_;
  }

 private:
  std::vector<std::size_t> indices_;
};

// A regular matroid given by a totally unimodular representation of full
// row rank; column j of rep() is labelled ground()[j].
class RegularMatroid {
 public:
  RegularMatroid() = default;
  // Checks label count/uniqueness, full row rank and total unimodularity.
  RegularMatroid(std::vector<std::string> ground, IntegerMatrix rep,
                 const Limits& limits = {});

  // Skips the TU enumeration; for representations that are TU by
  // construction (minors and duals of TU matrices).
  static RegularMatroid from_trusted(std::vector<std::string> ground,
                                     IntegerMatrix rep);

  const std::vector<std::string>& ground() const { return ground_; }
  const IntegerMatrix& rep() const { return rep_; }
  std::size_t rank() const { return rep_.rows(); }
  std::size_t size() const { return rep_.cols(); }
  std::size_t nullity() const { return size() - rank(); }

  // Throws kPrecondition for an unknown label.
  std::size_t index_of(std::string_view label) const;

  std::size_t rank_of(const GroundSubset& subset) const;
  bool is_base(const GroundSubset& subset) const;
  // Greedy base in ground order; contains every co-loop.
  GroundSubset first_base() const;

 private:
  RegularMatroid(std::vector<std::string> ground, IntegerMatrix rep, bool check_tu,
                 const Limits& limits);

  std::vector<std::string> ground_;
  IntegerMatrix rep_;
};

using Edge = std::pair<long, long>;

// Graphic matroid of a directed multigraph given as (tail, head) pairs.
// One incidence row is dropped per connected component; self-loops become
// zero columns. Elements are labelled e1..em in input order.
RegularMatroid from_graph(std::span<const Edge> edges);

struct Coordinatization {
  // [I_r L]; column j is the original element order[j].
  IntegerMatrix standard;
  std::vector<std::size_t> order;
  // Unimodular F with standard = F · rep · P.
  IntegerMatrix transform;

  IntegerMatrix l_block() const;
};

// Throws kNotABase when `base` has the wrong size or is dependent.
Coordinatization coordinatize(const RegularMatroid& m, const GroundSubset& base);

// Dual represented by [-Lᵀ I_s], columns returned to ground order.
RegularMatroid dual(const RegularMatroid& m, const GroundSubset& base);
RegularMatroid dual(const RegularMatroid& m);

// Minimal dependent sets, ordered by size then lexicographically.
std::vector<GroundSubset> circuits(const RegularMatroid& m,
                                   const Limits& limits = {});

struct LoopsAndColoops {
  GroundSubset loops;
  GroundSubset coloops;
};
LoopsAndColoops loops_and_coloops(const RegularMatroid& m);

// M• and M°; surviving elements keep their labels and relative order.
RegularMatroid contract_coloops(const RegularMatroid& m);
RegularMatroid delete_loops(const RegularMatroid& m);

struct IsomorphismResult {
  bool isomorphic = false;
  // bijection[i] is the element of the second matroid matched with element
  // i of the first; lexicographically least among all isomorphisms.
  std::vector<std::size_t> bijection;
};

IsomorphismResult is_isomorphic(const RegularMatroid& m, const RegularMatroid& n,
                                const Limits& limits = {});

}  // namespace regflow

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


// Graph generators and brute-force oracles shared by the unit tests and the
// acceptance suite. Nothing here calls the matroid code it is used to check.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "regflow/integer_matrix.hpp"
#include "regflow/matroid.hpp"

namespace regflow::testing {

using EdgeList = std::vector<Edge>;

std::size_t vertex_count(const EdgeList& edges);
bool is_connected(const EdgeList& edges);
bool has_bridge(const EdgeList& edges);

// Edge sets (bitmasks) of the cycles of a multigraph: connected
// subgraphs with every degree 2, a loop counting twice. Up to 20 edges.
std::vector<std::uint64_t> cycle_edge_sets(const EdgeList& edges);

// Connected multigraphs (loops and parallel edges allowed) with 1..max_edges
// edges, one per isomorphism class.
std::vector<EdgeList> connected_multigraphs(std::size_t max_edges);

// Simple connected graphs without cut-edges on 3..max_vertices vertices
// that use every vertex, one per isomorphism class.
std::vector<EdgeList> bridgeless_simple_graphs(std::size_t max_vertices);

EdgeList complete_graph(long n);
EdgeList complete_bipartite(long a, long b);
// n parallel edges between two vertices: U_{1,n}.
EdgeList bond(long n);

// Same graph with vertex ids permuted, edges shuffled and some edges
// reversed, plus `pendants` extra pendant edges hung off random vertices.
EdgeList scramble(const EdgeList& edges, std::mt19937_64& rng, std::size_t pendants = 0);

// Every base, by exhaustive subset search.
std::vector<GroundSubset> all_bases(const RegularMatroid& m);

// Minimal dependent sets by brute force over all subsets and ranks.
std::vector<GroundSubset> brute_force_circuits(const RegularMatroid& m);

// Naive cofactor expansion.
Integer cofactor_determinant(const IntegerMatrix& m);

IntegerMatrix random_matrix(std::size_t rows, std::size_t cols, long lo, long hi,
                            std::mt19937_64& rng);
// Product of random elementary integer operations and signed permutations.
IntegerMatrix random_unimodular(std::size_t n, std::mt19937_64& rng);

// The 5×10 representation [I_5 | circulant] of R10.
RegularMatroid r10();

}  // namespace regflow::testing

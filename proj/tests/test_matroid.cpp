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


#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "regflow/errors.hpp"
#include "regflow/exact_linalg.hpp"
#include "regflow/matroid.hpp"
#include "support.hpp"

namespace regflow {
namespace {

using testing::EdgeList;

RegularMatroid graph(const EdgeList& edges) { return from_graph(edges); }

RegularMatroid uniform_rank_one(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t e = 0; e < n; ++e) labels.push_back("e" + std::to_string(e + 1));
  return RegularMatroid(labels, IntegerMatrix(1, n, std::vector<Integer>(n, Integer(1))));
}

std::set<std::uint64_t> masks(const std::vector<GroundSubset>& sets) {
  std::set<std::uint64_t> out;
  for (const auto& s : sets) out.insert(s.to_mask());
  return out;
}

std::vector<std::size_t> sizes(const std::vector<GroundSubset>& sets) {
  std::vector<std::size_t> out;
  for (const auto& s : sets) out.push_back(s.size());
  return out;
}

const EdgeList kTriangle{{1, 2}, {2, 3}, {3, 1}};
const EdgeList kBowtie{{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {5, 3}};
const EdgeList kTwoTriangles{{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}};

TEST(FromGraph, Examples) {
  const auto triangle = graph(kTriangle);
  EXPECT_EQ(triangle.rank(), 2u);
  ASSERT_EQ(circuits(triangle).size(), 1u);
  EXPECT_EQ(circuits(triangle)[0].size(), 3u);

  const auto path = graph({{1, 2}, {2, 3}});
  EXPECT_EQ(path.rank(), 2u);
  EXPECT_TRUE(circuits(path).empty());

  const auto k4 = graph(testing::complete_graph(4));
  EXPECT_EQ(k4.rank(), 3u);
  EXPECT_EQ(sizes(circuits(k4)), (std::vector<std::size_t>{3, 3, 3, 3, 4, 4, 4}));
}

TEST(FromGraph, SignedIncidence) {
  // Vertex 1 is dropped; edge 1→2 enters vertex 2.
  const auto m = graph({{1, 2}, {2, 3}, {2, 2}});
  EXPECT_EQ(m.rep(), IntegerMatrix::from_rows({{1, -1, 0}, {0, 1, 0}}));
  EXPECT_EQ(m.ground(), (std::vector<std::string>{"e1", "e2", "e3"}));
}

TEST(FromGraph, EmptyIsAnError) {
  try {
    graph({});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPrecondition);
  }
}

TEST(RegularMatroidCtor, RejectsNonTotallyUnimodular) {
  EXPECT_THROW(RegularMatroid({"a", "b"}, IntegerMatrix::from_rows({{1, 1}, {-1, 1}})), Error);
  EXPECT_THROW(RegularMatroid({"a", "a"}, IntegerMatrix::from_rows({{1, 1}})), Error);
  EXPECT_THROW(RegularMatroid({"a", "b"}, IntegerMatrix::from_rows({{1, 1}, {1, 1}})), Error);
}

TEST(GroundSubsetType, Canonical) {
  EXPECT_EQ(GroundSubset({3, 1, 2}).indices(), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_THROW(GroundSubset({1, 1}), Error);
  EXPECT_EQ(GroundSubset::from_mask(0b1011).indices(), (std::vector<std::size_t>{0, 1, 3}));
}

TEST(Coordinatize, Triangle) {
  const auto m = graph(kTriangle);
  const Coordinatization c = coordinatize(m, GroundSubset({0, 1}));
  EXPECT_EQ(c.order, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(c.standard.select_columns(std::vector<std::size_t>{0, 1}), IntegerMatrix::identity(2));
  EXPECT_EQ(sharp(c.l_block()), IntegerMatrix::from_rows({{1}, {1}}));
  EXPECT_EQ(c.transform * m.rep().select_columns(c.order), c.standard);
  EXPECT_EQ(abs(determinant(c.transform)), 1);
}

TEST(Coordinatize, StandardFormIsKept) {
  const IntegerMatrix rep = IntegerMatrix::from_rows({{1, 0, 1, -1}, {0, 1, 1, 0}});
  const RegularMatroid m({"a", "b", "c", "d"}, rep);
  EXPECT_EQ(sharp(coordinatize(m, GroundSubset({0, 1})).standard), sharp(rep));
}

TEST(Coordinatize, StarOfK4) {
  const auto k4 = graph(testing::complete_graph(4));
  // Edges 1-2, 1-3, 1-4 are the first three.
  const IntegerMatrix l = coordinatize(k4, GroundSubset({0, 1, 2})).l_block();
  for (std::size_t j = 0; j < l.cols(); ++j) {
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < l.rows(); ++i) nonzero += sgn(l(i, j)) != 0;
    EXPECT_TRUE(nonzero == 2 || nonzero == 3);
  }
}

TEST(Coordinatize, RejectsNonBases) {
  const auto k4 = graph(testing::complete_graph(4));
  for (const auto& bad : {GroundSubset({0, 1}), GroundSubset({0, 1, 3})}) {
    try {
      coordinatize(k4, bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNotABase);
      EXPECT_NE(std::string(e.what()).find("dependent or undersized set"), std::string::npos);
    }
  }
}

TEST(Coordinatize, EveryBaseGivesTotallyUnimodularForm) {
  for (const auto& edges : {testing::complete_graph(4), kBowtie, testing::complete_bipartite(2, 3)}) {
    const auto m = graph(edges);
    for (const auto& b : testing::all_bases(m)) {
      const Coordinatization c = coordinatize(m, b);
      ASSERT_TRUE(is_totally_unimodular(c.standard).holds);
      ASSERT_EQ(c.transform * m.rep().select_columns(c.order), c.standard);
    }
  }
}

TEST(Dual, Examples) {
  const auto triangle = graph(kTriangle);
  const auto d = dual(triangle);
  EXPECT_EQ(d.rank(), 1u);
  EXPECT_EQ(sizes(circuits(d)), (std::vector<std::size_t>{2, 2, 2}));

  const RegularMatroid free({"a", "b"}, IntegerMatrix::identity(2));
  const auto loops = dual(free);
  EXPECT_EQ(loops.rank(), 0u);
  EXPECT_EQ(loops.size(), 2u);
  EXPECT_EQ(loops_and_coloops(loops).loops.size(), 2u);

  const auto k4 = graph(testing::complete_graph(4));
  const auto k4_dual = dual(k4);
  EXPECT_EQ(k4_dual.rank(), 3u);
  EXPECT_EQ(k4_dual.size(), 6u);
  EXPECT_TRUE(is_totally_unimodular(k4_dual.rep()).holds);
}

TEST(Dual, RowSpaceIsOrthogonalToKernel) {
  const auto m = graph(kBowtie);
  for (const auto& b : testing::all_bases(m)) {
    EXPECT_TRUE((m.rep() * dual(m, b).rep().transpose()).is_zero());
  }
}

TEST(Dual, DualOfDualHasTheSameCircuits) {
  std::mt19937_64 rng(31);
  const auto graphs = testing::connected_multigraphs(5);
  for (int trial = 0; trial < 80; ++trial) {
    EdgeList edges = graphs[rng() % graphs.size()];
    if (rng() % 2) {
      // Up to 8 elements.
      const auto extra = testing::connected_multigraphs(3)[rng() % 6];
      for (auto [u, v] : extra) edges.emplace_back(u + 100, v + 100);
    }
    const auto m = graph(edges);
    const auto dd = dual(dual(m));
    EXPECT_EQ(dd.ground(), m.ground());
    EXPECT_EQ(circuits(dd), circuits(m));
  }
}

TEST(Circuits, MatchCycleOracleOnSmallGraphs) {
  std::size_t checked = 0;
  for (const auto& edges : testing::connected_multigraphs(6)) {
    if (testing::vertex_count(edges) > 5) continue;
    const auto expected = testing::cycle_edge_sets(edges);
    EXPECT_EQ(masks(circuits(graph(edges))), std::set<std::uint64_t>(expected.begin(), expected.end()));
    ++checked;
  }
  for (const auto& edges : testing::bridgeless_simple_graphs(5)) {
    const auto expected = testing::cycle_edge_sets(edges);
    EXPECT_EQ(masks(circuits(graph(edges))), std::set<std::uint64_t>(expected.begin(), expected.end()));
    ++checked;
  }
  EXPECT_GT(checked, 100u);
}

TEST(Circuits, MatchBruteForceAndAreSorted) {
  for (const auto& edges : {testing::complete_graph(5), testing::complete_bipartite(3, 3)}) {
    const auto m = graph(edges);
    EXPECT_EQ(circuits(m), testing::brute_force_circuits(m));
  }
  const auto r10 = testing::r10();
  EXPECT_EQ(circuits(r10), testing::brute_force_circuits(r10));
  EXPECT_EQ(circuits(uniform_rank_one(3)), testing::brute_force_circuits(uniform_rank_one(3)));
}

// C is a circuit of M exactly when E - C is a hyperplane of M*.
TEST(Circuits, ComplementsOfDualHyperplanes) {
  for (const auto& edges : {testing::complete_graph(4), kBowtie, testing::complete_bipartite(2, 3)}) {
    const auto m = graph(edges);
    const auto d = dual(m);
    const std::size_t n = m.size();
    std::set<std::uint64_t> hyperplane_complements;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const GroundSubset x = GroundSubset::from_mask(mask);
      if (d.rank_of(x) + 1 != d.rank()) continue;
      bool closed = true;
      for (std::size_t e = 0; e < n && closed; ++e) {
        if (x.contains(e)) continue;
        auto grown = x.indices();
        grown.push_back(e);
        closed = d.rank_of(GroundSubset(grown)) > d.rank_of(x);
      }
      if (closed) hyperplane_complements.insert(((std::uint64_t{1} << n) - 1) & ~mask);
    }
    EXPECT_EQ(masks(circuits(m)), hyperplane_complements);
  }
}

TEST(Circuits, RespectBound) {
  Limits tight;
  tight.circuit_elements = 5;
  EXPECT_THROW(circuits(graph(testing::complete_graph(4)), tight), Error);
}

TEST(LoopsAndColoops, Examples) {
  const auto path = graph({{1, 2}, {2, 3}});
  EXPECT_EQ(loops_and_coloops(path).coloops, GroundSubset({0, 1}));
  EXPECT_TRUE(loops_and_coloops(path).loops.empty());

  const auto looped = graph({{1, 2}, {2, 3}, {3, 1}, {2, 2}});
  EXPECT_EQ(loops_and_coloops(looped).loops, GroundSubset({3}));
  EXPECT_TRUE(loops_and_coloops(looped).coloops.empty());

  const auto k4 = graph(testing::complete_graph(4));
  EXPECT_TRUE(loops_and_coloops(k4).loops.empty());
  EXPECT_TRUE(loops_and_coloops(k4).coloops.empty());
}

TEST(LoopsAndColoops, ColoopsAreInNoCircuit) {
  for (const auto& edges : testing::connected_multigraphs(5)) {
    const auto m = graph(edges);
    std::uint64_t covered = 0;
    for (const auto& c : circuits(m)) covered |= c.to_mask();
    const std::uint64_t all = (std::uint64_t{1} << m.size()) - 1;
    EXPECT_EQ(loops_and_coloops(m).coloops.to_mask(), all & ~covered);
  }
}

TEST(Minors, Examples) {
  const auto tree = contract_coloops(graph({{1, 2}, {2, 3}, {2, 4}}));
  EXPECT_EQ(tree.size(), 0u);
  EXPECT_EQ(tree.rank(), 0u);

  const auto pendant = contract_coloops(graph({{1, 2}, {2, 3}, {3, 1}, {3, 4}}));
  EXPECT_EQ(pendant.ground(), (std::vector<std::string>{"e1", "e2", "e3"}));
  EXPECT_EQ(circuits(pendant), circuits(graph(kTriangle)));

  const auto k4 = graph(testing::complete_graph(4));
  EXPECT_EQ(circuits(contract_coloops(k4)), circuits(k4));

  const auto looped = delete_loops(graph({{1, 2}, {2, 3}, {3, 1}, {2, 2}}));
  EXPECT_EQ(looped.ground(), (std::vector<std::string>{"e1", "e2", "e3"}));
}

TEST(Minors, ContractionLeavesNoColoopsAndKeepsCircuits) {
  for (const auto& edges : testing::connected_multigraphs(5)) {
    const auto m = graph(edges);
    const auto core = contract_coloops(m);
    EXPECT_TRUE(loops_and_coloops(core).coloops.empty());
    // Circuits avoid co-loops, so they survive with relabelled indices.
    std::set<std::vector<std::string>> before, after;
    for (const auto& c : circuits(m)) {
      std::vector<std::string> names;
      for (std::size_t e : c) names.push_back(m.ground()[e]);
      before.insert(names);
    }
    for (const auto& c : circuits(core)) {
      std::vector<std::string> names;
      for (std::size_t e : c) names.push_back(core.ground()[e]);
      after.insert(names);
    }
    EXPECT_EQ(before, after);
    if (core.size() > 0 && core.rank() > 0) {
      const IntegerMatrix l = coordinatize(core, core.first_base()).l_block();
      for (std::size_t i = 0; i < l.rows(); ++i) EXPECT_FALSE(l.row_is_zero(i));
    }
  }
}

TEST(Isomorphism, Examples) {
  const auto bowtie = graph(kBowtie);
  const auto two = graph(kTwoTriangles);
  EXPECT_TRUE(is_isomorphic(bowtie, two).isomorphic);
  EXPECT_FALSE(is_isomorphic(uniform_rank_one(3), graph(kTriangle)).isomorphic);

  const auto k4 = graph(testing::complete_graph(4));
  const auto self = is_isomorphic(k4, k4);
  ASSERT_TRUE(self.isomorphic);
  EXPECT_EQ(self.bijection, (std::vector<std::size_t>{0, 1, 2, 3, 4, 5}));
}

TEST(Isomorphism, WitnessMapsCircuitsToCircuits) {
  std::mt19937_64 rng(37);
  const auto graphs = testing::connected_multigraphs(6);
  for (int trial = 0; trial < 60; ++trial) {
    const auto& edges = graphs[rng() % graphs.size()];
    const auto m = graph(edges);
    const auto n = graph(testing::scramble(edges, rng));
    const auto iso = is_isomorphic(m, n);
    ASSERT_TRUE(iso.isomorphic);
    std::set<std::uint64_t> mapped;
    for (const auto& c : circuits(m)) {
      std::vector<std::size_t> image;
      for (std::size_t e : c) image.push_back(iso.bijection[e]);
      mapped.insert(GroundSubset(image).to_mask());
    }
    EXPECT_EQ(mapped, masks(circuits(n)));
  }
}

TEST(Isomorphism, CographicK4IsGraphicK4) {
  const auto k4 = graph(testing::complete_graph(4));
  EXPECT_TRUE(is_isomorphic(k4, dual(k4)).isomorphic);
  const auto k33 = graph(testing::complete_bipartite(3, 3));
  EXPECT_FALSE(is_isomorphic(k33, dual(k33)).isomorphic);
}

TEST(Isomorphism, RespectsBound) {
  const auto big = graph(testing::bond(13));
  try {
    is_isomorphic(big, big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBoundExceeded);
  }
}

}  // namespace
}  // namespace regflow

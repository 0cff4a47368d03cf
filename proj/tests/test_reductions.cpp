// Copyright 2026 The symprep authors
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

#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "support/fixtures.hpp"
#include "symprep/coloring.hpp"
#include "symprep/graph.hpp"
#include "symprep/perm.hpp"
#include "symprep/reductions.hpp"
#include "symprep/reference_solver.hpp"
#include "symprep/refinement.hpp"
#include "symprep/repmap.hpp"

using namespace symprep;

namespace {

struct Pipeline {
  ColoredGraph g;
  Coloring pi;
  RepChain chain;
  std::vector<SparseAutomorphism> gens;

  explicit Pipeline(ColoredGraph graph)
      : g(std::move(graph)),
        pi(Coloring::from_graph(g)),
        chain(RepChain::identity(g.n())) {
    refine(g, pi);
  }
};

SparseAutomorphism perm(std::vector<std::pair<int, int>> pairs) {
  return SparseAutomorphism::from_pairs(std::move(pairs));
}

}  // namespace

TEST_CASE("singleton cells are dropped") {
  Pipeline p(fixtures::path(3));
  CHECK(remove_singletons(p.g, p.pi, p.chain) == 1);
  CHECK(p.g.n() == 2);
  CHECK(p.g.m() == 0);
  CHECK(p.chain.dropped() == std::vector<int>{1});
  CHECK(remove_singletons(p.g, p.pi, p.chain) == 0);
}

TEST_CASE("isolated cells emit adjacent transpositions") {
  ColoredGraph g = build_graph(5, {{2, 3}, {3, 4}, {2, 4}});
  Pipeline p(g);
  CHECK(remove_degree0(p.g, p.pi, p.chain, p.gens) == 2);
  CHECK(p.g.n() == 3);
  CHECK(p.g.m() == 3);
  REQUIRE(p.gens.size() == 1);
  CHECK(p.gens[0] == perm({{0, 1}, {1, 0}}));
  CHECK(p.chain.dropped() == std::vector<int>{0, 1});
}

TEST_CASE("a clique on everything is a symmetric factor") {
  Pipeline p(fixtures::complete(4));
  CHECK(remove_universal(p.g, p.pi, p.chain, p.gens) == 4);
  CHECK(p.g.n() == 0);
  REQUIRE(p.gens.size() == 3);
  CHECK(group_closure(p.gens, 4).size() == 24);
}

TEST_CASE("an independent pair joined to everything is universal") {
  // C5 plus two non-adjacent apex vertices.
  ColoredGraph g = build_graph(
      7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
          {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4},
          {6, 0}, {6, 1}, {6, 2}, {6, 3}, {6, 4}});
  Pipeline p(g);
  CHECK(remove_universal(p.g, p.pi, p.chain, p.gens) == 2);
  CHECK(p.g.n() == 5);
  CHECK(p.g.m() == 5);
  REQUIRE(p.gens.size() == 1);
  CHECK(p.gens[0] == perm({{5, 6}, {6, 5}}));
}

TEST_CASE("pendant vertices fold into their attachment points") {
  Pipeline p(fixtures::path(5));
  CHECK(remove_degree1(p.g, p.pi, p.chain, p.gens) == 4);
  CHECK(p.g.n() == 1);
  REQUIRE(p.gens.size() == 1);
  CHECK(p.gens[0] == perm({{0, 4}, {4, 0}, {1, 3}, {3, 1}}));
  CHECK(p.chain.string_tail(2) == std::vector<int>{1, 0, 3, 4});
}

TEST_CASE("equal-length spider legs fold leg by leg") {
  Pipeline p(fixtures::spider({2, 2}));
  CHECK(remove_degree1(p.g, p.pi, p.chain, p.gens) == 4);
  CHECK(p.g.n() == 1);
  REQUIRE(p.gens.size() == 1);
  CHECK(p.gens[0] == perm({{1, 3}, {3, 1}, {2, 4}, {4, 2}}));
}

TEST_CASE("a cell matched to itself carries wreath symmetry") {
  ColoredGraph g = build_graph(4, {{0, 1}, {2, 3}});
  Pipeline p(g);
  CHECK(remove_degree1(p.g, p.pi, p.chain, p.gens) == 4);
  CHECK(p.g.n() == 0);
  REQUIRE(p.gens.size() == 3);
  CHECK(p.gens[0] == perm({{0, 1}, {1, 0}}));
  CHECK(p.gens[1] == perm({{2, 3}, {3, 2}}));
  CHECK(p.gens[2] == perm({{0, 2}, {2, 0}, {1, 3}, {3, 1}}));
  CHECK(group_closure(p.gens, 4).size() == 8);
  CHECK(p.chain.dropped() == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("coinciding middle layers collapse to direct edges") {
  Pipeline p(fixtures::match_gadget());
  CHECK(reduce_obfuscated_matchings(p.g, p.pi, p.chain) == 8);
  CHECK(p.g.n() == 8);
  CHECK(p.g.m() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(p.g.has_edge(i, 4 + i));
    CHECK(p.chain.string_tail(i) == std::vector<int>{4 + i, 8 + i});
  }
  // The surviving coloring still separates the two endpoint cells.
  CHECK(p.g.color(0) != p.g.color(4));
}

TEST_CASE("layers encoding different bijections stay") {
  // Two middle layers between X = {0,1} and Y = {2,3}: one encodes the
  // identity, the other the swap.
  ColoredGraph g = build_graph(8,
                               {{0, 4}, {4, 2}, {1, 5}, {5, 3},
                                {0, 6}, {6, 3}, {1, 7}, {7, 2}},
                               {0, 0, 1, 1, 2, 2, 3, 3});
  Pipeline p(g);
  CHECK(reduce_obfuscated_matchings(p.g, p.pi, p.chain) == 2);
  CHECK(p.g.n() == 6);
  CHECK(p.chain.string_tail(0) == std::vector<int>{4});
  CHECK(p.chain.string_tail(1) == std::vector<int>{5});
  // The swap layer is still there, plus the two inserted direct edges.
  CHECK(p.g.m() == 6);
  CHECK(reduce_obfuscated_matchings(p.g, p.pi, p.chain) == 0);
}

TEST_CASE("an existing direct edge blocks the matching reduction") {
  ColoredGraph g = build_graph(6,
                               {{0, 4}, {4, 2}, {1, 5}, {5, 3},
                                {0, 2}, {1, 3}},
                               {0, 0, 1, 1, 2, 2});
  Pipeline p(g);
  CHECK(reduce_obfuscated_matchings(p.g, p.pi, p.chain) == 0);
  CHECK(p.g.n() == 6);
}

TEST_CASE("unique-endpoint chains fold into their owners") {
  // Two disjoint length-3 paths from X = {0,1} meeting at a shared sink.
  ColoredGraph g = build_graph(7,
                               {{0, 2}, {2, 4}, {4, 6},
                                {1, 3}, {3, 5}, {5, 6}},
                               {0, 0, 1, 1, 2, 2, 3});
  Pipeline p(g);
  CHECK(reduce_unique_endpoint_paths(p.g, p.pi, p.chain) == 4);
  CHECK(p.g.n() == 3);
  CHECK(p.g.m() == 2);
  CHECK(p.chain.string_tail(0) == std::vector<int>{2, 4});
  CHECK(p.chain.string_tail(1) == std::vector<int>{3, 5});
}

TEST_CASE("the chain-length cap is honored") {
  ColoredGraph g = build_graph(7,
                               {{0, 2}, {2, 4}, {4, 6},
                                {1, 3}, {3, 5}, {5, 6}},
                               {0, 0, 1, 1, 2, 2, 3});
  Pipeline p(g);
  CHECK(reduce_unique_endpoint_paths(p.g, p.pi, p.chain, 1) == 0);
  CHECK(p.g.n() == 7);
  CHECK(reduce_unique_endpoint_paths(p.g, p.pi, p.chain, 2) == 4);
  CHECK(p.g.n() == 3);
}

TEST_CASE("a complete path bundle is deleted outright") {
  Pipeline p(fixtures::flip_gadget());
  CHECK(reduce_obfuscated_edge_flip(p.g, p.pi, p.chain) == 16);
  CHECK(p.g.n() == 6);
  CHECK(p.g.m() == 0);

  // Swapping two sinks routes their paths across the stored records.
  auto lifted = p.chain.lift(perm({{2, 3}, {3, 2}}));
  CHECK(lifted == perm({{2, 3}, {3, 2}, {6, 7}, {7, 6}, {14, 15}, {15, 14},
                        {10, 11}, {11, 10}, {18, 19}, {19, 18}}));
  CHECK(is_automorphism(fixtures::flip_gadget(), lifted));

  auto swap_sources = p.chain.lift(perm({{0, 1}, {1, 0}}));
  CHECK(is_automorphism(fixtures::flip_gadget(), swap_sources));
}

TEST_CASE("an incomplete path bundle stays") {
  // Both paths from x0 land on y2, so the bundle misses (0, 3) and (1, 2).
  ColoredGraph g = build_graph(8,
                               {{0, 4}, {4, 2}, {0, 5}, {5, 2},
                                {1, 6}, {6, 3}, {1, 7}, {7, 3}},
                               {0, 0, 1, 1, 2, 2, 2, 2});
  Pipeline p(g);
  CHECK(reduce_obfuscated_edge_flip(p.g, p.pi, p.chain) == 0);
  CHECK(p.g.n() == 8);
}

TEST_CASE("the flip cap is honored") {
  Pipeline p(fixtures::flip_gadget());
  CHECK(reduce_obfuscated_edge_flip(p.g, p.pi, p.chain, 1) == 0);
  CHECK(p.g.n() == 22);
  CHECK(reduce_obfuscated_edge_flip(p.g, p.pi, p.chain, 2) == 16);
  CHECK(p.g.n() == 6);
}

TEST_CASE("low-degree detection drives the outer loop") {
  Pipeline p3(fixtures::path(3));
  CHECK(has_low_degree_cell(p3.g, p3.pi));

  Pipeline c4(fixtures::cycle(4));
  CHECK_FALSE(has_low_degree_cell(c4.g, c4.pi));

  ColoredGraph lone = build_graph(1, {});
  Pipeline one(lone);
  CHECK(has_low_degree_cell(one.g, one.pi));

  ColoredGraph empty = build_graph(0, {});
  Pipeline none(empty);
  CHECK_FALSE(has_low_degree_cell(none.g, none.pi));
}

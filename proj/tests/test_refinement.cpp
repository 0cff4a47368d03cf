// Copyright 2026 The symprep authors
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

#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "symprep/refinement.hpp"

using symprep::Coloring;
using symprep::refine;

namespace {

Coloring refined(const symprep::ColoredGraph& g) {
  auto pi = Coloring::from_graph(g);
  refine(g, pi);
  return pi;
}

}  // namespace

TEST_CASE("path refinement splits by distance to the ends") {
  auto pi4 = refined(fixtures::path(4));
  CHECK(pi4.partition_sets() ==
        std::vector<std::vector<int>>{{0, 3}, {1, 2}});
  CHECK(pi4.cells_by_id() ==
        std::vector<std::pair<long long, int>>{{0, 0}, {2, 2}});

  auto pi5 = refined(fixtures::path(5));
  CHECK(pi5.partition_sets() ==
        std::vector<std::vector<int>>{{0, 4}, {1, 3}, {2}});
  CHECK(pi5.cells_by_id() ==
        std::vector<std::pair<long long, int>>{{0, 0}, {2, 2}, {3, 3}});
}

TEST_CASE("star refinement separates the center") {
  auto pi = refined(fixtures::star(3));
  CHECK(pi.partition_sets() ==
        std::vector<std::vector<int>>{{0}, {1, 2, 3}});
  CHECK(pi.cell_id(pi.cell_of(1)) == 0);
  CHECK(pi.cell_id(pi.cell_of(0)) == 3);
}

TEST_CASE("regular graphs stay monolithic") {
  for (auto g : {fixtures::cycle(4), fixtures::cycle(5), fixtures::cube(),
                 fixtures::petersen()}) {
    auto pi = refined(g);
    CHECK(pi.num_cells() == 1);
    CHECK(symprep::is_equitable(g, pi));
  }
}

TEST_CASE("equitability detection") {
  auto p4 = fixtures::path(4);
  auto uniform = Coloring::from_graph(p4);
  CHECK_FALSE(symprep::is_equitable(p4, uniform));
  CHECK(symprep::is_equitable(p4, refined(p4)));
}

TEST_CASE("matches the naive fixed-point oracle") {
  std::vector<symprep::ColoredGraph> corpus{
      fixtures::path(7),       fixtures::star(5),
      fixtures::cycle(6),      fixtures::spider({1, 2, 3}),
      fixtures::match_gadget(), fixtures::flip_gadget(),
  };
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    corpus.push_back(fixtures::gnp(12, 0.3, seed));
    corpus.push_back(fixtures::gnp(9, 0.5, seed, 2));
    corpus.push_back(fixtures::random_tree(14, seed));
  }
  for (const auto& g : corpus) {
    auto pi = refined(g);
    CHECK(symprep::is_equitable(g, pi));
    CHECK(oracles::partition_of(pi) == oracles::equitable_partition(g));
  }
}

TEST_CASE("cell ids are invariant under relabeling") {
  std::vector<symprep::ColoredGraph> corpus{
      fixtures::path(8), fixtures::spider({2, 2, 3}),
      fixtures::gnp(11, 0.4, 7), fixtures::random_tree(13, 3)};
  for (const auto& g : corpus) {
    auto base = refined(g);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto p = fixtures::random_perm(g.n(), seed * 31 + 1);
      auto h = symprep::apply_permutation(g, p);
      auto hpi = refined(h);
      auto a = base.cells_by_id();
      auto b = hpi.cells_by_id();
      REQUIRE(a.size() == b.size());
      for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].first == b[i].first);
        auto ma = base.cell_members(a[i].second);
        std::vector<int> mapped(ma.begin(), ma.end());
        for (int& v : mapped) v = p[v];
        std::sort(mapped.begin(), mapped.end());
        auto mb = hpi.cell_members(b[i].second);
        std::vector<int> got(mb.begin(), mb.end());
        std::sort(got.begin(), got.end());
        CHECK(mapped == got);
      }
    }
  }
}

TEST_CASE("incremental refinement agrees with refinement from scratch") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    auto g = fixtures::gnp(10, 0.35, seed);
    auto pi = refined(g);
    int target = symprep::select_smallest_nontrivial(pi);
    if (target < 0) continue;
    int v = pi.vertex_at(target);

    auto incr = pi;
    refine(g, incr, std::vector<int>{incr.individualize(v)});

    auto scratch = Coloring::from_colors(incr.to_dense_colors());
    refine(g, scratch);
    CHECK(oracles::partition_of(incr) == oracles::partition_of(scratch));
    CHECK(symprep::is_equitable(g, incr));
  }
}

TEST_CASE("nontrivial cell selectors") {
  auto pi = refined(fixtures::path(5));
  int s = symprep::select_smallest_nontrivial(pi);
  CHECK(pi.cell_id(s) == 0);
  CHECK(symprep::first_nontrivial_by_id(pi) == s);

  auto discrete = Coloring::from_colors({2, 1, 0});
  CHECK(symprep::select_smallest_nontrivial(discrete) == -1);
  CHECK(symprep::first_nontrivial_by_id(discrete) == -1);
}

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

#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "symprep/graph.hpp"

namespace fixtures {

using symprep::ColoredGraph;
using Edges = std::vector<std::pair<int, int>>;

inline ColoredGraph path(int n) {
  Edges e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return symprep::build_graph(n, e);
}

inline ColoredGraph cycle(int n) {
  Edges e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return symprep::build_graph(n, e);
}

// Center is vertex 0, leaves are 1..k.
inline ColoredGraph star(int k) {
  Edges e;
  for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
  return symprep::build_graph(k + 1, e);
}

inline ColoredGraph complete(int n) {
  Edges e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return symprep::build_graph(n, e);
}

// 3-cube on the 3-bit vertex labels 0..7.
inline ColoredGraph cube() {
  Edges e;
  for (int v = 0; v < 8; ++v)
    for (int b = 0; b < 3; ++b)
      if (v < (v ^ (1 << b))) e.emplace_back(v, v ^ (1 << b));
  return symprep::build_graph(8, e);
}

inline ColoredGraph petersen() {
  Edges e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, 5 + i);
  }
  return symprep::build_graph(10, e);
}

// Center 0 with one pendant path of each length in `legs`.
inline ColoredGraph spider(const std::vector<int>& legs) {
  Edges e;
  int next = 1;
  for (int len : legs) {
    int prev = 0;
    for (int j = 0; j < len; ++j) {
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return symprep::build_graph(next, e);
}

// Two middle layers encoding the same perfect matching between X and Y:
// X = 0..3 (color 0), C = 4..7 (color 1), C' = 8..11 (color 2),
// Y = 12..15 (color 3); the paths are x_i - c_i - y_i and x_i - c'_i - y_i.
inline ColoredGraph match_gadget() {
  Edges e;
  std::vector<int> colors(16);
  for (int i = 0; i < 4; ++i) {
    e.emplace_back(i, 4 + i);
    e.emplace_back(4 + i, 12 + i);
    e.emplace_back(i, 8 + i);
    e.emplace_back(8 + i, 12 + i);
    colors[i] = 0;
    colors[4 + i] = 1;
    colors[8 + i] = 2;
    colors[12 + i] = 3;
  }
  return symprep::build_graph(16, e, colors);
}

// A complete bipartite relation between X = {0,1} (color 0) and
// Y = {2..5} (color 1) encoded as eight disjoint length-3 paths through
// C1 = 6..13 (color 2) and C2 = 14..21 (color 3): for k = 4x + (y-2) the
// path is x - (6+k) - (14+k) - y.
inline ColoredGraph flip_gadget() {
  Edges e;
  std::vector<int> colors(22, 3);
  colors[0] = colors[1] = 0;
  for (int y = 2; y <= 5; ++y) colors[y] = 1;
  for (int k = 0; k < 8; ++k) colors[6 + k] = 2;
  for (int x = 0; x < 2; ++x)
    for (int y = 2; y <= 5; ++y) {
      int k = 4 * x + (y - 2);
      e.emplace_back(x, 6 + k);
      e.emplace_back(6 + k, 14 + k);
      e.emplace_back(14 + k, y);
    }
  return symprep::build_graph(22, e, colors);
}

inline ColoredGraph with_colors(const ColoredGraph& g, std::vector<int> colors) {
  Edges e;
  for (auto [u, v] : g.edges()) e.emplace_back(u, v);
  return symprep::build_graph(g.n(), e, std::move(colors));
}

// Vertices of `b` are shifted by a.n(); colors of `b` are shifted past the
// colors of `a` so the parts stay in distinct classes.
inline ColoredGraph disjoint_union(const ColoredGraph& a,
                                   const ColoredGraph& b) {
  Edges e;
  std::vector<int> colors;
  for (auto [u, v] : a.edges()) e.emplace_back(u, v);
  for (int v = 0; v < a.n(); ++v) colors.push_back(a.color(v));
  for (auto [u, v] : b.edges()) e.emplace_back(a.n() + u, a.n() + v);
  for (int v = 0; v < b.n(); ++v)
    colors.push_back(a.num_colors() + b.color(v));
  return symprep::build_graph(a.n() + b.n(), e, colors);
}

inline ColoredGraph gnp(int n, double p, std::uint64_t seed,
                        int num_colors = 1) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution flip(p);
  Edges e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (flip(rng)) e.emplace_back(i, j);
  std::vector<int> colors(n, 0);
  if (num_colors > 1) {
    std::uniform_int_distribution<int> pick(0, num_colors - 1);
    for (int v = 0; v < n; ++v) colors[v] = pick(rng);
  }
  return symprep::build_graph(n, e, colors);
}

inline ColoredGraph random_tree(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Edges e;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    e.emplace_back(pick(rng), v);
  }
  return symprep::build_graph(n, e);
}

// Configuration-model 3-regular graph; resamples until the pairing is
// simple.  Requires even n.
inline ColoredGraph random_cubic(int n, std::uint64_t seed) {
  if (n % 2 != 0) throw std::invalid_argument("random_cubic: n must be even");
  std::mt19937_64 rng(seed);
  std::vector<int> points(3 * n);
  std::iota(points.begin(), points.end(), 0);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::shuffle(points.begin(), points.end(), rng);
    std::set<std::pair<int, int>> seen;
    bool simple = true;
    for (size_t i = 0; i < points.size() && simple; i += 2) {
      int u = points[i] / 3, v = points[i + 1] / 3;
      if (u == v) simple = false;
      else simple = seen.insert(std::minmax(u, v)).second;
    }
    if (!simple) continue;
    Edges e(seen.begin(), seen.end());
    return symprep::build_graph(n, e);
  }
  throw std::runtime_error("random_cubic: no simple pairing found");
}

// Grows a two-terminal series-parallel graph by repeatedly replacing a
// random edge with either a two-edge series chain or a parallel length-2
// detour, until `n` vertices exist.  Stays simple and degree-2-heavy.
inline ColoredGraph series_parallel(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Edges e{{0, 1}};
  int next = 2;
  while (next < n) {
    std::uniform_int_distribution<size_t> pick(0, e.size() - 1);
    size_t idx = pick(rng);
    auto [u, v] = e[idx];
    int w = next++;
    if (rng() % 2 == 0) {
      e[idx] = {u, w};
      e.emplace_back(w, v);
    } else {
      e.emplace_back(u, w);
      e.emplace_back(w, v);
    }
  }
  return symprep::build_graph(n, e);
}

inline std::vector<int> random_perm(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace fixtures

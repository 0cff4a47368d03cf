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

#pragma once

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "symprep/coloring.hpp"
#include "symprep/graph.hpp"
#include "symprep/refinement.hpp"

namespace symprep {

// The graph induced on the cells of an equitable coloring.  Nodes are cells
// (keyed by invariant cell id, carrying the cell size); the directed weight
// w(C -> D) is the number of D-neighbours each vertex of C has.  Because the
// coloring is equitable this count is the same for every member of C, so a
// single representative per cell suffices to build the whole thing.
struct QuotientGraph {
  // (id, size), ascending by id.
  std::vector<std::pair<long long, int>> nodes;
  // (id_from, id_to, weight), ascending lexicographically; zero weights
  // are not stored.  Self-weights (internal cell degree) appear as loops.
  std::vector<std::tuple<long long, long long, int>> edges;

  friend bool operator==(const QuotientGraph& a, const QuotientGraph& b) {
    return a.nodes == b.nodes && a.edges == b.edges;
  }
};

inline QuotientGraph build_quotient(const ColoredGraph& g, const Coloring& pi) {
  if (!is_equitable(g, pi))
    throw std::invalid_argument("build_quotient: coloring is not equitable");
  QuotientGraph q;
  auto cells = pi.cells_by_id();
  q.nodes.reserve(cells.size());
  for (auto [id, start] : cells)
    q.nodes.emplace_back(id, pi.cell_size(start));
  std::vector<std::pair<long long, int>> counts;
  for (auto [id, start] : cells) {
    int rep = pi.vertex_at(start);
    counts.clear();
    for (int w : g.neighbors(rep)) counts.emplace_back(pi.id_of_vertex(w), 1);
    std::sort(counts.begin(), counts.end());
    for (size_t i = 0; i < counts.size();) {
      size_t j = i;
      while (j < counts.size() && counts[j].first == counts[i].first) ++j;
      q.edges.emplace_back(id, counts[i].first, static_cast<int>(j - i));
      i = j;
    }
  }
  return q;
}

// Two quotients are equal when they have the same labelled node set and the
// same weighted edge set.  Both vectors are kept sorted, so this is a plain
// comparison; e.g. a 6-cycle and two disjoint triangles (uniformly colored)
// both quotient to a single node of size 6 with a self-weight of 2.
inline bool quotient_equal(const QuotientGraph& a, const QuotientGraph& b) {
  return a == b;
}

// Replaces the edges between the cells starting at c1 and c2 by their
// bipartite complement.  Only allowed when that makes the graph strictly
// sparser: |C1||C2| - m12 < m12, where m12 counts the current edges between
// the two cells.  The coloring is untouched (and stays equitable: every
// member of C1 ends up with |C2| - w old-weight neighbours in C2 and vice
// versa).
inline ColoredGraph flip_edges(const ColoredGraph& g, const Coloring& pi,
                               int c1, int c2) {
  if (c1 == c2)
    throw std::invalid_argument("flip_edges: cells must be distinct");
  auto m1 = pi.cell_members(c1);
  auto m2 = pi.cell_members(c2);
  std::vector<char> in_c2(g.n(), 0);
  for (int v : m2) in_c2[v] = 1;
  long long m12 = 0;
  for (int v : m1)
    for (int w : g.neighbors(v)) m12 += in_c2[w];
  long long full = static_cast<long long>(m1.size()) * m2.size();
  if (full - m12 >= m12)
    throw std::invalid_argument("flip_edges: flip would not reduce edges");

  std::vector<char> in_c1(g.n(), 0);
  for (int v : m1) in_c1[v] = 1;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.m() + (full - 2 * m12));
  for (auto [u, v] : g.edges())
    if (!((in_c1[u] && in_c2[v]) || (in_c2[u] && in_c1[v])))
      edges.emplace_back(u, v);
  std::vector<char> adj_mark(g.n(), 0);
  for (int v : m1) {
    for (int w : g.neighbors(v)) adj_mark[w] = in_c2[w];
    for (int w : m2)
      if (!adj_mark[w]) edges.emplace_back(std::min(v, w), std::max(v, w));
    for (int w : g.neighbors(v)) adj_mark[w] = 0;
  }
  return build_graph(g.n(), edges, g.colors());
}

// Scans all cell pairs of an equitable coloring and flips every pair whose
// edge count exceeds half of the full bipartite count (this also wipes out
// fully-connected pairs, where the complement is empty).  All qualifying
// pairs are rewritten in one graph rebuild.  Returns the number of pairs
// flipped; repeat-until-none is the caller's loop, though a single pass
// already leaves no qualifying pair behind.
inline int flip_dense_pairs(const ColoredGraph& g, const Coloring& pi,
                            ColoredGraph* out) {
  auto cells = pi.cells_by_id();
  // Directed weights via one representative per cell.
  std::vector<int> cell_index(g.n(), -1);
  for (size_t i = 0; i < cells.size(); ++i)
    for (int v : pi.cell_members(cells[i].second))
      cell_index[v] = static_cast<int>(i);
  // pair (i, j) with i < j -> flip?
  std::vector<std::pair<int, int>> flip_pairs;
  std::vector<long long> weight(cells.size(), 0);
  for (size_t i = 0; i < cells.size(); ++i) {
    int rep = pi.vertex_at(cells[i].second);
    std::vector<int> touched;
    for (int w : g.neighbors(rep)) {
      int j = cell_index[w];
      if (weight[j] == 0) touched.push_back(j);
      ++weight[j];
    }
    long long size_i = pi.cell_size(cells[i].second);
    for (int j : touched) {
      if (j > static_cast<int>(i)) {
        long long size_j = pi.cell_size(cells[j].second);
        long long m12 = weight[j] * size_i;
        if (size_i * size_j - m12 < m12)
          flip_pairs.emplace_back(static_cast<int>(i), j);
      }
      weight[j] = 0;
    }
  }
  if (flip_pairs.empty()) return 0;

  std::vector<char> flip_flag;
  auto pair_key = [&](int a, int b) {
    return static_cast<size_t>(std::min(a, b)) * cells.size() +
           std::max(a, b);
  };
  flip_flag.assign(cells.size() * cells.size(), 0);
  for (auto [i, j] : flip_pairs) flip_flag[pair_key(i, j)] = 1;

  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    int cu = cell_index[u], cv = cell_index[v];
    if (cu == cv || !flip_flag[pair_key(cu, cv)]) edges.emplace_back(u, v);
  }
  std::vector<char> adj_mark(g.n(), 0);
  for (auto [i, j] : flip_pairs) {
    auto mi = pi.cell_members(cells[i].second);
    auto mj = pi.cell_members(cells[j].second);
    for (int v : mi) {
      for (int w : g.neighbors(v)) adj_mark[w] = cell_index[w] == j;
      for (int w : mj)
        if (!adj_mark[w]) edges.emplace_back(std::min(v, w), std::max(v, w));
      for (int w : g.neighbors(v)) adj_mark[w] = 0;
    }
  }
  *out = build_graph(g.n(), edges, g.colors());
  return static_cast<int>(flip_pairs.size());
}

// Connected components where each vertex is additionally tied to its whole
// cell: the frontier of the search adds both the graph neighbours and the
// cell members of every visited vertex.  This matches the components of the
// quotient graph without building it.  Components are numbered in the order
// their minimum-id cell is discovered (cells scanned in ascending id order),
// so the numbering is invariant under relabelling.
struct CellComponents {
  std::vector<int> comp_of;  // per vertex
  int count = 0;
};

inline CellComponents cell_components(const ColoredGraph& g,
                                      const Coloring& pi) {
  CellComponents cc;
  cc.comp_of.assign(g.n(), -1);
  int assigned = 0;
  std::vector<int> queue;
  for (auto [id, start] : pi.cells_by_id()) {
    if (assigned == g.n()) break;
    int seed = pi.vertex_at(start);
    if (cc.comp_of[seed] >= 0) continue;
    int comp = cc.count++;
    queue.clear();
    queue.push_back(seed);
    cc.comp_of[seed] = comp;
    ++assigned;
    for (size_t h = 0; h < queue.size() && assigned < g.n(); ++h) {
      int v = queue[h];
      for (int w : g.neighbors(v)) {
        if (cc.comp_of[w] < 0) {
          cc.comp_of[w] = comp;
          ++assigned;
          queue.push_back(w);
        }
      }
      for (int w : pi.cell_members(pi.cell_of(v))) {
        if (cc.comp_of[w] < 0) {
          cc.comp_of[w] = comp;
          ++assigned;
          queue.push_back(w);
        }
      }
    }
  }
  return cc;
}

}  // namespace symprep


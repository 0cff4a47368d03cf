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
#include <map>
#include <stdexcept>
#include <vector>

#include "symprep/coloring.hpp"
#include "symprep/graph.hpp"
#include "symprep/perm.hpp"
#include "symprep/repmap.hpp"

namespace symprep {
namespace detail {

// Weighted neighbour cells of the cell at `start`, computed from a single
// representative (valid on equitable colorings): (neighbour cell start,
// weight), ascending by neighbour cell id.
inline std::vector<std::pair<int, int>> cell_profile(const ColoredGraph& g,
                                                     const Coloring& pi,
                                                     int start) {
  int rep = pi.vertex_at(start);
  std::vector<std::pair<long long, int>> by_id;
  for (int w : g.neighbors(rep))
    by_id.emplace_back(pi.id_of_vertex(w), pi.cell_of(w));
  std::sort(by_id.begin(), by_id.end());
  std::vector<std::pair<int, int>> prof;
  for (size_t i = 0; i < by_id.size();) {
    size_t j = i;
    while (j < by_id.size() && by_id[j].first == by_id[i].first) ++j;
    prof.emplace_back(by_id[i].second, static_cast<int>(j - i));
    i = j;
  }
  return prof;
}

inline int unique_neighbor_in(const ColoredGraph& g, const Coloring& pi,
                              int v, int cell_start) {
  int found = -1;
  for (int w : g.neighbors(v)) {
    if (pi.cell_of(w) == cell_start) {
      if (found >= 0)
        throw std::logic_error("reduction: expected a unique neighbour");
      found = w;
    }
  }
  if (found < 0)
    throw std::logic_error("reduction: expected neighbour is missing");
  return found;
}

inline std::vector<int> sorted_members(const Coloring& pi, int start) {
  auto span = pi.cell_members(start);
  std::vector<int> m(span.begin(), span.end());
  std::sort(m.begin(), m.end());
  return m;
}

// Removes the vertices marked in `removed`, rebuilds the graph with
// `extra_edges` added (given in pre-step ids, both endpoints kept), renames
// the coloring so cells keep their relative invariant-id order, and absorbs
// the step into the chain.  Cells must be removed whole.
inline void apply_step(ColoredGraph& g, Coloring& pi, RepChain& chain,
                       StepMap step, const std::vector<char>& removed,
                       const std::vector<std::pair<int, int>>& extra_edges) {
  int n = g.n();
  step.n_before = n;
  VertexRenaming ren;
  ren.old_to_new.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    if (!removed[v]) {
      ren.old_to_new[v] = static_cast<int>(ren.new_to_old.size());
      ren.new_to_old.push_back(v);
    }
  }
  int n2 = static_cast<int>(ren.new_to_old.size());

  std::vector<int> new_colors(n2, -1);
  int next_color = 0;
  for (auto [id, start] : pi.cells_by_id()) {
    auto mem = pi.cell_members(start);
    bool keep = !removed[mem.front()];
    for (int v : mem)
      if (removed[v] == keep)
        throw std::logic_error("apply_step: cell removed only partially");
    if (!keep) continue;
    for (int v : mem) new_colors[ren.old_to_new[v]] = next_color;
    ++next_color;
  }

  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (!removed[u] && !removed[v])
      edges.emplace_back(ren.old_to_new[u], ren.old_to_new[v]);
  for (auto [u, v] : extra_edges)
    edges.emplace_back(ren.old_to_new[u], ren.old_to_new[v]);

  step.renaming = ren;
  chain.absorb(step);
  g = build_graph(n2, edges, new_colors);
  pi = Coloring::from_colors(n2, new_colors);
}

}  // namespace detail

// Strips every singleton cell.  A vertex alone in its cell is fixed by all
// automorphisms of (G, pi), and since the coloring is equitable its
// neighbour counts are uniform per cell, so dropping it (together with its
// representation string) changes no symmetry.
inline int remove_singletons(ColoredGraph& g, Coloring& pi, RepChain& chain) {
  StepMap step;
  std::vector<char> removed(g.n(), 0);
  for (auto [id, start] : pi.cells_by_id()) {
    if (pi.cell_size(start) == 1) {
      int v = pi.vertex_at(start);
      removed[v] = 1;
      step.dropped.push_back(v);
    }
  }
  if (step.dropped.empty()) return 0;
  std::sort(step.dropped.begin(), step.dropped.end());
  int count = static_cast<int>(step.dropped.size());
  detail::apply_step(g, pi, chain, std::move(step), removed, {});
  return count;
}

// Removes all cells of isolated vertices.  The kernel of the removal is the
// full symmetric group on each cell, emitted as adjacent transpositions of
// the members in ascending id order, lifted to original ids on the spot.
inline int remove_degree0(ColoredGraph& g, Coloring& pi, RepChain& chain,
                          std::vector<SparseAutomorphism>& gens,
                          long long* ops = nullptr) {
  StepMap step;
  std::vector<char> removed(g.n(), 0);
  std::vector<SparseAutomorphism> local;
  for (auto [id, start] : pi.cells_by_id()) {
    if (g.degree(pi.vertex_at(start)) != 0) continue;
    auto mem = detail::sorted_members(pi, start);
    for (int v : mem) {
      removed[v] = 1;
      step.dropped.push_back(v);
    }
    for (size_t i = 0; i + 1 < mem.size(); ++i)
      local.push_back(SparseAutomorphism::from_pairs(
          {{mem[i], mem[i + 1]}, {mem[i + 1], mem[i]}}));
  }
  if (step.dropped.empty()) return 0;
  std::sort(step.dropped.begin(), step.dropped.end());
  int count = static_cast<int>(step.dropped.size());
  for (auto& ph : local) gens.push_back(chain.lift(ph, ops));
  detail::apply_step(g, pi, chain, std::move(step), removed, {});
  return count;
}

// Removes cells whose members are adjacent to every vertex outside the cell
// and internally form either an independent set or a clique.  Such a cell
// contributes a full symmetric factor and its removal subtracts a uniform
// count from every other vertex's degree.  One cell per pass, since each
// removal changes the degrees seen by the next scan.
inline int remove_universal(ColoredGraph& g, Coloring& pi, RepChain& chain,
                            std::vector<SparseAutomorphism>& gens,
                            long long* ops = nullptr) {
  int total = 0;
  for (;;) {
    int hit = -1;
    for (auto [id, start] : pi.cells_by_id()) {
      int rep = pi.vertex_at(start);
      int d = g.degree(rep);
      if (d == 0) continue;
      int size = pi.cell_size(start);
      int d_in = 0;
      for (int w : g.neighbors(rep)) d_in += pi.cell_of(w) == start;
      int d_out = d - d_in;
      if (d_out == g.n() - size && (d_in == 0 || d_in == size - 1)) {
        hit = start;
        break;
      }
    }
    if (hit < 0) break;
    StepMap step;
    std::vector<char> removed(g.n(), 0);
    auto mem = detail::sorted_members(pi, hit);
    for (int v : mem) {
      removed[v] = 1;
      step.dropped.push_back(v);
    }
    for (size_t i = 0; i + 1 < mem.size(); ++i)
      gens.push_back(chain.lift(
          SparseAutomorphism::from_pairs(
              {{mem[i], mem[i + 1]}, {mem[i + 1], mem[i]}}),
          ops));
    total += static_cast<int>(mem.size());
    detail::apply_step(g, pi, chain, std::move(step), removed, {});
  }
  return total;
}

// Folds cells of pendant vertices into their attachment points.  Each pass
// removes the first (lowest-id) degree-1 cell: the members attached to the
// same vertex p are appended to p's representation string in ascending id
// order, and swapping two of them is an automorphism, so every attachment
// group of size >= 2 yields adjacent transpositions.  A cell matched to
// itself (disjoint K2 components) has no anchor to represent it; its
// members are dropped and the kernel is the full wreath-product symmetry:
// a swap per edge plus double transpositions exchanging adjacent edges.
inline int remove_degree1(ColoredGraph& g, Coloring& pi, RepChain& chain,
                          std::vector<SparseAutomorphism>& gens,
                          long long* ops = nullptr) {
  int total = 0;
  for (;;) {
    int hit = -1;
    for (auto [id, start] : pi.cells_by_id()) {
      if (g.degree(pi.vertex_at(start)) == 1) {
        hit = start;
        break;
      }
    }
    if (hit < 0) break;
    StepMap step;
    std::vector<char> removed(g.n(), 0);
    std::vector<SparseAutomorphism> local;
    auto mem = detail::sorted_members(pi, hit);
    for (int v : mem) removed[v] = 1;
    int attach = g.neighbors(mem.front()).front();
    if (pi.cell_of(attach) == hit) {
      // Perfect matching inside the cell.
      if (mem.size() % 2 != 0)
        throw std::logic_error("degree-1 cell with odd internal matching");
      step.dropped = mem;
      std::vector<std::pair<int, int>> edges;
      for (int u : mem) {
        int v = g.neighbors(u).front();
        if (u < v) edges.emplace_back(u, v);
      }
      for (auto [u, v] : edges)
        local.push_back(SparseAutomorphism::from_pairs({{u, v}, {v, u}}));
      for (size_t i = 0; i + 1 < edges.size(); ++i) {
        auto [u1, v1] = edges[i];
        auto [u2, v2] = edges[i + 1];
        local.push_back(SparseAutomorphism::from_pairs(
            {{u1, u2}, {u2, u1}, {v1, v2}, {v2, v1}}));
      }
    } else {
      std::map<int, std::vector<int>> buckets;
      for (int v : mem) buckets[g.neighbors(v).front()].push_back(v);
      size_t width = buckets.begin()->second.size();
      for (auto& [p, leaves] : buckets) {
        if (leaves.size() != width)
          throw std::logic_error("degree-1 attachment groups of unequal size");
        step.strings.emplace_back(p, leaves);
        for (size_t i = 0; i + 1 < leaves.size(); ++i)
          local.push_back(SparseAutomorphism::from_pairs(
              {{leaves[i], leaves[i + 1]}, {leaves[i + 1], leaves[i]}}));
      }
    }
    for (auto& ph : local) gens.push_back(chain.lift(ph, ops));
    total += static_cast<int>(mem.size());
    detail::apply_step(g, pi, chain, std::move(step), removed, {});
  }
  return total;
}

// Middle layers between two cells X and Y (|X| = |Y| = |C|, one neighbour
// on each side per middle vertex, no direct X-Y edges) encode bijections
// X -> Y.  All layers encoding the same bijection as the lowest-id one are
// removed together and replaced by the direct edges of that bijection; the
// removed vertices are appended to the X-side strings in layer-id order.
// Layers encoding a different bijection stay.
inline int reduce_obfuscated_matchings(ColoredGraph& g, Coloring& pi,
                                       RepChain& chain) {
  int total = 0;
  for (;;) {
    std::map<std::pair<long long, long long>, std::vector<int>> groups;
    for (auto [id, start] : pi.cells_by_id()) {
      auto prof = detail::cell_profile(g, pi, start);
      if (prof.size() != 2) continue;
      auto [a, wa] = prof[0];
      auto [b, wb] = prof[1];
      if (wa != 1 || wb != 1 || a == start || b == start) continue;
      int size = pi.cell_size(start);
      if (pi.cell_size(a) != size || pi.cell_size(b) != size) continue;
      groups[{pi.cell_id(a), pi.cell_id(b)}].push_back(start);
    }
    bool fired = false;
    for (auto& [key, layers] : groups) {
      int x_cell = pi.find_cell_by_id(key.first);
      int y_cell = pi.find_cell_by_id(key.second);
      bool direct = false;
      for (auto [nb, w] : detail::cell_profile(g, pi, x_cell))
        direct |= nb == y_cell;
      if (direct) continue;

      auto xs = detail::sorted_members(pi, x_cell);
      std::vector<std::vector<int>> match(layers.size());
      for (size_t l = 0; l < layers.size(); ++l) {
        match[l].resize(xs.size());
        for (size_t i = 0; i < xs.size(); ++i) {
          int c = detail::unique_neighbor_in(g, pi, xs[i], layers[l]);
          match[l][i] = detail::unique_neighbor_in(g, pi, c, y_cell);
        }
      }
      std::vector<int> coincide;
      for (size_t l = 0; l < layers.size(); ++l)
        if (match[l] == match[0]) coincide.push_back(layers[l]);

      StepMap step;
      std::vector<char> removed(g.n(), 0);
      std::vector<std::pair<int, int>> extra;
      for (size_t i = 0; i < xs.size(); ++i) {
        std::vector<int> tail;
        for (int layer : coincide) {
          int c = detail::unique_neighbor_in(g, pi, xs[i], layer);
          tail.push_back(c);
          removed[c] = 1;
        }
        step.strings.emplace_back(xs[i], std::move(tail));
        extra.emplace_back(xs[i], match[0][i]);
      }
      total += static_cast<int>(coincide.size() * xs.size());
      detail::apply_step(g, pi, chain, std::move(step), removed, extra);
      fired = true;
      break;
    }
    if (!fired) break;
  }
  return total;
}

namespace detail {

struct ChainWalk {
  bool ok = false;
  std::vector<int> cells;  // internal cell starts, from the X side
  int terminal = -1;       // the first non-internal cell reached
};

// Follows cells of degree-2 vertices with exactly one neighbour on each
// side, starting from (x_cell, first).  Stops at the first cell that is not
// internal; fails if the chain curls back into itself.
inline ChainWalk walk_internal_chain(const ColoredGraph& g, const Coloring& pi,
                                     int x_cell, int first) {
  ChainWalk walk;
  std::vector<char> visited(g.n(), 0);
  visited[x_cell] = 1;
  int prev = x_cell, cur = first;
  for (;;) {
    visited[cur] = 1;
    auto prof = cell_profile(g, pi, cur);
    bool internal = prof.size() == 2 && prof[0].second == 1 &&
                    prof[1].second == 1 && prof[0].first != cur &&
                    prof[1].first != cur &&
                    (prof[0].first == prev || prof[1].first == prev);
    if (!internal) {
      walk.ok = true;
      walk.terminal = cur;
      return walk;
    }
    walk.cells.push_back(cur);
    int next = prof[0].first == prev ? prof[1].first : prof[0].first;
    if (visited[next]) return walk;  // curled back; not a valid pattern
    prev = cur;
    cur = next;
  }
}

}  // namespace detail

// A chain of cells C1..Ct where every x in X has a unique neighbour in C1,
// internal vertices have degree 2, the far endpoint cell Y is reached by
// all chains, and X and Y are not directly adjacent.  Each x then owns one
// path; the chain is deleted, x's path interior joins its string, and the
// direct edge (x, y) is inserted.  The kernel is trivial: no generators.
inline int reduce_unique_endpoint_paths(ColoredGraph& g, Coloring& pi,
                                        RepChain& chain, int t_cap = 0) {
  int total = 0;
  for (;;) {
    bool fired = false;
    for (auto [id, start] : pi.cells_by_id()) {
      auto prof = detail::cell_profile(g, pi, start);
      // A cell that is itself chain-interior material (degree-2 vertices
      // with one neighbor on each of two sides) cannot own paths: it
      // belongs to the interior of whatever longer pattern contains it.
      if (prof.size() == 2 && prof[0].second == 1 && prof[1].second == 1 &&
          prof[0].first != start && prof[1].first != start)
        continue;
      for (auto [c1, w] : prof) {
        if (w != 1 || c1 == start) continue;
        auto walk = detail::walk_internal_chain(g, pi, start, c1);
        if (!walk.ok || walk.cells.empty()) continue;
        if (t_cap > 0 && static_cast<int>(walk.cells.size()) > t_cap) continue;
        int y_cell = walk.terminal;
        bool direct = false;
        for (auto [nb, nw] : prof) direct |= nb == y_cell;
        if (direct) continue;

        StepMap step;
        std::vector<char> removed(g.n(), 0);
        std::vector<std::pair<int, int>> extra;
        for (int x : detail::sorted_members(pi, start)) {
          std::vector<int> tail;
          int cur = x;
          for (int cell : walk.cells) {
            cur = detail::unique_neighbor_in(g, pi, cur, cell);
            tail.push_back(cur);
            removed[cur] = 1;
          }
          int y = detail::unique_neighbor_in(g, pi, cur, y_cell);
          extra.emplace_back(x, y);
          step.strings.emplace_back(x, std::move(tail));
        }
        for (int cell : walk.cells)
          total += pi.cell_size(cell);
        detail::apply_step(g, pi, chain, std::move(step), removed, extra);
        fired = true;
        break;
      }
      if (fired) break;
    }
    if (!fired) break;
  }
  return total;
}

// A bundle of |X||Y| disjoint chains hitting every (x, y) pair exactly once
// carries no symmetry information at all: it is the path-encoded form of a
// complete bipartite connection, whose flip is empty.  The chains are
// deleted outright and no edges are inserted; each path is kept as a flip
// record so lifting can route the interior vertices through the image
// pair's record.
inline int reduce_obfuscated_edge_flip(ColoredGraph& g, Coloring& pi,
                                       RepChain& chain, int t_cap = 0) {
  int total = 0;
  for (;;) {
    bool fired = false;
    for (auto [id, start] : pi.cells_by_id()) {
      auto prof = detail::cell_profile(g, pi, start);
      for (auto [c1, k] : prof) {
        if (k < 2 || c1 == start) continue;
        auto walk = detail::walk_internal_chain(g, pi, start, c1);
        if (!walk.ok || walk.cells.empty() || walk.cells.front() != c1)
          continue;
        if (t_cap > 0 && static_cast<int>(walk.cells.size()) > t_cap) continue;
        int y_cell = walk.terminal;
        auto ys = detail::sorted_members(pi, y_cell);
        if (static_cast<int>(ys.size()) != k) continue;

        auto xs = detail::sorted_members(pi, start);
        std::vector<int> x_index(g.n(), -1), y_index(g.n(), -1);
        for (size_t i = 0; i < xs.size(); ++i) x_index[xs[i]] = (int)i;
        for (size_t i = 0; i < ys.size(); ++i) y_index[ys[i]] = (int)i;
        std::vector<char> seen(xs.size() * ys.size(), 0);
        StepMap step;
        bool complete = true;
        for (int c : detail::sorted_members(pi, c1)) {
          int x = detail::unique_neighbor_in(g, pi, c, start);
          std::vector<int> path{c};
          int cur = c;
          for (size_t l = 1; l < walk.cells.size(); ++l) {
            cur = detail::unique_neighbor_in(g, pi, cur, walk.cells[l]);
            path.push_back(cur);
          }
          int y = detail::unique_neighbor_in(g, pi, cur, y_cell);
          size_t slot = x_index[x] * ys.size() + y_index[y];
          if (seen[slot]) {
            complete = false;
            break;
          }
          seen[slot] = 1;
          step.flips.push_back({x, y, std::move(path)});
        }
        if (!complete ||
            step.flips.size() != xs.size() * ys.size())
          continue;

        std::vector<char> removed(g.n(), 0);
        for (int cell : walk.cells) {
          for (int v : pi.cell_members(cell)) removed[v] = 1;
          total += pi.cell_size(cell);
        }
        detail::apply_step(g, pi, chain, std::move(step), removed, {});
        fired = true;
        break;
      }
      if (fired) break;
    }
    if (!fired) break;
  }
  return total;
}

// True when some cell consists of vertices of degree 0 or 1 (the scheduler
// keeps iterating only while such cells exist).
inline bool has_low_degree_cell(const ColoredGraph& g, const Coloring& pi) {
  for (int start : pi.cell_starts())
    if (g.degree(pi.vertex_at(start)) <= 1) return true;
  return false;
}

}  // namespace symprep


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
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "symprep/coloring.hpp"
#include "symprep/graph.hpp"
#include "symprep/perm.hpp"
#include "symprep/probing.hpp"
#include "symprep/refinement.hpp"

namespace symprep {

struct oracle_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Every color- and adjacency-preserving permutation, found by plain
// backtracking over vertex images.  Exponential; refuses graphs beyond the
// limit.  Results are full image vectors in lexicographic order and always
// include the identity.
inline std::vector<std::vector<int>> brute_force_aut(const ColoredGraph& g,
                                                     int limit = 10) {
  if (g.n() > limit)
    throw oracle_limit_error("brute_force_aut: graph exceeds " +
                             std::to_string(limit) + " vertices");
  int n = g.n();
  std::vector<std::vector<int>> result;
  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      result.push_back(img);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || g.color(w) != g.color(v) || g.degree(w) != g.degree(v))
        continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        ok = g.has_edge(v, u) == g.has_edge(w, img[u]);
      if (!ok) continue;
      img[v] = w;
      used[w] = 1;
      rec(v + 1);
      used[w] = 0;
      img[v] = -1;
    }
  };
  rec(0);
  return result;
}

// Closure of the generated group by breadth-first multiplication, as sorted
// full image vectors.  Throws when the element count passes `cap`.
inline std::vector<std::vector<int>> group_closure(
    const std::vector<SparseAutomorphism>& gens, int n,
    long long cap = 1000000) {
  std::set<std::vector<int>> seen;
  std::vector<int> id(n);
  for (int v = 0; v < n; ++v) id[v] = v;
  seen.insert(id);
  std::vector<std::vector<int>> queue{id};
  for (size_t h = 0; h < queue.size(); ++h) {
    std::vector<int> cur = queue[h];
    for (const auto& gen : gens) {
      std::vector<int> next(n);
      for (int v = 0; v < n; ++v) next[v] = gen.image(cur[v]);
      if (seen.insert(next).second) {
        if (static_cast<long long>(seen.size()) > cap)
          throw oracle_limit_error("group_closure: element cap exceeded");
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

// Automorphism generators by individualization-refinement backtracking.
// Every leaf is compared (position-wise) against the first leaf reached;
// matches that verify as automorphisms become generators.  On the leftmost
// path, sibling branches already known to be equivalent under the
// generators found inside the node's own subtree are skipped; elsewhere a
// subtree is abandoned as soon as it produces one generator, since the rest
// of it is conjugate to already-explored ground.
inline std::vector<SparseAutomorphism> ir_solve(const ColoredGraph& g,
                                                long long* ops = nullptr) {
  std::vector<SparseAutomorphism> gens;
  if (g.n() == 0) return gens;
  Coloring root = Coloring::from_graph(g);
  refine(g, root, ops);
  std::optional<std::vector<int>> first_leaf;

  std::function<bool(const Coloring&, bool)> rec =
      [&](const Coloring& pi, bool on_first_path) -> bool {
    if (pi.is_discrete()) {
      std::vector<int> leaf(g.n());
      for (int p = 0; p < g.n(); ++p) leaf[p] = pi.vertex_at(p);
      if (!first_leaf) {
        first_leaf = std::move(leaf);
        return false;
      }
      std::vector<std::pair<int, int>> pairs;
      for (int p = 0; p < g.n(); ++p)
        if ((*first_leaf)[p] != leaf[p])
          pairs.emplace_back((*first_leaf)[p], leaf[p]);
      auto phi = SparseAutomorphism::from_pairs(std::move(pairs));
      if (!is_automorphism(g, phi, ops)) return false;
      gens.push_back(std::move(phi));
      return true;
    }
    int cell = select_smallest_nontrivial(pi);
    auto span = pi.cell_members(cell);
    std::vector<int> members(span.begin(), span.end());
    std::sort(members.begin(), members.end());

    if (on_first_path) {
      OrbitPartition local(g.n());
      size_t absorbed = gens.size();
      std::vector<int> explored;
      bool found = false;
      for (int v : members) {
        while (absorbed < gens.size()) {
          for (auto& [a, b] : gens[absorbed].pairs()) local.unite(a, b);
          ++absorbed;
        }
        bool skip = false;
        for (int u : explored) skip = skip || local.same(u, v);
        if (skip) continue;
        explored.push_back(v);
        Coloring child = pi;
        refine(g, child, std::vector<int>{child.individualize(v)}, ops);
        found |= rec(child, on_first_path && !first_leaf.has_value());
      }
      return found;
    }
    for (int v : members) {
      Coloring child = pi;
      refine(g, child, std::vector<int>{child.individualize(v)}, ops);
      if (rec(child, false)) return true;
    }
    return false;
  };
  rec(root, true);
  return gens;
}

}  // namespace symprep


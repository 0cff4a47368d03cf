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

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symprep {

/// Undirected simple graph with a vertex coloring, stored as CSR with sorted
/// adjacency lists.  Colors are dense ids in [0, num_colors).
class ColoredGraph {
 public:
  ColoredGraph() = default;

  int n() const { return n_; }
  long long m() const { return static_cast<long long>(adj_.size()) / 2; }
  int num_colors() const { return num_colors_; }

  int degree(int v) const { return row_[v + 1] - row_[v]; }
  std::span<const int> neighbors(int v) const {
    return std::span<const int>(adj_).subspan(row_[v], row_[v + 1] - row_[v]);
  }
  int color(int v) const { return colors_[v]; }
  const std::vector<int>& colors() const { return colors_; }

  bool has_edge(int u, int v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m()));
    for (int u = 0; u < n_; ++u)
      for (int v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.n_ == b.n_ && a.row_ == b.row_ && a.adj_ == b.adj_ &&
           a.colors_ == b.colors_;
  }

  friend ColoredGraph build_graph(int n,
                                  const std::vector<std::pair<int, int>>& edges,
                                  const std::vector<int>& colors);

 private:
  int n_ = 0;
  int num_colors_ = 0;
  std::vector<int> row_{0};
  std::vector<int> adj_;
  std::vector<int> colors_;
};

/// Builds a ColoredGraph from an edge list.  Colors may be empty (all zero) or
/// one arbitrary integer per vertex; they are compacted to dense ids in order
/// of first appearance.  Rejects out-of-range endpoints, self-loops and
/// duplicate edges.
inline ColoredGraph build_graph(int n,
                                const std::vector<std::pair<int, int>>& edges,
                                const std::vector<int>& colors = {}) {
  if (n < 0) throw std::invalid_argument("build_graph: negative vertex count");
  if (!colors.empty() && static_cast<int>(colors.size()) != n)
    throw std::invalid_argument("build_graph: color vector size mismatch");

  ColoredGraph g;
  g.n_ = n;
  g.colors_.assign(n, 0);
  if (!colors.empty()) {
    // Dense ids preserving first-appearance order of the raw color values.
    std::vector<std::pair<int, int>> seen;  // (raw value, dense id)
    for (int v = 0; v < n; ++v) {
      int raw = colors[v];
      int dense = -1;
      for (auto& [val, id] : seen)
        if (val == raw) { dense = id; break; }
      if (dense < 0) {
        dense = static_cast<int>(seen.size());
        seen.emplace_back(raw, dense);
      }
      g.colors_[v] = dense;
    }
    g.num_colors_ = static_cast<int>(seen.size());
  } else {
    g.num_colors_ = n > 0 ? 1 : 0;
  }

  std::vector<int> deg(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("build_graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("build_graph: self-loop");
    ++deg[u];
    ++deg[v];
  }
  g.row_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) g.row_[v + 1] = g.row_[v] + deg[v];
  g.adj_.resize(g.row_[n]);
  std::vector<int> fill(g.row_.begin(), g.row_.end() - 1);
  for (auto [u, v] : edges) {
    g.adj_[fill[u]++] = v;
    g.adj_[fill[v]++] = u;
  }
  for (int v = 0; v < n; ++v) {
    auto b = g.adj_.begin() + g.row_[v], e = g.adj_.begin() + g.row_[v + 1];
    std::sort(b, e);
    if (std::adjacent_find(b, e) != e)
      throw std::invalid_argument("build_graph: duplicate edge at vertex " +
                                  std::to_string(v));
  }
  return g;
}

/// Mapping between an original vertex set and a renamed contiguous range.
/// old_to_new[v] == -1 for dropped vertices.
struct VertexRenaming {
  std::vector<int> old_to_new;
  std::vector<int> new_to_old;

  static VertexRenaming identity(int n) {
    VertexRenaming r;
    r.old_to_new.resize(n);
    r.new_to_old.resize(n);
    for (int v = 0; v < n; ++v) r.old_to_new[v] = r.new_to_old[v] = v;
    return r;
  }
};

/// Induced subgraph on `keep` (must be sorted, unique, in range), renamed to a
/// contiguous id range preserving relative order.
inline std::pair<ColoredGraph, VertexRenaming> induced_subgraph(
    const ColoredGraph& g, const std::vector<int>& keep) {
  VertexRenaming ren;
  ren.old_to_new.assign(g.n(), -1);
  ren.new_to_old = keep;
  int next = 0;
  for (int v : keep) {
    if (v < 0 || v >= g.n())
      throw std::invalid_argument("induced_subgraph: vertex out of range");
    if (ren.old_to_new[v] != -1)
      throw std::invalid_argument("induced_subgraph: duplicate vertex");
    ren.old_to_new[v] = next++;
  }
  for (size_t i = 1; i < keep.size(); ++i)
    if (keep[i - 1] >= keep[i])
      throw std::invalid_argument("induced_subgraph: keep list not sorted");

  std::vector<std::pair<int, int>> edges;
  std::vector<int> colors(keep.size());
  for (int v : keep) {
    colors[ren.old_to_new[v]] = g.color(v);
    for (int w : g.neighbors(v))
      if (w > v && ren.old_to_new[w] != -1)
        edges.emplace_back(ren.old_to_new[v], ren.old_to_new[w]);
  }
  return {build_graph(static_cast<int>(keep.size()), edges, colors), ren};
}

/// Relabels g by the full permutation perm (image of v is perm[v]).
inline ColoredGraph apply_permutation(const ColoredGraph& g,
                                      const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n())
    throw std::invalid_argument("apply_permutation: size mismatch");
  std::vector<char> hit(g.n(), 0);
  for (int v = 0; v < g.n(); ++v) {
    int w = perm[v];
    if (w < 0 || w >= g.n() || hit[w])
      throw std::invalid_argument("apply_permutation: not a bijection");
    hit[w] = 1;
  }
  std::vector<std::pair<int, int>> edges;
  std::vector<int> colors(g.n());
  for (int v = 0; v < g.n(); ++v) {
    colors[perm[v]] = g.color(v);
    for (int w : g.neighbors(v))
      if (v < w) edges.emplace_back(perm[v], perm[w]);
  }
  return build_graph(g.n(), edges, colors);
}

/// Tests whether the full permutation perm is a color- and edge-preserving
/// automorphism of g.
inline bool is_automorphism(const ColoredGraph& g,
                            const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n()) return false;
  std::vector<char> hit(g.n(), 0);
  for (int v = 0; v < g.n(); ++v) {
    int w = perm[v];
    if (w < 0 || w >= g.n() || hit[w]) return false;
    hit[w] = 1;
    if (g.color(w) != g.color(v)) return false;
  }
  for (int v = 0; v < g.n(); ++v)
    for (int w : g.neighbors(v))
      if (v < w && !g.has_edge(perm[v], perm[w])) return false;
  return true;
}

}  // namespace symprep

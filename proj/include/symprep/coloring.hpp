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
#include <span>
#include <stdexcept>
#include <vector>

#include "symprep/graph.hpp"

namespace symprep {

/// Ordered partition of the vertex set into contiguous cells of a vertex
/// array.  A cell is addressed by its start position; it also carries an
/// invariant id: the start position for cells created by splitting, or a
/// fresh id >= n for individualized singletons.  Fragment ordering on splits
/// is by count signature, which keeps ids isomorphism-invariant.
class Coloring {
 public:
  Coloring() = default;

  /// Unit coloring when colors is empty, otherwise one cell per dense color,
  /// cells ordered by color id.
  static Coloring from_colors(int n, const std::vector<int>& colors) {
    Coloring c;
    c.order_.resize(n);
    c.pos_.resize(n);
    c.cstart_.resize(n);
    c.clen_.assign(n, 0);
    c.cid_.assign(n, 0);
    for (int v = 0; v < n; ++v) c.order_[v] = v;
    if (!colors.empty()) {
      std::stable_sort(c.order_.begin(), c.order_.end(),
                       [&](int a, int b) { return colors[a] < colors[b]; });
    }
    int s = 0;
    c.num_cells_ = 0;
    while (s < n) {
      int e = s + 1;
      while (e < n && !colors.empty() &&
             colors[c.order_[e]] == colors[c.order_[s]])
        ++e;
      if (colors.empty()) e = n;
      c.clen_[s] = e - s;
      c.cid_[s] = s;
      for (int p = s; p < e; ++p) {
        c.pos_[c.order_[p]] = p;
        c.cstart_[c.order_[p]] = s;
      }
      ++c.num_cells_;
      s = e;
    }
    return c;
  }

  static Coloring from_colors(const std::vector<int>& colors) {
    return from_colors(static_cast<int>(colors.size()), colors);
  }

  static Coloring from_graph(const ColoredGraph& g) {
    return from_colors(g.n(), g.colors());
  }

  int n() const { return static_cast<int>(order_.size()); }
  int num_cells() const { return num_cells_; }
  bool is_discrete() const { return num_cells_ == n(); }

  int cell_of(int v) const { return cstart_[v]; }
  int position(int v) const { return pos_[v]; }
  int vertex_at(int p) const { return order_[p]; }
  int cell_size(int start) const { return clen_[start]; }
  long long cell_id(int start) const { return cid_[start]; }
  long long id_of_vertex(int v) const { return cid_[cstart_[v]]; }
  bool is_singleton(int v) const { return clen_[cstart_[v]] == 1; }

  std::span<const int> cell_members(int start) const {
    return std::span<const int>(order_).subspan(start, clen_[start]);
  }

  /// Cell starts in position order.
  std::vector<int> cell_starts() const {
    std::vector<int> out;
    out.reserve(num_cells_);
    for (int s = 0; s < n(); s += clen_[s]) out.push_back(s);
    return out;
  }

  /// (id, start) pairs sorted ascending by invariant id.
  std::vector<std::pair<long long, int>> cells_by_id() const {
    std::vector<std::pair<long long, int>> out;
    out.reserve(num_cells_);
    for (int s = 0; s < n(); s += clen_[s]) out.emplace_back(cid_[s], s);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Resolves an invariant cell id to its start position, -1 when absent.
  int find_cell_by_id(long long id) const {
    if (id < n()) {
      int s = static_cast<int>(id);
      if (s >= 0 && s < n() && cstart_[order_[s]] == s && cid_[s] == id)
        return s;
      return -1;
    }
    for (int s = 0; s < n(); s += clen_[s])
      if (cid_[s] == id) return s;
    return -1;
  }

  /// Moves v into its own cell with a fresh invariant id; returns the new
  /// cell's start.  On an already singleton cell only the id changes.
  int individualize(int v) {
    if (v < 0 || v >= n())
      throw std::invalid_argument("individualize: vertex out of range");
    int s = cstart_[v];
    int L = clen_[s];
    long long fresh = n() + fresh_count_++;
    if (L == 1) {
      cid_[s] = fresh;
      return s;
    }
    int last = s + L - 1;
    int u = order_[last];
    std::swap(order_[pos_[v]], order_[last]);
    pos_[u] = pos_[v];
    pos_[v] = last;
    clen_[s] = L - 1;
    clen_[last] = 1;
    cstart_[v] = last;
    cid_[last] = fresh;
    ++num_cells_;
    return last;
  }

  /// Canonical partition view for comparisons: member-sorted cells, sorted by
  /// first member.
  std::vector<std::vector<int>> partition_sets() const {
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n(); s += clen_[s]) {
      auto mem = cell_members(s);
      std::vector<int> cell(mem.begin(), mem.end());
      std::sort(cell.begin(), cell.end());
      out.push_back(std::move(cell));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Dense per-vertex colors numbering cells in ascending invariant id order.
  std::vector<int> to_dense_colors() const {
    std::vector<int> colors(n());
    int next = 0;
    for (auto& [id, s] : cells_by_id()) {
      for (int v : cell_members(s)) colors[v] = next;
      ++next;
    }
    return colors;
  }

 private:
  friend class Refiner;
  std::vector<int> order_;    // vertices grouped by cell
  std::vector<int> pos_;      // inverse of order_
  std::vector<int> cstart_;   // per vertex: start of its cell
  std::vector<int> clen_;     // per start position: cell length
  std::vector<long long> cid_;  // per start position: invariant id
  int num_cells_ = 0;
  int fresh_count_ = 0;
};

}  // namespace symprep

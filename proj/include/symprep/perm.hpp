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
#include <stdexcept>
#include <vector>

#include "symprep/graph.hpp"

namespace symprep {

/// Permutation stored sparsely as the list of moved points, (source, image)
/// pairs sorted ascending by source.  All accessors run in O(|support|) or
/// O(log |support|); the ambient point count is implicit.
class SparseAutomorphism {
 public:
  SparseAutomorphism() = default;

  /// Builds from moved-point pairs; fixed points (v, v) are dropped.  Rejects
  /// duplicate sources and maps that are not closed bijections on the support.
  static SparseAutomorphism from_pairs(std::vector<std::pair<int, int>> pairs) {
    std::erase_if(pairs, [](const auto& p) { return p.first == p.second; });
    std::sort(pairs.begin(), pairs.end());
    for (size_t i = 1; i < pairs.size(); ++i)
      if (pairs[i - 1].first == pairs[i].first)
        throw std::invalid_argument("sparse perm: duplicate source");
    // Closed + injective: the image multiset must equal the source set.
    std::vector<int> img;
    img.reserve(pairs.size());
    for (auto& p : pairs) img.push_back(p.second);
    std::sort(img.begin(), img.end());
    for (size_t i = 0; i < pairs.size(); ++i)
      if (img[i] != pairs[i].first)
        throw std::invalid_argument("sparse perm: support not closed");
    SparseAutomorphism s;
    s.map_ = std::move(pairs);
    return s;
  }

  static SparseAutomorphism from_full(const std::vector<int>& image) {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < static_cast<int>(image.size()); ++v)
      if (image[v] != v) pairs.emplace_back(v, image[v]);
    return from_pairs(std::move(pairs));
  }

  int image(int v) const {
    auto it = std::lower_bound(
        map_.begin(), map_.end(), v,
        [](const std::pair<int, int>& p, int x) { return p.first < x; });
    return (it != map_.end() && it->first == v) ? it->second : v;
  }

  bool is_identity() const { return map_.empty(); }
  size_t support_size() const { return map_.size(); }
  const std::vector<std::pair<int, int>>& pairs() const { return map_; }

  std::vector<int> support() const {
    std::vector<int> s;
    s.reserve(map_.size());
    for (auto& p : map_) s.push_back(p.first);
    return s;
  }

  std::vector<int> to_full(int n) const {
    std::vector<int> img(n);
    for (int v = 0; v < n; ++v) img[v] = v;
    for (auto& [v, w] : map_) {
      if (v >= n) throw std::invalid_argument("sparse perm: point beyond n");
      img[v] = w;
    }
    return img;
  }

  SparseAutomorphism inverse() const {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(map_.size());
    for (auto& [v, w] : map_) pairs.emplace_back(w, v);
    return from_pairs(std::move(pairs));
  }

  friend bool operator==(const SparseAutomorphism& a,
                         const SparseAutomorphism& b) {
    return a.map_ == b.map_;
  }

 private:
  std::vector<std::pair<int, int>> map_;
};

/// Composition apply-right-first: result(v) = a(b(v)).  Touches only the two
/// supports; `ops`, when given, counts touched entries.
inline SparseAutomorphism compose(const SparseAutomorphism& a,
                                  const SparseAutomorphism& b,
                                  long long* ops = nullptr) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(a.support_size() + b.support_size());
  long long touched = 0;
  for (auto& [v, w] : b.pairs()) {
    pairs.emplace_back(v, a.image(w));
    touched += 2;
  }
  for (auto& [v, w] : a.pairs()) {
    ++touched;
    if (b.image(v) == v) {  // not already covered via b's support
      ++touched;
      pairs.emplace_back(v, w);
    }
  }
  if (ops) *ops += touched;
  return SparseAutomorphism::from_pairs(std::move(pairs));
}

/// Support-local automorphism test: checks colors and edges only around the
/// support, exiting on the first violation.  Requires the support to be
/// closed (guaranteed by construction).  `ops` counts touched adjacency
/// entries.
inline bool is_automorphism(const ColoredGraph& g,
                            const SparseAutomorphism& phi,
                            long long* ops = nullptr) {
  long long touched = 0;
  bool ok = true;
  for (auto& [v, w] : phi.pairs()) {
    ++touched;
    if (v >= g.n() || w >= g.n() || g.color(v) != g.color(w) ||
        g.degree(v) != g.degree(w)) {
      ok = false;
      break;
    }
    for (int u : g.neighbors(v)) {
      touched += 2;
      if (!g.has_edge(w, phi.image(u))) {
        ok = false;
        break;
      }
    }
    if (!ok) break;
  }
  if (ops) *ops += touched;
  return ok;
}

}  // namespace symprep

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
#include <climits>
#include <numeric>
#include <optional>
#include <vector>

#include "symprep/coloring.hpp"
#include "symprep/graph.hpp"
#include "symprep/perm.hpp"
#include "symprep/refinement.hpp"

namespace symprep {

class OrbitPartition {
 public:
  explicit OrbitPartition(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) const {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  bool same(int a, int b) const { return find(a) == find(b); }
  int n() const { return static_cast<int>(parent_.size()); }

 private:
  mutable std::vector<int> parent_;
};

// The partial map sending each vertex that is a singleton in pi1 to the
// vertex occupying the like-id singleton cell of pi2.  Returns the map only
// when it is a genuine automorphism of the graph that respects the cells of
// `base`; otherwise absent.  The identity (possibly empty support) is a
// valid result.
inline std::optional<SparseAutomorphism> singleton_correspondence(
    const ColoredGraph& g, const Coloring& base, const Coloring& pi1,
    const Coloring& pi2, long long* ops = nullptr) {
  std::vector<std::pair<long long, int>> s1, s2;
  for (auto [id, start] : pi1.cells_by_id())
    if (pi1.cell_size(start) == 1) s1.emplace_back(id, pi1.vertex_at(start));
  for (auto [id, start] : pi2.cells_by_id())
    if (pi2.cell_size(start) == 1) s2.emplace_back(id, pi2.vertex_at(start));
  if (ops) *ops += pi1.num_cells() + pi2.num_cells();

  std::vector<std::pair<int, int>> pairs;
  size_t i = 0, j = 0;
  while (i < s1.size() && j < s2.size()) {
    if (s1[i].first < s2[j].first) {
      ++i;
    } else if (s1[i].first > s2[j].first) {
      ++j;
    } else {
      pairs.emplace_back(s1[i].second, s2[j].second);
      ++i;
      ++j;
    }
  }
  std::vector<int> src, dst;
  for (auto [v, w] : pairs) {
    if (base.cell_of(v) != base.cell_of(w)) return std::nullopt;
    src.push_back(v);
    dst.push_back(w);
  }
  std::sort(src.begin(), src.end());
  std::sort(dst.begin(), dst.end());
  if (src != dst) return std::nullopt;
  auto phi = SparseAutomorphism::from_pairs(std::move(pairs));
  if (!is_automorphism(g, phi, ops)) return std::nullopt;
  return phi;
}

struct ProbeOutcome {
  bool success = false;
  Coloring refined;
  std::vector<SparseAutomorphism> gens;
};

// Tries to certify that the cell at `cell_start` of the equitable coloring
// `base` is a single orbit, spending at most `max_len` individualization
// classes.  Two branch colorings are grown from the two lowest-id members;
// whenever their singleton correspondence is an automorphism placing v2 in
// v1's orbit the remaining members are replayed along the recorded class
// list.  On success the caller receives the refinement of base with v1
// individualized plus all accepted automorphisms; on failure everything is
// discarded.  `shared` (optional) carries orbit knowledge across probes:
// members already known to share v1's orbit are skipped, and accepted
// automorphisms are merged back on success.
inline ProbeOutcome bounded_probe_ir(const ColoredGraph& g,
                                     const Coloring& base, int cell_start,
                                     long long max_len,
                                     OrbitPartition* shared = nullptr,
                                     long long* ops = nullptr) {
  std::vector<int> members(base.cell_members(cell_start).begin(),
                           base.cell_members(cell_start).end());
  std::sort(members.begin(), members.end());
  int v1 = members[0], v2 = members[1];
  OrbitPartition local = shared ? *shared : OrbitPartition(base.n());
  std::vector<SparseAutomorphism> accepted;

  auto try_accept = [&](std::optional<SparseAutomorphism>& phi,
                        int target) -> bool {
    if (!phi) return false;
    OrbitPartition trial = local;
    for (auto& [a, b] : phi->pairs()) trial.unite(a, b);
    if (!trial.same(v1, target)) return false;
    local = std::move(trial);
    accepted.push_back(std::move(*phi));
    return true;
  };

  // Branch 1 records its split structure; branch 2 and every replay below
  // are checked against it.  An automorphism of (G, base) mapping v1 to the
  // branch's root would make the runs exact images of each other, so a
  // structural mismatch already proves the probe must fail.
  Coloring pi1 = base;
  std::vector<long long> trace1;
  refine_recording(g, pi1, std::vector<int>{pi1.individualize(v1)}, trace1,
                   ops);
  Coloring pi2 = base;
  if (!refine_matching(g, pi2, std::vector<int>{pi2.individualize(v2)}, trace1,
                       ops))
    return {};
  std::vector<long long> classes{base.cell_id(cell_start)};

  for (;;) {
    auto phi = singleton_correspondence(g, base, pi1, pi2, ops);
    if (try_accept(phi, v2)) break;
    if (static_cast<long long>(classes.size()) >= max_len) return {};
    int c1 = first_nontrivial_by_id(pi1);
    if (c1 < 0) return {};
    long long cid = pi1.cell_id(c1);
    int c2 = pi2.find_cell_by_id(cid);
    if (c2 < 0) return {};
    classes.push_back(cid);
    auto m1 = pi1.cell_members(c1);
    int u1 = *std::min_element(m1.begin(), m1.end());
    refine(g, pi1, std::vector<int>{pi1.individualize(u1)}, ops);
    auto m2 = pi2.cell_members(c2);
    int u2 = *std::min_element(m2.begin(), m2.end());
    refine(g, pi2, std::vector<int>{pi2.individualize(u2)}, ops);
  }

  for (size_t t = 2; t < members.size(); ++t) {
    int w = members[t];
    if (local.same(v1, w)) continue;
    Coloring piw = base;
    if (!refine_matching(g, piw, std::vector<int>{piw.individualize(w)},
                         trace1, ops))
      return {};
    bool replay_ok = true;
    for (size_t k = 1; k < classes.size(); ++k) {
      int cw = piw.find_cell_by_id(classes[k]);
      if (cw < 0) {
        replay_ok = false;
        break;
      }
      auto mw = piw.cell_members(cw);
      int uw = *std::min_element(mw.begin(), mw.end());
      refine(g, piw, std::vector<int>{piw.individualize(uw)}, ops);
    }
    if (!replay_ok) return {};
    auto phi = singleton_correspondence(g, base, pi1, piw, ops);
    if (!try_accept(phi, w)) return {};
  }

  ProbeOutcome out;
  out.success = true;
  out.refined = base;
  refine(g, out.refined, std::vector<int>{out.refined.individualize(v1)}, ops);
  out.gens = std::move(accepted);
  if (shared) *shared = std::move(local);
  return out;
}

struct ProbePass {
  std::vector<SparseAutomorphism> gens;  // over current graph ids
  int attempted = 0;
  int succeeded = 0;
};

namespace detail {

inline bool cell_in_component(const Coloring& pi, int start,
                              const std::vector<int>* comp_of, int comp) {
  return !comp_of || (*comp_of)[pi.vertex_at(start)] == comp;
}

inline void collect(ProbePass& pass, ProbeOutcome&& out, Coloring& pi) {
  ++pass.succeeded;
  pi = std::move(out.refined);
  for (auto& ph : out.gens)
    if (!ph.is_identity()) pass.gens.push_back(std::move(ph));
}

}  // namespace detail

// Walks every non-singleton cell in ascending id order and probes it with a
// budget of one class.  A successful probe replaces the working coloring
// (the probed vertex becomes a singleton) and the same id is rescanned so
// the cell remainder gets probed again; a failure moves past the id.
inline ProbePass probe_1ir_all_classes(const ColoredGraph& g, Coloring& pi,
                                       OrbitPartition& orbits,
                                       const std::vector<int>* comp_of = nullptr,
                                       int comp = 0, long long* ops = nullptr) {
  ProbePass pass;
  long long cursor = LLONG_MIN;
  for (;;) {
    int target = -1;
    long long target_id = 0;
    for (auto [id, start] : pi.cells_by_id()) {
      if (id < cursor || pi.cell_size(start) < 2) continue;
      if (!detail::cell_in_component(pi, start, comp_of, comp)) continue;
      target = start;
      target_id = id;
      break;
    }
    if (target < 0) break;
    ++pass.attempted;
    auto out = bounded_probe_ir(g, pi, target, 1, &orbits, ops);
    if (out.success) {
      detail::collect(pass, std::move(out), pi);
      cursor = target_id;
    } else {
      cursor = target_id + 1;
    }
  }
  return pass;
}

// Repeatedly probes the lowest-id cell of size two with an unbounded class
// budget, stopping at the first failure.
inline ProbePass probe_inf_size2(const ColoredGraph& g, Coloring& pi,
                                 OrbitPartition& orbits,
                                 const std::vector<int>* comp_of = nullptr,
                                 int comp = 0, long long* ops = nullptr) {
  ProbePass pass;
  for (;;) {
    int target = -1;
    for (auto [id, start] : pi.cells_by_id()) {
      if (pi.cell_size(start) != 2) continue;
      if (!detail::cell_in_component(pi, start, comp_of, comp)) continue;
      target = start;
      break;
    }
    if (target < 0) break;
    ++pass.attempted;
    auto out = bounded_probe_ir(g, pi, target, LLONG_MAX, &orbits, ops);
    if (!out.success) break;
    detail::collect(pass, std::move(out), pi);
  }
  return pass;
}

// Probes the smallest cell of size in (2, bound] (ties by id) once, with an
// unbounded class budget.  Size-2 cells are left to probe_inf_size2.
inline ProbePass probe_inf_sizeB(const ColoredGraph& g, Coloring& pi, int bound,
                                 OrbitPartition& orbits,
                                 const std::vector<int>* comp_of = nullptr,
                                 int comp = 0, long long* ops = nullptr) {
  ProbePass pass;
  int target = -1, target_size = 0;
  for (auto [id, start] : pi.cells_by_id()) {
    int size = pi.cell_size(start);
    if (size <= 2 || size > bound) continue;
    if (!detail::cell_in_component(pi, start, comp_of, comp)) continue;
    if (target < 0 || size < target_size) {
      target = start;
      target_size = size;
    }
  }
  if (target < 0) return pass;
  ++pass.attempted;
  auto out = bounded_probe_ir(g, pi, target, LLONG_MAX, &orbits, ops);
  if (out.success) detail::collect(pass, std::move(out), pi);
  return pass;
}

}  // namespace symprep


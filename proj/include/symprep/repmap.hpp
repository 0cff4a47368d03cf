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
#include <tuple>
#include <unordered_map>
#include <vector>

#include "symprep/graph.hpp"
#include "symprep/perm.hpp"

namespace symprep {

// One shrinking step of the pipeline, expressed in the vertex ids of the
// graph the step was applied to.  A removed vertex is accounted for in
// exactly one of three ways: appended to the representation string of a
// kept vertex, dropped outright (its cell was a singleton, so every
// automorphism fixes it anyway), or stored inside a flip record.
struct StepMap {
  int n_before = 0;

  // (kept vertex, removed vertices appended to its string), ascending by
  // kept vertex.  Order within a string is meaningful: automorphism images
  // are matched position by position.
  std::vector<std::pair<int, std::vector<int>>> strings;

  // Removed with no representative.
  std::vector<int> dropped;

  // A removed path between two kept endpoints whose edge was *not*
  // re-inserted: x and y stay non-adjacent and the path vertices are
  // recovered during lifting by routing through the matching record of the
  // image pair.
  struct Flip {
    int x = 0, y = 0;
    std::vector<int> path;  // from x's side to y's side
  };
  std::vector<Flip> flips;

  // Identity when new_to_old is empty (no renumbering took place).
  VertexRenaming renaming;
};

// Accumulated representation map from the current (reduced) vertex ids all
// the way back to the original input ids.  Strings are kept flat: absorbing
// a step splices the strings of newly removed vertices into their new
// representative, so lifting never recurses.
class RepChain {
 public:
  RepChain() = default;

  static RepChain identity(int n) {
    RepChain r;
    r.n0_ = n;
    r.cur2orig_.resize(n);
    r.orig2cur_.resize(n);
    for (int v = 0; v < n; ++v) r.cur2orig_[v] = r.orig2cur_[v] = v;
    r.tail_.assign(n, {});
    return r;
  }

  int original_n() const { return n0_; }
  int current_n() const { return static_cast<int>(cur2orig_.size()); }
  int to_original(int cur) const { return cur2orig_.at(cur); }
  int to_current(int orig) const { return orig2cur_.at(orig); }
  const std::vector<int>& string_tail(int orig) const { return tail_.at(orig); }
  const std::vector<int>& dropped() const { return dropped_; }
  const std::vector<StepMap>& steps() const { return steps_; }

  void absorb(const StepMap& s) {
    if (s.n_before != current_n())
      throw std::logic_error("RepChain::absorb: step size mismatch");
    std::vector<char> removed(s.n_before, 0);

    for (auto& [v, tl] : s.strings) {
      int v0 = cur2orig_[v];
      for (int r : tl) {
        if (removed[r] || removed[v])
          throw std::logic_error("RepChain::absorb: vertex removed twice");
        removed[r] = 1;
        int r0 = cur2orig_[r];
        tail_[v0].push_back(r0);
        tail_[v0].insert(tail_[v0].end(), tail_[r0].begin(), tail_[r0].end());
        tail_[r0].clear();
        tail_[r0].shrink_to_fit();
      }
    }
    for (int u : s.dropped) {
      if (removed[u])
        throw std::logic_error("RepChain::absorb: vertex removed twice");
      removed[u] = 1;
      int u0 = cur2orig_[u];
      dropped_.push_back(u0);
      dropped_.insert(dropped_.end(), tail_[u0].begin(), tail_[u0].end());
      tail_[u0].clear();
      tail_[u0].shrink_to_fit();
    }
    for (auto& f : s.flips) {
      Record rec;
      int x0 = cur2orig_[f.x], y0 = cur2orig_[f.y];
      rec.cols.reserve(f.path.size());
      for (int c : f.path) {
        if (removed[c])
          throw std::logic_error("RepChain::absorb: vertex removed twice");
        removed[c] = 1;
        int c0 = cur2orig_[c];
        std::vector<int> col;
        col.push_back(c0);
        col.insert(col.end(), tail_[c0].begin(), tail_[c0].end());
        tail_[c0].clear();
        tail_[c0].shrink_to_fit();
        rec.cols.push_back(std::move(col));
      }
      rec.a = std::min(x0, y0);
      rec.b = std::max(x0, y0);
      if (x0 > y0) std::reverse(rec.cols.begin(), rec.cols.end());
      rec.seq = seq_next_;
      auto key = std::make_tuple(rec.a, rec.b, rec.seq);
      rec.ord = static_cast<int>(record_index_[key].size());
      record_index_[key].push_back(static_cast<int>(records_.size()));
      records_by_vertex_[rec.a].push_back(static_cast<int>(records_.size()));
      records_by_vertex_[rec.b].push_back(static_cast<int>(records_.size()));
      records_.push_back(std::move(rec));
    }
    ++seq_next_;

    bool any_removed =
        std::find(removed.begin(), removed.end(), 1) != removed.end();
    std::vector<int> new2old;
    if (s.renaming.new_to_old.empty() && !any_removed) {
      new2old.resize(s.n_before);
      for (int v = 0; v < s.n_before; ++v) new2old[v] = v;
    } else {
      new2old = s.renaming.new_to_old;
      std::vector<char> kept(s.n_before, 0);
      for (int old : new2old) kept.at(old) = 1;
      for (int v = 0; v < s.n_before; ++v)
        if (kept[v] == removed[v])
          throw std::logic_error(
              "RepChain::absorb: renaming disagrees with removals");
    }
    std::vector<int> next(new2old.size());
    for (size_t i = 0; i < new2old.size(); ++i) next[i] = cur2orig_[new2old[i]];
    cur2orig_ = std::move(next);
    std::fill(orig2cur_.begin(), orig2cur_.end(), -1);
    for (size_t i = 0; i < cur2orig_.size(); ++i)
      orig2cur_[cur2orig_[i]] = static_cast<int>(i);
    steps_.push_back(s);
  }

  // Lifts an automorphism of the current graph to one of the original graph.
  // Per pair (v -> w): the original ids map, their strings map position by
  // position, and flip-record contents are routed to the records of the
  // image endpoint pairs, processed from the most recent step backwards so
  // endpoints removed by a later step are resolved before the records that
  // mention them.  Work is proportional to the support actually touched;
  // vertices with no entry anywhere are fixed and never visited.
  SparseAutomorphism lift(const SparseAutomorphism& phi,
                          long long* ops = nullptr) const {
    long long touched = 0;
    std::unordered_map<int, int> img;
    std::vector<std::pair<int, int>> out;
    // (seq, record index) max-heap emulated by a sorted set of pending work.
    std::map<std::pair<long long, int>, char> pending;
    std::vector<char> done(records_.size(), 0);

    auto add_moved = [&](int a0, int b0) {
      out.emplace_back(a0, b0);
      img[a0] = b0;
      ++touched;
      auto it = records_by_vertex_.find(a0);
      if (it != records_by_vertex_.end())
        for (int ri : it->second) {
          ++touched;
          if (!done[ri]) pending[{records_[ri].seq, ri}] = 1;
        }
    };

    for (auto& [v, w] : phi.pairs()) {
      if (v < 0 || v >= current_n() || w < 0 || w >= current_n())
        throw std::invalid_argument(
            "RepChain::lift: automorphism moves a vertex outside the "
            "current graph");
      int v0 = cur2orig_[v], w0 = cur2orig_[w];
      const auto& tv = tail_[v0];
      const auto& tw = tail_[w0];
      if (tv.size() != tw.size())
        throw std::logic_error(
            "RepChain::lift: representation strings of unequal length");
      add_moved(v0, w0);
      for (size_t i = 0; i < tv.size(); ++i) add_moved(tv[i], tw[i]);
    }

    auto image_of = [&](int x) {
      ++touched;
      auto it = img.find(x);
      return it == img.end() ? x : it->second;
    };

    while (!pending.empty()) {
      auto it = std::prev(pending.end());
      int ri = it->first.second;
      pending.erase(it);
      if (done[ri]) continue;
      done[ri] = 1;
      const Record& r = records_[ri];
      int ia = image_of(r.a), ib = image_of(r.b);
      if (ia == r.a && ib == r.b) continue;
      auto key = std::make_tuple(std::min(ia, ib), std::max(ia, ib), r.seq);
      auto ki = record_index_.find(key);
      ++touched;
      if (ki == record_index_.end() ||
          static_cast<int>(ki->second.size()) <= r.ord)
        throw std::logic_error("RepChain::lift: no matching flip record");
      const Record& t = records_[ki->second[r.ord]];
      if (t.cols.size() != r.cols.size())
        throw std::logic_error("RepChain::lift: flip records of unequal size");
      bool forward = (ia == t.a);
      for (size_t k = 0; k < r.cols.size(); ++k) {
        const auto& src = r.cols[k];
        const auto& dst = t.cols[forward ? k : r.cols.size() - 1 - k];
        if (src.size() != dst.size())
          throw std::logic_error(
              "RepChain::lift: representation strings of unequal length");
        for (size_t i = 0; i < src.size(); ++i)
          if (src[i] != dst[i]) add_moved(src[i], dst[i]);
      }
    }

    if (ops) *ops += touched;
    return SparseAutomorphism::from_pairs(std::move(out));
  }

 private:
  struct Record {
    int a = 0, b = 0;  // original ids, a < b
    std::vector<std::vector<int>> cols;
    long long seq = 0;
    int ord = 0;  // position among records sharing (a, b, seq)
  };

  int n0_ = 0;
  std::vector<int> cur2orig_, orig2cur_;
  std::vector<std::vector<int>> tail_;
  std::vector<int> dropped_;
  std::vector<Record> records_;
  std::map<std::tuple<int, int, long long>, std::vector<int>> record_index_;
  std::unordered_map<int, std::vector<int>> records_by_vertex_;
  std::vector<StepMap> steps_;
  long long seq_next_ = 0;
};

// Folds a list of step maps into a single flat chain.
inline RepChain flatten_chain(int n0, const std::vector<StepMap>& steps) {
  RepChain r = RepChain::identity(n0);
  for (const auto& s : steps) r.absorb(s);
  return r;
}

// Lifts through one step only: from the step's output ids to its input ids.
inline SparseAutomorphism lift_step(const SparseAutomorphism& phi,
                                    const StepMap& s) {
  RepChain one = RepChain::identity(s.n_before);
  one.absorb(s);
  return one.lift(phi);
}

// Step-by-step lifting, newest step first.  Agrees with RepChain::lift on
// the flattened chain.
inline SparseAutomorphism lift_through_steps(const SparseAutomorphism& phi,
                                             const std::vector<StepMap>& steps) {
  SparseAutomorphism cur = phi;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    cur = lift_step(cur, *it);
  return cur;
}

}  // namespace symprep


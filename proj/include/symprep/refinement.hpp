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
#include <set>
#include <vector>

#include "symprep/coloring.hpp"
#include "symprep/graph.hpp"

namespace symprep {

/// Color refinement to the coarsest equitable partition refining the input.
///
/// Worklist discipline: splitting cells are popped smallest first (ties by
/// invariant id); when a queued cell splits all fragments are re-queued, when
/// an unqueued cell splits all fragments but one largest are queued.  Split
/// fragments are ordered by their neighbor count against the splitting cell,
/// ascending, which makes cell ids isomorphism-invariant.
class Refiner {
 public:
  Refiner(const ColoredGraph& g, Coloring& pi, long long* ops = nullptr)
      : g_(g), pi_(pi), ops_(ops),
        count_(g.n(), 0), stamp_(g.n(), 0), cell_slot_(g.n(), -1),
        in_wl_(g.n(), 0) {}

  /// Records the run's split structure: one token per pop naming the
  /// splitter, then per actual split (in ascending parent id order) the
  /// parent id, the fragment count, and each fragment's size and count
  /// signature.  Two runs related by an automorphism of the colored graph
  /// produce identical streams, because cell ids, cell layouts and the
  /// worklist order are all equivariant.
  void record_trace(std::vector<long long>* out) { trace_out_ = out; }

  /// Compares the run against a recorded stream and stops at the first
  /// difference, leaving the coloring partially refined.  A mismatch proves
  /// that no automorphism relates this run to the recorded one.
  void expect_trace(const std::vector<long long>* expected) {
    trace_expect_ = expected;
  }

  bool diverged() const { return diverged_; }

  /// Refines with the given seed cells (cell start positions).
  void run(const std::vector<int>& seeds) {
    for (int s : seeds) wl_push(s);
    long long ops = 0;
    while (!wl_.empty() && !diverged_) {
      // A discrete coloring cannot split further; the queued scans would all
      // be no-ops.
      if (pi_.is_discrete()) break;
      int s = wl_pop();
      auto mem = pi_.cell_members(s);
      splitter_.assign(mem.begin(), mem.end());
      ops += static_cast<long long>(splitter_.size());
      emit(pi_.cid_[s]);
      ++tick_;
      touched_.clear();
      touched_cells_.clear();
      for (int u : splitter_) {
        for (int w : g_.neighbors(u)) {
          ++ops;
          if (stamp_[w] != tick_) {
            stamp_[w] = tick_;
            count_[w] = 0;
            touched_.push_back(w);
            int c = pi_.cell_of(w);
            if (cell_slot_[c] < 0) {
              cell_slot_[c] = static_cast<int>(touched_cells_.size());
              touched_cells_.push_back(c);
            }
          }
          ++count_[w];
        }
      }
      for (int c : touched_cells_) cell_slot_[c] = -1;
      if (trace_out_ || trace_expect_)
        std::sort(touched_cells_.begin(), touched_cells_.end(),
                  [&](int a, int b) { return pi_.cid_[a] < pi_.cid_[b]; });
      for (int c : touched_cells_) {
        ops += split_cell(c);
        if (diverged_) break;
      }
    }
    if (trace_expect_ && !diverged_ && trace_pos_ != trace_expect_->size())
      diverged_ = true;
    if (ops_) *ops_ += ops;
  }

  /// Full refinement: seeds every cell.
  void run_full() { run(pi_.cell_starts()); }

 private:
  void emit(long long token) {
    if (trace_out_) trace_out_->push_back(token);
    if (trace_expect_) {
      if (trace_pos_ >= trace_expect_->size() ||
          (*trace_expect_)[trace_pos_] != token)
        diverged_ = true;
      else
        ++trace_pos_;
    }
  }

  // Splits cell c by count_ (valid for stamp_ == tick_; untouched members
  // count as zero).  Returns the number of vertex moves performed.
  long long split_cell(int c) {
    Coloring& pi = pi_;
    int L = pi.clen_[c];
    tl_.clear();
    int minc = 0, maxc = 0;
    for (int p = c; p < c + L; ++p) {
      int v = pi.order_[p];
      if (stamp_[v] == tick_ && count_[v] > 0) tl_.push_back(v);
    }
    if (tl_.empty()) return 0;
    minc = maxc = count_[tl_.front()];
    for (int v : tl_) {
      minc = std::min(minc, count_[v]);
      maxc = std::max(maxc, count_[v]);
    }
    if (static_cast<int>(tl_.size()) == L && minc == maxc) return 0;

    // Move touched members to the cell tail, then order the tail by count
    // ascending.  The zero-count fragment, if any, stays in place.
    int b = c + L;
    for (int v : tl_) {
      --b;
      int p = pi.pos_[v];
      if (p != b) {
        int u = pi.order_[b];
        std::swap(pi.order_[p], pi.order_[b]);
        pi.pos_[u] = p;
        pi.pos_[v] = b;
      }
    }
    std::stable_sort(pi.order_.begin() + b, pi.order_.begin() + c + L,
                     [&](int x, int y) { return count_[x] < count_[y]; });
    for (int p = b; p < c + L; ++p) pi.pos_[pi.order_[p]] = p;

    // Carve fragments: [c, b) zeros, then runs of equal count.
    frag_starts_.clear();
    frag_starts_.push_back(c);
    if (b > c) frag_starts_.push_back(b);
    for (int p = (b > c ? b : c) + 1; p < c + L; ++p) {
      if (count_[pi.order_[p]] != count_[pi.order_[p - 1]])
        frag_starts_.push_back(p);
    }
    if (frag_starts_.size() == 1) return static_cast<long long>(tl_.size());

    bool was_queued = in_wl_[c] != 0;
    long long old_key_id = pi.cid_[c];
    if (was_queued) wl_erase(c, L, old_key_id);

    int nfrags = static_cast<int>(frag_starts_.size());
    if (trace_out_ || trace_expect_) {
      emit(old_key_id);
      emit(nfrags);
      for (int i = 0; i < nfrags; ++i) {
        int fs = frag_starts_[i];
        int fe = i + 1 < nfrags ? frag_starts_[i + 1] : c + L;
        emit(fe - fs);
        emit(fs < b ? 0 : count_[pi.order_[fs]]);
      }
    }
    int largest = 0, largest_len = -1;
    for (int i = 0; i < nfrags; ++i) {
      int fs = frag_starts_[i];
      int fe = i + 1 < nfrags ? frag_starts_[i + 1] : c + L;
      pi.clen_[fs] = fe - fs;
      if (i > 0) pi.cid_[fs] = fs;
      for (int p = fs; p < fe; ++p) pi.cstart_[pi.order_[p]] = fs;
      if (fe - fs > largest_len) {
        largest_len = fe - fs;
        largest = i;
      }
    }
    pi.num_cells_ += nfrags - 1;
    for (int i = 0; i < nfrags; ++i) {
      if (!was_queued && i == largest) continue;
      wl_push(frag_starts_[i]);
    }
    return static_cast<long long>(tl_.size());
  }

  void wl_push(int s) {
    if (in_wl_[s]) return;
    in_wl_[s] = 1;
    wl_.insert({pi_.clen_[s], pi_.cid_[s], s});
  }
  void wl_erase(int s, int len, long long id) {
    in_wl_[s] = 0;
    wl_.erase({len, id, s});
  }
  int wl_pop() {
    auto it = wl_.begin();
    int s = std::get<2>(*it);
    in_wl_[s] = 0;
    wl_.erase(it);
    return s;
  }

  const ColoredGraph& g_;
  Coloring& pi_;
  long long* ops_;
  std::vector<int> count_, stamp_, cell_slot_;
  std::vector<char> in_wl_;
  std::vector<int> splitter_, touched_, touched_cells_, tl_, frag_starts_;
  std::set<std::tuple<int, long long, int>> wl_;
  int tick_ = 0;
  std::vector<long long>* trace_out_ = nullptr;
  const std::vector<long long>* trace_expect_ = nullptr;
  size_t trace_pos_ = 0;
  bool diverged_ = false;
};

/// Refines pi to the coarsest equitable coloring refining it.
inline void refine(const ColoredGraph& g, Coloring& pi,
                   long long* ops = nullptr) {
  Refiner(g, pi, ops).run_full();
}

/// Incremental refinement seeded with the given cells (typically the fresh
/// singleton produced by individualize).
inline void refine(const ColoredGraph& g, Coloring& pi,
                   const std::vector<int>& seed_starts,
                   long long* ops = nullptr) {
  Refiner(g, pi, ops).run(seed_starts);
}

/// Incremental refinement that records the run's split structure into
/// `trace` (appending).
inline void refine_recording(const ColoredGraph& g, Coloring& pi,
                             const std::vector<int>& seed_starts,
                             std::vector<long long>& trace,
                             long long* ops = nullptr) {
  Refiner r(g, pi, ops);
  r.record_trace(&trace);
  r.run(seed_starts);
}

/// Incremental refinement checked against a recorded split structure.
/// Returns false as soon as the run provably differs from the recorded one;
/// the coloring is then partially refined and must be discarded.
inline bool refine_matching(const ColoredGraph& g, Coloring& pi,
                            const std::vector<int>& seed_starts,
                            const std::vector<long long>& trace,
                            long long* ops = nullptr) {
  Refiner r(g, pi, ops);
  r.expect_trace(&trace);
  r.run(seed_starts);
  return !r.diverged();
}

/// Checks the equitability condition directly: within every cell all vertices
/// have identical per-cell neighbor counts.
// Smallest non-singleton cell, ties by invariant id; -1 when discrete.
inline int select_smallest_nontrivial(const Coloring& pi) {
  int best = -1, best_size = 0;
  for (auto [id, start] : pi.cells_by_id()) {
    int size = pi.cell_size(start);
    if (size >= 2 && (best < 0 || size < best_size)) {
      best = start;
      best_size = size;
    }
  }
  return best;
}

// Non-singleton cell of minimum invariant id; -1 when discrete.
inline int first_nontrivial_by_id(const Coloring& pi) {
  for (auto [id, start] : pi.cells_by_id())
    if (pi.cell_size(start) >= 2) return start;
  return -1;
}

inline bool is_equitable(const ColoredGraph& g, const Coloring& pi) {
  std::vector<std::pair<long long, int>> ref_sig, sig;
  for (int s : pi.cell_starts()) {
    auto mem = pi.cell_members(s);
    for (size_t i = 0; i < mem.size(); ++i) {
      sig.clear();
      for (int w : g.neighbors(mem[i])) sig.emplace_back(pi.cell_of(w), 0);
      std::sort(sig.begin(), sig.end());
      // Collapse to (cell, count).
      std::vector<std::pair<long long, int>> packed;
      for (auto& [cell, zero] : sig) {
        if (!packed.empty() && packed.back().first == cell)
          ++packed.back().second;
        else
          packed.emplace_back(cell, 1);
      }
      if (i == 0)
        ref_sig = std::move(packed);
      else if (packed != ref_sig)
        return false;
    }
  }
  return true;
}

}  // namespace symprep

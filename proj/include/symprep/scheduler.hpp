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

#include <stdexcept>
#include <utility>
#include <vector>

#include "symprep/coloring.hpp"
#include "symprep/graph.hpp"
#include "symprep/perm.hpp"
#include "symprep/probing.hpp"
#include "symprep/quotient.hpp"
#include "symprep/reductions.hpp"
#include "symprep/refinement.hpp"
#include "symprep/repmap.hpp"

namespace symprep {

struct ScheduleConfig {
  bool enable_deg01 = true;       // singleton/degree-0/universal/degree-1
  bool enable_deg2 = true;        // matchings, unique-endpoint paths, flips
  bool enable_probe = true;
  bool enable_flip = true;        // dense cell-pair complementation
  bool enable_components = true;  // probe per component
  int probe_bound = 8;
  double shrink_threshold = 0.25;  // keep looping while an iteration removes
                                   // at least this fraction of its vertices
  int t_cap = 0;                   // path-length cap for chain walks; 0 = off
  unsigned long long seed = 0;     // reserved; the pipeline is deterministic
};

struct PipelineCounters {
  long long removed_singleton = 0;
  long long removed_deg0 = 0;
  long long removed_universal = 0;
  long long removed_deg1 = 0;
  long long removed_match = 0;
  long long removed_path = 0;
  long long removed_flip = 0;
  long long pairs_flipped = 0;
  long long probes_attempted = 0;
  long long probes_succeeded = 0;
  int iterations = 0;
};

struct PreprocessResult {
  ColoredGraph reduced;
  Coloring coloring;  // equitable coloring of the reduced graph
  RepChain chain;
  std::vector<SparseAutomorphism> generators;  // lifted to original ids
  PipelineCounters counters;
  long long ops = 0;
  long long ops_first_refine = 0;
};

// Runs the reduction pipeline to a fixed point.  One iteration applies, in
// order: singleton removal, degree-0/universal/degree-1 folding, the three
// degree-2 pattern reductions, dense pair flips, per-component probing, and
// a final singleton sweep over whatever probing individualized.  Every
// generator produced along the way is an automorphism of the graph at the
// moment of its discovery and is lifted to original ids immediately.
inline PreprocessResult preprocess(const ColoredGraph& input,
                                   const ScheduleConfig& cfg = {}) {
  PreprocessResult res;
  ColoredGraph g = input;
  Coloring pi = Coloring::from_graph(g);
  long long* ops = &res.ops;
  refine(g, pi, ops);
  res.ops_first_refine = res.ops;
  res.chain = RepChain::identity(g.n());
  auto& c = res.counters;

  auto emit = [&](std::vector<SparseAutomorphism>&& batch) {
    for (auto& ph : batch)
      if (!ph.is_identity())
        res.generators.push_back(res.chain.lift(ph, ops));
  };

  for (;;) {
    ++c.iterations;
    int start_n = g.n();
    c.removed_singleton += remove_singletons(g, pi, res.chain);
    if (cfg.enable_deg01) {
      c.removed_deg0 += remove_degree0(g, pi, res.chain, res.generators, ops);
      c.removed_universal +=
          remove_universal(g, pi, res.chain, res.generators, ops);
      c.removed_deg1 += remove_degree1(g, pi, res.chain, res.generators, ops);
    }
    if (cfg.enable_deg2) {
      c.removed_match += reduce_obfuscated_matchings(g, pi, res.chain);
      c.removed_path +=
          reduce_unique_endpoint_paths(g, pi, res.chain, cfg.t_cap);
      c.removed_flip += reduce_obfuscated_edge_flip(g, pi, res.chain, cfg.t_cap);
    }
    if (cfg.enable_flip) {
      for (;;) {
        ColoredGraph flipped;
        int k = flip_dense_pairs(g, pi, &flipped);
        if (k == 0) break;
        g = std::move(flipped);
        c.pairs_flipped += k;
      }
    }
    if (cfg.enable_probe && g.n() > 0) {
      OrbitPartition orbits(g.n());
      CellComponents cc;
      const std::vector<int>* comp_of = nullptr;
      int comp_count = 1;
      if (cfg.enable_components) {
        cc = cell_components(g, pi);
        comp_of = &cc.comp_of;
        comp_count = cc.count;
      }
      for (int comp = 0; comp < comp_count; ++comp) {
        auto p1 = probe_1ir_all_classes(g, pi, orbits, comp_of, comp, ops);
        c.probes_attempted += p1.attempted;
        c.probes_succeeded += p1.succeeded;
        emit(std::move(p1.gens));
        auto p2 = probe_inf_size2(g, pi, orbits, comp_of, comp, ops);
        c.probes_attempted += p2.attempted;
        c.probes_succeeded += p2.succeeded;
        emit(std::move(p2.gens));
        auto p3 =
            probe_inf_sizeB(g, pi, cfg.probe_bound, orbits, comp_of, comp, ops);
        c.probes_attempted += p3.attempted;
        c.probes_succeeded += p3.succeeded;
        emit(std::move(p3.gens));
      }
      c.removed_singleton += remove_singletons(g, pi, res.chain);
    }
    int shrunk = start_n - g.n();
    if (g.n() == 0 || shrunk == 0 || !has_low_degree_cell(g, pi) ||
        shrunk < cfg.shrink_threshold * start_n)
      break;
  }
  res.reduced = std::move(g);
  res.coloring = std::move(pi);
  return res;
}

// Lifts generators computed for the reduced graph (for example by a solver)
// back to the original graph and concatenates them with the kernel
// generators collected during preprocessing.  Each incoming generator must
// actually be an automorphism of the reduced graph.
inline std::vector<SparseAutomorphism> reconstruct_group(
    const PreprocessResult& res,
    const std::vector<SparseAutomorphism>& reduced_gens,
    long long* ops = nullptr) {
  std::vector<SparseAutomorphism> all = res.generators;
  for (const auto& ph : reduced_gens) {
    if (!is_automorphism(res.reduced, ph, ops))
      throw std::invalid_argument(
          "reconstruct_group: not an automorphism of the reduced graph");
    if (!ph.is_identity()) all.push_back(res.chain.lift(ph, ops));
  }
  return all;
}

}  // namespace symprep


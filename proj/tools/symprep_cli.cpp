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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "symprep/symprep.hpp"

namespace {

struct Options {
  std::string in = "-";
  std::string out_graph;
  std::string out_gens;
  std::string stats;
  std::string batch;
  bool solve = false;
  bool oracle = false;
  bool disable_deg01 = false;
  bool disable_deg2 = false;
  bool disable_probe = false;
  bool disable_flip = false;
  bool disable_components = false;
  int probe_bound = 8;
  double shrink = 0.25;
  int t_cap = 0;
  unsigned long long seed = 0;
  int oracle_limit = 10;
};

symprep::ScheduleConfig make_config(const Options& opt) {
  symprep::ScheduleConfig cfg;
  cfg.enable_deg01 = !opt.disable_deg01;
  cfg.enable_deg2 = !opt.disable_deg2;
  cfg.enable_probe = !opt.disable_probe;
  cfg.enable_flip = !opt.disable_flip;
  cfg.enable_components = !opt.disable_components;
  cfg.probe_bound = opt.probe_bound;
  cfg.shrink_threshold = opt.shrink;
  cfg.t_cap = opt.t_cap;
  cfg.seed = opt.seed;
  return cfg;
}

std::vector<std::pair<std::string, long long>> collect_stats(
    const symprep::ColoredGraph& input, const symprep::PreprocessResult& res,
    size_t gens_emitted, long long elapsed_ms) {
  const auto& c = res.counters;
  return {
      {"n_input", input.n()},
      {"m_input", input.m()},
      {"n_reduced", res.reduced.n()},
      {"m_reduced", res.reduced.m()},
      {"iterations", c.iterations},
      {"removed_singleton", c.removed_singleton},
      {"removed_deg0", c.removed_deg0},
      {"removed_universal", c.removed_universal},
      {"removed_deg1", c.removed_deg1},
      {"deg2_match", c.removed_match},
      {"deg2_unique", c.removed_path},
      {"deg2_flip", c.removed_flip},
      {"edge_flip_pairs", c.pairs_flipped},
      {"probes_attempted", c.probes_attempted},
      {"probes_succeeded", c.probes_succeeded},
      {"gens_emitted", static_cast<long long>(gens_emitted)},
      {"ops_total", res.ops},
      {"elapsed_ms", elapsed_ms},
  };
}

void write_to(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << content;
}

// Returns the process exit code for one input.
int process_stream(std::istream& in, const Options& opt,
                   const std::string& graph_out, const std::string& gens_out,
                   const std::string& stats_out) {
  auto t0 = std::chrono::steady_clock::now();
  symprep::ColoredGraph input = symprep::parse_dimacs(in);
  symprep::PreprocessResult res = symprep::preprocess(input, make_config(opt));
  std::vector<symprep::SparseAutomorphism> gens = res.generators;
  if (opt.solve || opt.oracle) {
    auto reduced_gens = symprep::ir_solve(res.reduced, &res.ops);
    gens = symprep::reconstruct_group(res, reduced_gens, &res.ops);
  }
  if (opt.oracle) {
    auto truth = symprep::brute_force_aut(input, opt.oracle_limit);
    auto ours = symprep::group_closure(gens, input.n());
    if (ours != truth)
      throw std::logic_error("oracle mismatch: generated group has " +
                             std::to_string(ours.size()) + " elements, brute "
                             "force found " + std::to_string(truth.size()));
    std::cerr << "oracle ok: |Aut| = " << truth.size() << "\n";
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  if (!graph_out.empty()) {
    std::ostringstream s;
    symprep::write_dimacs(s, res.reduced);
    write_to(graph_out, s.str());
  }
  if (!gens_out.empty()) {
    std::ostringstream s;
    symprep::write_generators(s, gens);
    write_to(gens_out, s.str());
  }
  if (!stats_out.empty()) {
    std::ostringstream s;
    symprep::write_stats_json(s, collect_stats(input, res, gens.size(), elapsed));
    write_to(stats_out, s.str());
  }
  return 0;
}

int classify_error(std::ostream& err, const std::string& where,
                   std::exception_ptr ep) {
  try {
    std::rethrow_exception(ep);
  } catch (const symprep::parse_error& e) {
    err << where << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const symprep::oracle_limit_error& e) {
    err << where << "oracle limit: " << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    err << where << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << where << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_single(const Options& opt) {
  try {
    if (opt.in == "-") return process_stream(std::cin, opt, opt.out_graph,
                                             opt.out_gens, opt.stats);
    std::ifstream f(opt.in);
    if (!f) {
      std::cerr << "cannot open '" << opt.in << "'\n";
      return 1;
    }
    return process_stream(f, opt, opt.out_graph, opt.out_gens, opt.stats);
  } catch (...) {
    return classify_error(std::cerr, "", std::current_exception());
  }
}

// Every regular file in the directory is processed independently; outputs
// land next to each input as <name>.reduced, <name>.gens and
// <name>.stats.json.  Work is spread over a small fixed pool of threads.
int run_batch(const Options& opt) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(opt.batch))
    if (entry.is_regular_file()) {
      auto ext = entry.path().extension();
      if (ext == ".reduced" || ext == ".gens" || ext == ".json") continue;
      files.push_back(entry.path());
    }
  std::sort(files.begin(), files.end());

  unsigned pool = std::min<unsigned>(
      4, std::max(1u, std::thread::hardware_concurrency()));
  pool = std::min<unsigned>(pool, std::max<size_t>(1, files.size()));
  std::atomic<size_t> next{0};
  std::atomic<int> worst{0};
  std::mutex log_mutex;

  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= files.size()) return;
      const auto& path = files[i];
      int code = 0;
      try {
        std::ifstream f(path);
        if (!f) throw std::runtime_error("cannot open input");
        code = process_stream(f, opt, path.string() + ".reduced",
                              path.string() + ".gens",
                              path.string() + ".stats.json");
      } catch (...) {
        std::lock_guard<std::mutex> lock(log_mutex);
        code = classify_error(std::cerr, path.string() + ": ",
                              std::current_exception());
      }
      int cur = worst.load();
      while (cur < code && !worst.compare_exchange_weak(cur, code)) {
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < pool; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  return worst.load();
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{
      "symprep: shrinks a vertex-colored graph while preserving its "
      "automorphism group, emitting the generators lost along the way"};
  app.add_option("--in", opt.in, "input graph, '-' for stdin (default)");
  app.add_option("--out-graph", opt.out_graph,
                 "write the reduced graph here ('-' for stdout)");
  app.add_option("--out-gens", opt.out_gens,
                 "write generators here ('-' for stdout)");
  app.add_option("--stats", opt.stats, "write a JSON stats object here");
  app.add_option("--batch", opt.batch,
                 "process every file in this directory instead of --in");
  app.add_flag("--solve", opt.solve,
               "run the reference solver on the reduced graph and emit the "
               "full generator set");
  app.add_flag("--oracle", opt.oracle,
               "verify the generated group against brute force (small "
               "graphs only)");
  app.add_option("--oracle-limit", opt.oracle_limit,
                 "vertex cap for --oracle (default 10)");
  app.add_flag("--disable-deg01", opt.disable_deg01,
               "skip degree-0/1 and universal-cell reductions");
  app.add_flag("--disable-deg2", opt.disable_deg2,
               "skip the degree-2 pattern reductions");
  app.add_flag("--disable-probe", opt.disable_probe, "skip orbit probing");
  app.add_flag("--disable-flip", opt.disable_flip,
               "skip dense cell-pair complementation");
  app.add_flag("--disable-components", opt.disable_components,
               "probe the whole graph instead of per component");
  app.add_option("--probe-bound", opt.probe_bound,
                 "largest cell size probed exhaustively (default 8)");
  app.add_option("--shrink", opt.shrink,
                 "keep iterating while this fraction of vertices was removed "
                 "(default 0.25)");
  app.add_option("--t-cap", opt.t_cap,
                 "longest chain walked by path reductions, 0 = unbounded");
  app.add_option("--seed", opt.seed,
                 "random seed (reserved; the pipeline is deterministic)");
  CLI11_PARSE(app, argc, argv);

  if (!opt.batch.empty()) return run_batch(opt);
  return run_single(opt);
}

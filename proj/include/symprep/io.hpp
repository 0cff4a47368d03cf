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
#include <cctype>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symprep/graph.hpp"
#include "symprep/perm.hpp"

namespace symprep {

struct parse_error : std::runtime_error {
  int line;
  parse_error(int line_no, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + message),
        line(line_no) {}
};

// DIMACS-style graph input:
//   c <comment>
//   p edge <n> <m>
//   n <vertex> <color>     (1-based vertex; unlisted vertices get color 0)
//   e <u> <v>              (1-based, no self-loops, no duplicates)
// The header's edge count is informational; the edges present decide.
inline ColoredGraph parse_dimacs(std::istream& in) {
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> colors;
  std::set<std::pair<int, int>> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ss(line);
    std::string kind;
    if (!(ss >> kind)) continue;
    if (kind == "c") continue;
    if (kind == "p") {
      if (n >= 0) throw parse_error(line_no, "duplicate problem line");
      std::string fmt;
      long long nn = -1, mm = -1;
      if (!(ss >> fmt >> nn >> mm) || fmt != "edge" || nn < 0 || mm < 0)
        throw parse_error(line_no, "malformed problem line");
      n = static_cast<int>(nn);
      colors.assign(n, 0);
    } else if (kind == "n") {
      if (n < 0) throw parse_error(line_no, "color line before problem line");
      int v = 0, col = 0;
      if (!(ss >> v >> col)) throw parse_error(line_no, "malformed color line");
      if (v < 1 || v > n) throw parse_error(line_no, "vertex out of range");
      colors[v - 1] = col;
    } else if (kind == "e") {
      if (n < 0) throw parse_error(line_no, "edge line before problem line");
      int u = 0, v = 0;
      if (!(ss >> u >> v)) throw parse_error(line_no, "malformed edge line");
      if (u < 1 || u > n || v < 1 || v > n)
        throw parse_error(line_no, "vertex out of range");
      if (u == v) throw parse_error(line_no, "self-loop");
      std::pair<int, int> key = std::minmax(u, v);
      if (!seen.insert(key).second)
        throw parse_error(line_no, "duplicate edge");
      edges.emplace_back(u - 1, v - 1);
    } else {
      throw parse_error(line_no, "unknown line type '" + kind + "'");
    }
  }
  if (n < 0) throw parse_error(line_no, "missing problem line");
  return build_graph(n, edges, colors);
}

// Canonical writer: header, color lines for non-zero colors in vertex
// order, then edges sorted with the lower endpoint first.  Parsing the
// output reproduces the graph exactly.
inline void write_dimacs(std::ostream& out, const ColoredGraph& g) {
  out << "p edge " << g.n() << " " << g.m() << "\n";
  for (int v = 0; v < g.n(); ++v)
    if (g.color(v) != 0) out << "n " << v + 1 << " " << g.color(v) << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

// One permutation per line in disjoint-cycle notation, 1-based, each cycle
// starting at its minimum element, cycles ordered by minimum element.  The
// identity prints as "()".
inline void write_generators(std::ostream& out,
                             const std::vector<SparseAutomorphism>& gens) {
  for (const auto& ph : gens) {
    if (ph.is_identity()) {
      out << "()\n";
      continue;
    }
    auto supp = ph.support();  // ascending
    std::set<int> left(supp.begin(), supp.end());
    while (!left.empty()) {
      int start = *left.begin();
      out << "(" << start + 1;
      left.erase(left.begin());
      for (int v = ph.image(start); v != start; v = ph.image(v)) {
        out << " " << v + 1;
        left.erase(v);
      }
      out << ")";
    }
    out << "\n";
  }
}

inline std::vector<SparseAutomorphism> parse_generators(std::istream& in) {
  std::vector<SparseAutomorphism> gens;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t i = 0;
    auto skip_ws = [&] {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    };
    skip_ws();
    if (i == line.size()) continue;
    std::vector<std::pair<int, int>> pairs;
    while (i < line.size()) {
      skip_ws();
      if (i == line.size()) break;
      if (line[i] != '(') throw parse_error(line_no, "expected '('");
      ++i;
      std::vector<int> cycle;
      for (;;) {
        skip_ws();
        if (i == line.size()) throw parse_error(line_no, "unclosed cycle");
        if (line[i] == ')') {
          ++i;
          break;
        }
        if (!isdigit(static_cast<unsigned char>(line[i])))
          throw parse_error(line_no, "expected a vertex number");
        int v = 0;
        while (i < line.size() && isdigit(static_cast<unsigned char>(line[i])))
          v = v * 10 + (line[i++] - '0');
        if (v < 1) throw parse_error(line_no, "vertices are 1-based");
        cycle.push_back(v - 1);
      }
      for (size_t k = 0; k + 1 < cycle.size(); ++k)
        pairs.emplace_back(cycle[k], cycle[k + 1]);
      if (cycle.size() > 1) pairs.emplace_back(cycle.back(), cycle.front());
    }
    try {
      gens.push_back(SparseAutomorphism::from_pairs(std::move(pairs)));
    } catch (const std::invalid_argument& e) {
      throw parse_error(line_no, e.what());
    }
  }
  return gens;
}

// Flat single-object JSON with integer values, keys in the given order.
inline void write_stats_json(
    std::ostream& out,
    const std::vector<std::pair<std::string, long long>>& stats) {
  out << "{\n";
  for (size_t i = 0; i < stats.size(); ++i)
    out << "  \"" << stats[i].first << "\": " << stats[i].second
        << (i + 1 < stats.size() ? ",\n" : "\n");
  out << "}\n";
}

}  // namespace symprep


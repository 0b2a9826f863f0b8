//
// Copyright 2026 The DPLP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "dplp/heuristics.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "dplp/error.hpp"

namespace dplp {

namespace {

// Walks two sorted neighbor lists at once; calls on_common for every shared
// element and counts the union size.
template <typename Fn>
std::size_t merge_neighborhoods(std::span<const NodeId> a,
                                std::span<const NodeId> b, Fn on_common) {
  std::size_t i = 0, j = 0, union_size = 0;
  while (i < a.size() && j < b.size()) {
    ++union_size;
    if (a[i] == b[j]) {
      on_common(a[i]);
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return union_size + (a.size() - i) + (b.size() - j);
}

void check_pair(const Graph& g, NodeId u, NodeId v) {
  if (u < 0 || u >= g.node_count() || v < 0 || v >= g.node_count()) {
    throw std::invalid_argument("node id out of range");
  }
  if (u == v) throw std::invalid_argument("score of a node with itself");
}

}  // namespace

std::string_view heuristic_name(Heuristic h) {
  switch (h) {
    case Heuristic::kCommonNeighbors:
      return "cn";
    case Heuristic::kJaccard:
      return "jc";
    case Heuristic::kAdamicAdar:
      return "aa";
    case Heuristic::kExternal:
      return "external";
  }
  return "?";
}

std::optional<Heuristic> heuristic_from_name(std::string_view name) {
  if (name == "cn") return Heuristic::kCommonNeighbors;
  if (name == "jc") return Heuristic::kJaccard;
  if (name == "aa") return Heuristic::kAdamicAdar;
  if (name == "external") return Heuristic::kExternal;
  return std::nullopt;
}

double score_cn(const Graph& g, NodeId u, NodeId v) {
  check_pair(g, u, v);
  std::size_t common = 0;
  merge_neighborhoods(g.neighbors(u), g.neighbors(v),
                      [&common](NodeId) { ++common; });
  return static_cast<double>(common);
}

double score_jc(const Graph& g, NodeId u, NodeId v) {
  check_pair(g, u, v);
  std::size_t common = 0;
  const std::size_t union_size = merge_neighborhoods(
      g.neighbors(u), g.neighbors(v), [&common](NodeId) { ++common; });
  if (union_size == 0) return 0.0;
  return static_cast<double>(common) / static_cast<double>(union_size);
}

double score_aa(const Graph& g, NodeId u, NodeId v) {
  check_pair(g, u, v);
  double sum = 0.0;
  merge_neighborhoods(g.neighbors(u), g.neighbors(v), [&](NodeId w) {
    sum += 1.0 / std::log(static_cast<double>(g.degree(w)));
  });
  return sum;
}

std::uint64_t external_pair_key(NodeId u, NodeId v) {
  const auto lo = static_cast<std::uint64_t>(std::min(u, v));
  const auto hi = static_cast<std::uint64_t>(std::max(u, v));
  return (lo << 32) | hi;
}

ScoreFunction ScoreFunction::common_neighbors() {
  return {Heuristic::kCommonNeighbors, kSensitivityCommonNeighbors};
}

ScoreFunction ScoreFunction::jaccard() {
  return {Heuristic::kJaccard, kSensitivityJaccard};
}

ScoreFunction ScoreFunction::adamic_adar() {
  return {Heuristic::kAdamicAdar, kSensitivityAdamicAdar};
}

ScoreFunction ScoreFunction::external(ExternalScoreTable table,
                                      double sensitivity) {
  if (!(sensitivity > 0)) {
    throw std::invalid_argument("external sensitivity must be positive");
  }
  for (const auto& [key, value] : table) {
    (void)key;
    if (!(value >= 0)) {
      throw std::invalid_argument("external scores must be non-negative");
    }
  }
  ScoreFunction f(Heuristic::kExternal, sensitivity);
  f.table_ = std::make_shared<const ExternalScoreTable>(std::move(table));
  return f;
}

double ScoreFunction::score(const Graph& g, NodeId u, NodeId v) const {
  switch (kind_) {
    case Heuristic::kCommonNeighbors:
      return score_cn(g, u, v);
    case Heuristic::kJaccard:
      return score_jc(g, u, v);
    case Heuristic::kAdamicAdar:
      return score_aa(g, u, v);
    case Heuristic::kExternal: {
      check_pair(g, u, v);
      const auto it = table_->find(external_pair_key(u, v));
      return it == table_->end() ? 0.0 : it->second;
    }
  }
  throw std::logic_error("unknown heuristic");
}

ScoredCandidates ScoreFunction::score_all(const Graph& g, NodeId u,
                                          std::span<const NodeId> pool,
                                          bool check_pool) const {
  ScoredCandidates out;
  out.query = u;
  out.entries.reserve(pool.size());
  for (NodeId v : pool) {
    if (check_pool && (v == u || g.has_edge(u, v))) {
      throw std::invalid_argument(
          "candidate pool must contain only non-neighbors of the query");
    }
    out.entries.push_back({v, score(g, u, v)});
  }
  return out;
}

ScoreFunction load_external_scores(
    std::istream& in, double sensitivity,
    const std::unordered_map<std::int64_t, NodeId>& label_to_id) {
  if (!(sensitivity > 0)) {
    throw std::invalid_argument("external sensitivity must be positive");
  }
  ExternalScoreTable table;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;

    std::istringstream fields(line.substr(start));
    std::int64_t a = 0, b = 0;
    double score = 0.0;
    if (!(fields >> a >> b >> score)) {
      throw ParseError("expected 'u v score'", line_number);
    }
    std::string rest;
    if (fields >> rest) {
      throw ParseError("trailing token '" + rest + "'", line_number);
    }
    if (!(score >= 0)) {
      throw ParseError("negative score", line_number);
    }
    const auto ia = label_to_id.find(a);
    const auto ib = label_to_id.find(b);
    if (ia == label_to_id.end() || ib == label_to_id.end()) continue;
    if (ia->second == ib->second) {
      throw ParseError("score of a node with itself", line_number);
    }
    const auto key = external_pair_key(ia->second, ib->second);
    const auto [it, inserted] = table.emplace(key, score);
    if (!inserted && it->second != score) {
      throw ParseError("conflicting duplicate for pair " + std::to_string(a) +
                           " " + std::to_string(b),
                       line_number);
    }
  }
  return ScoreFunction::external(std::move(table), sensitivity);
}

}  // namespace dplp

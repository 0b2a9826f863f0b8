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

#ifndef DPLP_EVAL_HPP_
#define DPLP_EVAL_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dplp/graph.hpp"
#include "dplp/heuristics.hpp"
#include "dplp/mechanisms.hpp"

namespace dplp {

// Held-out evaluation protocol parameters: per query node, keep_fraction of
// its neighbors and of its non-neighbors stay visible; the rest form the
// held-out pool the mechanism must rank.
struct SplitSpec {
  double keep_fraction = 0.85;
  int k = 10;       // list length for AP@K and the mechanisms
  int trials = 10;  // randomization runs averaged into E[MAP]
  std::uint64_t seed = 0;

  void validate() const;
};

struct QuerySplit {
  Graph train;
  std::vector<NodeId> held_pool;       // ascending
  std::vector<NodeId> held_positives;  // ascending, subset of held_pool
};

// Nodes contained in at least one triangle, ascending.
std::vector<NodeId> select_queries(const Graph& g);

// Deterministic function of (spec.seed, q, trial). Hides
// floor((1-keep_fraction)|N(q)|) neighbors (removing those edges from the
// train graph) and holds out floor((1-keep_fraction)|non-neighbors|)
// non-neighbors. Edges between two non-query nodes are never hidden.
QuerySplit split_for_query(const Graph& g, NodeId q, const SplitSpec& spec,
                           int trial);

// AP@K = (1/min(K, |positives|)) Σ_{i<=K, ranked_i relevant} precision@i.
// positives must be sorted and non-empty.
double average_precision(std::span<const NodeId> ranked,
                         std::span<const NodeId> positives, int k);

struct EvalRow {
  Mechanism mechanism = Mechanism::kDplp;
  Heuristic heuristic = Heuristic::kCommonNeighbors;
  double epsilon_p = 0.0;
  double expected_map = 0.0;
  double stderr_of_map = 0.0;
  std::int64_t n_queries = 0;
  int trials = 0;
};

struct EvalReport {
  std::vector<EvalRow> rows;
  std::int64_t eligible_queries = 0;
  std::int64_t skipped_queries = 0;  // triangle-filtered but nothing to hide
};

// One protocol run: for every trial and eligible query, split, score the
// held pool on the train graph, rank it with the mechanism, and average
// AP@K. cfg.k is overridden by spec.k so the mechanism and the metric use
// the same list length.
EvalRow evaluate(const Graph& g, const ScoreFunction& f, const DpConfig& cfg,
                 const SplitSpec& spec, int threads = 0);

// Cross product of mechanisms x heuristics x epsilon values, all cells
// sharing the same splits and mechanism noise streams (common random
// numbers), so rows are comparable pairwise.
EvalReport sweep(const Graph& g, const std::vector<ScoreFunction>& heuristics,
                 const std::vector<Mechanism>& mechanisms,
                 const DpConfig& base, const std::vector<double>& epsilons,
                 const SplitSpec& spec, int threads = 0);

std::string eval_csv_header();
std::string eval_csv_row(const EvalRow& row);
std::string eval_csv(const EvalReport& report);  // header + rows + newline

}  // namespace dplp

#endif  // DPLP_EVAL_HPP_

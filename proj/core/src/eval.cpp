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

#include "dplp/eval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dplp/format.hpp"
#include "dplp/parallel.hpp"
#include "dplp/random.hpp"

namespace dplp {

namespace {

// Stream tags; keep distinct so split and mechanism randomness never alias.
constexpr std::uint64_t kSplitStream = 0x51;
constexpr std::uint64_t kMechanismStream = 0x52;

// floor(fraction * count), with a nudge so that binary representation error
// in `fraction` (e.g. 1 - 0.85) cannot push an exact integer product below
// its true value.
std::int64_t floor_fraction(double fraction, std::int64_t count) {
  return static_cast<std::int64_t>(
      std::floor(fraction * static_cast<double>(count) + 1e-9));
}

// Deterministic partial Fisher-Yates: the first `take` slots of a copy of
// `items`, then sorted ascending.
std::vector<NodeId> sample_without_replacement(std::vector<NodeId> items,
                                               std::int64_t take, Rng& rng) {
  const auto n = static_cast<std::int64_t>(items.size());
  take = std::min(take, n);
  for (std::int64_t i = 0; i < take; ++i) {
    const std::int64_t j =
        i + static_cast<std::int64_t>(
                rng.next_below(static_cast<std::uint64_t>(n - i)));
    std::swap(items[static_cast<std::size_t>(i)],
              items[static_cast<std::size_t>(j)]);
  }
  items.resize(static_cast<std::size_t>(take));
  std::sort(items.begin(), items.end());
  return items;
}

struct CellResult {
  double ap = 0.0;
};

}  // namespace

void SplitSpec::validate() const {
  if (!(keep_fraction > 0) || !(keep_fraction <= 1)) {
    throw std::invalid_argument("keep_fraction must lie in (0, 1]");
  }
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
}

std::vector<NodeId> select_queries(const Graph& g) {
  std::vector<NodeId> out;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (g.has_triangle(u)) out.push_back(u);
  }
  return out;
}

QuerySplit split_for_query(const Graph& g, NodeId q, const SplitSpec& spec,
                           int trial) {
  spec.validate();
  Rng rng(derive_stream_seed(spec.seed, kSplitStream,
                             static_cast<std::uint64_t>(q),
                             static_cast<std::uint64_t>(trial)));

  const auto nbrs = g.neighbors(q);
  const double hidden_fraction = 1.0 - spec.keep_fraction;
  const std::int64_t hide_pos =
      floor_fraction(hidden_fraction, static_cast<std::int64_t>(nbrs.size()));
  QuerySplit split;
  split.held_positives = sample_without_replacement(
      std::vector<NodeId>(nbrs.begin(), nbrs.end()), hide_pos, rng);

  auto pool_candidates = g.non_neighbors(q);
  const std::int64_t hide_neg = floor_fraction(
      hidden_fraction, static_cast<std::int64_t>(pool_candidates.size()));
  const auto held_negatives =
      sample_without_replacement(std::move(pool_candidates), hide_neg, rng);

  split.train = g.remove_edges_at(q, split.held_positives);
  split.held_pool.resize(split.held_positives.size() + held_negatives.size());
  std::merge(split.held_positives.begin(), split.held_positives.end(),
             held_negatives.begin(), held_negatives.end(),
             split.held_pool.begin());
  return split;
}

double average_precision(std::span<const NodeId> ranked,
                         std::span<const NodeId> positives, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (positives.empty()) {
    throw std::invalid_argument("AP undefined without positives");
  }
  if (!std::is_sorted(positives.begin(), positives.end())) {
    throw std::invalid_argument("positives must be sorted");
  }
  double sum = 0.0;
  int hits = 0;
  const std::size_t depth =
      std::min<std::size_t>(static_cast<std::size_t>(k), ranked.size());
  for (std::size_t i = 0; i < depth; ++i) {
    if (std::binary_search(positives.begin(), positives.end(), ranked[i])) {
      ++hits;
      sum += static_cast<double>(hits) / static_cast<double>(i + 1);
    }
  }
  const auto denom = std::min<std::size_t>(static_cast<std::size_t>(k),
                                           positives.size());
  return sum / static_cast<double>(denom);
}

EvalReport sweep(const Graph& g, const std::vector<ScoreFunction>& heuristics,
                 const std::vector<Mechanism>& mechanisms,
                 const DpConfig& base, const std::vector<double>& epsilons,
                 const SplitSpec& spec, int threads) {
  spec.validate();
  if (heuristics.empty() || mechanisms.empty() || epsilons.empty()) {
    throw std::invalid_argument(
        "sweep needs at least one heuristic, mechanism and epsilon");
  }

  // Eligibility depends only on the degree, so the query set is identical
  // across trials: triangle-filtered nodes with at least one hidden neighbor.
  const double hidden_fraction = 1.0 - spec.keep_fraction;
  std::vector<NodeId> queries;
  std::int64_t skipped = 0;
  for (NodeId q : select_queries(g)) {
    if (floor_fraction(hidden_fraction, g.degree(q)) >= 1) {
      queries.push_back(q);
    } else {
      ++skipped;
    }
  }
  if (queries.empty()) {
    throw std::invalid_argument("no eligible queries in this graph");
  }

  struct Cell {
    std::size_t heuristic;
    Mechanism mechanism;
    double epsilon;
  };
  std::vector<Cell> cells;
  for (std::size_t h = 0; h < heuristics.size(); ++h) {
    for (Mechanism m : mechanisms) {
      for (double eps : epsilons) cells.push_back({h, m, eps});
    }
  }

  // ap[cell][trial * queries + query]; filled independently per (q, trial)
  // task and reduced in fixed order afterwards, so results do not depend on
  // the thread count.
  const std::size_t per_cell =
      static_cast<std::size_t>(spec.trials) * queries.size();
  std::vector<std::vector<double>> ap(cells.size(),
                                      std::vector<double>(per_cell, 0.0));

  parallel_for(per_cell, threads, [&](std::size_t task) {
    const std::size_t qi = task % queries.size();
    const int trial = static_cast<int>(task / queries.size());
    const NodeId q = queries[qi];

    const QuerySplit split = split_for_query(g, q, spec, trial);

    std::vector<ScoredCandidates> scored;
    scored.reserve(heuristics.size());
    for (const auto& f : heuristics) {
      scored.push_back(f.score_all(split.train, q, split.held_pool));
    }

    for (std::size_t c = 0; c < cells.size(); ++c) {
      const Cell& cell = cells[c];
      DpConfig cfg = base;
      cfg.mechanism = cell.mechanism;
      cfg.epsilon_p = cell.epsilon;
      cfg.k = spec.k;
      // Same stream for every cell of this (q, trial): common random numbers.
      Rng rng(derive_stream_seed(base.seed, kMechanismStream,
                                 static_cast<std::uint64_t>(q),
                                 static_cast<std::uint64_t>(trial)));
      const Recommendation rec = run_mechanism(
          scored[cell.heuristic], cfg, heuristics[cell.heuristic].sensitivity(),
          rng);
      ap[c][task] =
          average_precision(rec.items, split.held_positives, spec.k);
    }
  });

  EvalReport report;
  report.eligible_queries = static_cast<std::int64_t>(queries.size());
  report.skipped_queries = skipped;
  report.rows.reserve(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    std::vector<double> trial_map(static_cast<std::size_t>(spec.trials), 0.0);
    for (int t = 0; t < spec.trials; ++t) {
      double sum = 0.0;
      for (std::size_t qi = 0; qi < queries.size(); ++qi) {
        sum += ap[c][static_cast<std::size_t>(t) * queries.size() + qi];
      }
      trial_map[static_cast<std::size_t>(t)] =
          sum / static_cast<double>(queries.size());
    }
    double mean = 0.0;
    for (double m : trial_map) mean += m;
    mean /= static_cast<double>(spec.trials);
    double stderr_of_map = 0.0;
    if (spec.trials > 1) {
      double ss = 0.0;
      for (double m : trial_map) ss += (m - mean) * (m - mean);
      stderr_of_map = std::sqrt(ss / static_cast<double>(spec.trials - 1)) /
                      std::sqrt(static_cast<double>(spec.trials));
    }

    EvalRow row;
    row.mechanism = cells[c].mechanism;
    row.heuristic = heuristics[cells[c].heuristic].kind();
    row.epsilon_p = cells[c].epsilon;
    row.expected_map = mean;
    row.stderr_of_map = stderr_of_map;
    row.n_queries = static_cast<std::int64_t>(queries.size());
    row.trials = spec.trials;
    report.rows.push_back(row);
  }
  return report;
}

EvalRow evaluate(const Graph& g, const ScoreFunction& f, const DpConfig& cfg,
                 const SplitSpec& spec, int threads) {
  const auto report =
      sweep(g, {f}, {cfg.mechanism}, cfg,
            {cfg.mechanism == Mechanism::kNonPrivate && cfg.epsilon_p <= 0
                 ? 1.0
                 : cfg.epsilon_p},
            spec, threads);
  EvalRow row = report.rows.front();
  row.epsilon_p = cfg.epsilon_p;
  return row;
}

std::string eval_csv_header() {
  return "mechanism,heuristic,epsilon_p,expected_map,stderr,n_queries,trials";
}

std::string eval_csv_row(const EvalRow& row) {
  std::string out;
  out += mechanism_name(row.mechanism);
  out += ',';
  out += heuristic_name(row.heuristic);
  out += ',' + format_double(row.epsilon_p);
  out += ',' + format_double(row.expected_map);
  out += ',' + format_double(row.stderr_of_map);
  out += ',' + std::to_string(row.n_queries);
  out += ',' + std::to_string(row.trials);
  return out;
}

std::string eval_csv(const EvalReport& report) {
  std::string out = eval_csv_header();
  out += '\n';
  for (const auto& row : report.rows) {
    out += eval_csv_row(row);
    out += '\n';
  }
  return out;
}

}  // namespace dplp

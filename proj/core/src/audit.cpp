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

#include "dplp/audit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dplp/format.hpp"

namespace dplp {

namespace {

constexpr std::size_t kMaxOrderedLists = 1000000;

std::vector<double> log_weights_for(const ScoredCandidates& sc,
                                    const DpConfig& cfg, double delta_a) {
  if (cfg.mechanism == Mechanism::kDplp) {
    return dplp_log_weights(sc.entries,
                            dplp_sigma(cfg.epsilon_p, cfg.k, delta_a),
                            delta_a);
  }
  return exponential_log_weights(sc.entries, cfg.epsilon_p, cfg.k, delta_a);
}

// Number of ordered k-lists over n candidates, saturating safely above the
// cap instead of overflowing.
std::size_t ordered_list_count(std::size_t n, std::size_t k) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t factor = n - i;
    if (count > (4 * kMaxOrderedLists) / factor) {
      return 4 * kMaxOrderedLists + 1;
    }
    count *= factor;
  }
  return count;
}

struct Enumerator {
  std::span<const double> base;      // log-weights under G
  std::span<const double> perturbed; // log-weights under G'
  std::size_t steps = 0;

  double max_abs = 0.0;
  std::vector<std::size_t> best_prefix;
  std::size_t lists = 0;

  std::vector<bool> used;
  std::vector<std::size_t> prefix;

  void run() {
    used.assign(base.size(), false);
    prefix.clear();
    descend(0.0);
  }

  void descend(double log_ratio) {
    if (prefix.size() == steps) {
      ++lists;
      if (std::abs(log_ratio) > max_abs) {
        max_abs = std::abs(log_ratio);
        best_prefix = prefix;
      }
      return;
    }
    // Per-step normalizers over the remaining support.
    double zb = 0.0, zp = 0.0, mb = -1e300, mp = -1e300;
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (used[i]) continue;
      mb = std::max(mb, base[i]);
      mp = std::max(mp, perturbed[i]);
    }
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (used[i]) continue;
      zb += std::exp(base[i] - mb);
      zp += std::exp(perturbed[i] - mp);
    }
    const double log_zb = mb + std::log(zb);
    const double log_zp = mp + std::log(zp);
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      prefix.push_back(i);
      descend(log_ratio + (base[i] - log_zb) - (perturbed[i] - log_zp));
      prefix.pop_back();
      used[i] = false;
    }
  }
};

AuditBoundKind bound_kind_for(const ScoreFunction& f) {
  switch (f.kind()) {
    case Heuristic::kCommonNeighbors:
    case Heuristic::kJaccard:
      return AuditBoundKind::kEpsilonHalf;
    default:
      return AuditBoundKind::kEpsilon;
  }
}

}  // namespace

std::string_view audit_bound_kind_name(AuditBoundKind kind) {
  switch (kind) {
    case AuditBoundKind::kEpsilon:
      return "epsilon_p";
    case AuditBoundKind::kEpsilonHalf:
      return "epsilon_p_half";
    case AuditBoundKind::kNotPureDp:
      return "not_pure_dp";
  }
  return "?";
}

AuditReport audit_exact(const Graph& g, const ScoreFunction& f,
                        const DpConfig& cfg, NodeId query) {
  cfg.validate();
  if (cfg.mechanism == Mechanism::kGaussian) {
    AuditReport report;
    report.bound_kind = AuditBoundKind::kNotPureDp;
    report.epsilon_p = cfg.epsilon_p;
    report.passed = false;
    return report;
  }
  if (cfg.mechanism != Mechanism::kDplp &&
      cfg.mechanism != Mechanism::kExponential) {
    throw std::invalid_argument(
        "exact audit requires a sequential mechanism (dplp or exponential)");
  }

  AuditReport report;
  report.bound_kind = bound_kind_for(f);
  report.epsilon_p = cfg.epsilon_p;
  report.claimed_bound = report.bound_kind == AuditBoundKind::kEpsilonHalf
                             ? cfg.epsilon_p / 2.0
                             : cfg.epsilon_p;

  const auto pool = g.non_neighbors(query);
  if (pool.empty()) {
    throw std::invalid_argument("query has no candidate pool to audit");
  }
  const std::size_t steps =
      std::min<std::size_t>(static_cast<std::size_t>(cfg.k), pool.size());
  const std::size_t lists = ordered_list_count(pool.size(), steps);
  if (lists > kMaxOrderedLists) {
    throw std::invalid_argument(
        "enumeration refused: " + std::to_string(lists) +
        " ordered output lists exceed the cap of " +
        std::to_string(kMaxOrderedLists));
  }

  const auto base_scores = f.score_all(g, query, pool);
  const auto base_lw = log_weights_for(base_scores, cfg, f.sensitivity());

  for (const auto& p : enumerate_perturbations(g)) {
    if (p.u == query || p.v == query) {
      ++report.incident_skipped;
      continue;
    }
    const Graph neighbor_graph = g.apply_perturbation(p);
    // Pool membership is unchanged: the perturbation is not incident to the
    // query, so N(query) and hence the output support are identical.
    const auto scores = f.score_all(neighbor_graph, query, pool);
    const auto lw = log_weights_for(scores, cfg, f.sensitivity());

    Enumerator e;
    e.base = base_lw;
    e.perturbed = lw;
    e.steps = steps;
    e.run();
    ++report.pairs_checked;
    report.outputs_checked += e.lists;
    if (e.max_abs > report.max_abs_log_ratio) {
      report.max_abs_log_ratio = e.max_abs;
      AuditWitness witness;
      witness.perturbation = p;
      witness.query = query;
      for (std::size_t idx : e.best_prefix) {
        witness.items.push_back(base_scores.entries[idx].node);
      }
      report.witness = std::move(witness);
    }
  }
  report.passed =
      report.max_abs_log_ratio <= report.claimed_bound + kAuditTolerance;
  return report;
}

AuditReport audit_random_suite(int n_graphs, int max_nodes,
                               const ScoreFunction& f, const DpConfig& cfg,
                               Rng& rng) {
  if (n_graphs < 0) throw std::invalid_argument("n_graphs must be >= 0");
  if (max_nodes < 2 || max_nodes > 8) {
    throw std::invalid_argument("max_nodes must lie in [2, 8]");
  }

  AuditReport aggregate;
  aggregate.epsilon_p = cfg.epsilon_p;
  aggregate.passed = true;
  bool kind_set = false;

  for (int i = 0; i < n_graphs; ++i) {
    const NodeId n = max_nodes;
    const double edge_prob = 0.2 + 0.6 * rng.next_unit();
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (rng.next_unit() < edge_prob) edges.emplace_back(u, v);
      }
    }
    const Graph g = Graph::from_edges(n, std::move(edges));

    for (NodeId query = 0; query < n; ++query) {
      if (g.non_neighbors(query).empty()) continue;
      const AuditReport report = audit_exact(g, f, cfg, query);
      if (!kind_set) {
        aggregate.bound_kind = report.bound_kind;
        aggregate.claimed_bound = report.claimed_bound;
        kind_set = true;
      }
      aggregate.pairs_checked += report.pairs_checked;
      aggregate.outputs_checked += report.outputs_checked;
      aggregate.incident_skipped += report.incident_skipped;
      aggregate.passed = aggregate.passed && report.passed;
      if (report.max_abs_log_ratio > aggregate.max_abs_log_ratio) {
        aggregate.max_abs_log_ratio = report.max_abs_log_ratio;
        aggregate.witness = report.witness;
      }
    }
  }
  if (!kind_set) {
    aggregate.bound_kind = bound_kind_for(f);
    aggregate.claimed_bound =
        aggregate.bound_kind == AuditBoundKind::kEpsilonHalf
            ? cfg.epsilon_p / 2.0
            : cfg.epsilon_p;
  }
  return aggregate;
}

std::string audit_csv_header() {
  return "bound_kind,epsilon_p,max_abs_log_ratio,pairs_checked,"
         "outputs_checked,passed";
}

std::string audit_csv_row(const AuditReport& report) {
  std::string row;
  row += audit_bound_kind_name(report.bound_kind);
  row += ',' + format_double(report.epsilon_p);
  row += ',' + format_double(report.max_abs_log_ratio);
  row += ',' + std::to_string(report.pairs_checked);
  row += ',' + std::to_string(report.outputs_checked);
  row += ',';
  row += report.passed ? "true" : "false";
  return row;
}

}  // namespace dplp

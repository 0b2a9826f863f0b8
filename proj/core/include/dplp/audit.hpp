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

#ifndef DPLP_AUDIT_HPP_
#define DPLP_AUDIT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dplp/graph.hpp"
#include "dplp/heuristics.hpp"
#include "dplp/mechanisms.hpp"
#include "dplp/random.hpp"

namespace dplp {

inline constexpr double kAuditTolerance = 1e-9;

enum class AuditBoundKind { kEpsilon, kEpsilonHalf, kNotPureDp };

std::string_view audit_bound_kind_name(AuditBoundKind kind);

// The (graph perturbation, query, output list) achieving the largest
// absolute log-likelihood ratio.
struct AuditWitness {
  EdgePerturbation perturbation;
  NodeId query = 0;
  std::vector<NodeId> items;
};

struct AuditReport {
  AuditBoundKind bound_kind = AuditBoundKind::kEpsilon;
  double epsilon_p = 0.0;
  double claimed_bound = 0.0;
  double max_abs_log_ratio = 0.0;
  bool passed = false;
  std::size_t pairs_checked = 0;     // (perturbation, query) pairs audited
  std::size_t outputs_checked = 0;   // ordered output lists enumerated
  std::size_t incident_skipped = 0;  // perturbations touching the query node
  std::optional<AuditWitness> witness;

  // max_abs_log_ratio / claimed_bound; <= 1 whenever the audit passes.
  double tightness() const {
    return claimed_bound > 0 ? max_abs_log_ratio / claimed_bound : 0.0;
  }
};

// Exhaustive differential-privacy check for one query: every single-edge
// perturbation not incident to the query (those leave the candidate pool
// fixed) against every ordered output list. The claimed bound is
// epsilon_p/2 for CN and JC and epsilon_p otherwise. Requires a sequential
// mechanism; Gaussian yields a not-pure-DP report that never passes, and
// the enumeration refuses pools with more than 10^6 ordered lists.
AuditReport audit_exact(const Graph& g, const ScoreFunction& f,
                        const DpConfig& cfg, NodeId query);

// Aggregates audit_exact over Erdos-Renyi style random graphs on max_nodes
// nodes (edge probability drawn per graph) and every query with a
// non-empty candidate pool.
AuditReport audit_random_suite(int n_graphs, int max_nodes,
                               const ScoreFunction& f, const DpConfig& cfg,
                               Rng& rng);

std::string audit_csv_header();
std::string audit_csv_row(const AuditReport& report);

}  // namespace dplp

#endif  // DPLP_AUDIT_HPP_

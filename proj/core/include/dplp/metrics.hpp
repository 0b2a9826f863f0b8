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

#ifndef DPLP_METRICS_HPP_
#define DPLP_METRICS_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dplp/graph.hpp"
#include "dplp/heuristics.hpp"
#include "dplp/mechanisms.hpp"
#include "dplp/random.hpp"

namespace dplp {

// Latent distances of a ranked list plus each item's rank in the ideal
// (distance-ascending) order.
struct RankLossInput {
  std::vector<double> method_distances;
  std::vector<int> ideal_positions;  // 1-based ideal ranks, distinct
};

// (1/2K) Σ_{i<j<=K} (d_i - d_j)^2 over pairs whose ideal order is violated.
double ranking_loss(const RankLossInput& in, int k);

// Σ_{i<=K} (d_method_i - d_ideal_i)^2; upper-bounds ranking_loss.
double surrogate_loss(std::span<const double> method_distances,
                      std::span<const double> ideal_distances, int k);

// Monte Carlo estimate of the expected top-K score-sum gap between the
// deterministic ranking and the mechanism's sampled list; always >= 0.
double gamma_bar_empirical(const Graph& g, const ScoreFunction& f,
                           const DpConfig& cfg, NodeId u, int trials,
                           Rng& rng);

// Closed-form utility-loss bound:
//   Σ_{i<=K} s_i (n-i+1)(s_{i+} + Δ + 1)^σ
//            / [ (s_i + Δ + 1)^σ + (n-i)(Δ + 1)^σ ],
// where s_{i+} is the largest score among ranks i+1..K strictly below s_i,
// falling back to 0 when every later score ties. scores must be sorted
// descending; σ is supplied explicitly by the caller.
double gamma_bar_bound(std::span<const double> scores_desc,
                              double delta_a, double sigma,
                              std::int64_t n_nodes, int k);

// sqrt(2 ln(2/δ) / n) + 7 ln(2/δ) / (3 (n - 1)); n >= 2, δ in (0, 1).
double epsilon_bernstein(std::int64_t n_nodes, double delta);

struct BoundParams {
  std::int64_t n_nodes = 0;
  int dimension = 0;
  int k = 0;
  double r = 0.0;
  double delta = 0.0;      // failure probability parameter
  double gamma_bar = 0.0;  // utility loss Γ̄ of the mechanism
  Heuristic heuristic = Heuristic::kCommonNeighbors;
};

struct BoundResult {
  double bound = 0.0;
  double epsilon = 0.0;      // Bernstein concentration term
  double trivial_max = 0.0;  // loss ceiling implied by the loss definition
  bool informative = false;  // bound < trivial_max
};

// High-probability ranking-loss bound with prefactor 4 K^3 r^2 and
// per-heuristic argument:
//   CN: (2Kε + Γ̄/n) / Ω(r)
//   AA: ln(n Ω(r)) (2Kε + Γ̄/n) / Ω(r)   (requires n Ω(r) > 1)
//   JC: 4Kε + 2Γ̄/n
// each raised to 2/(K D).
BoundResult rank_loss_bound(const BoundParams& p);

struct TradeoffResult {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

// (1/ε_p) ln(Γ̄ / (2 K s_max)) <= (1/2K)(ln(s_max + Δ + 1)/ln(Δ + 1) - 1).
TradeoffResult tradeoff_check(double gamma_bar, double s_max, int k,
                                     double delta_a, double epsilon_p);

std::string bound_csv_header();
std::string bound_csv_row(const BoundParams& p, const BoundResult& r);

}  // namespace dplp

#endif  // DPLP_METRICS_HPP_

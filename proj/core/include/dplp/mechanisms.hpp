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

#ifndef DPLP_MECHANISMS_HPP_
#define DPLP_MECHANISMS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dplp/heuristics.hpp"
#include "dplp/random.hpp"

namespace dplp {

enum class Mechanism { kDplp, kLaplace, kGaussian, kExponential, kNonPrivate };

std::string_view mechanism_name(Mechanism m);
std::optional<Mechanism> mechanism_from_name(std::string_view name);

// Per-query privacy configuration.
struct DpConfig {
  double epsilon_p = 0.0;  // total budget per query
  int k = 10;              // recommendation list length
  Mechanism mechanism = Mechanism::kDplp;
  double delta_p = 1e-5;  // Gaussian only; the mechanism is (eps, delta)-DP
  std::uint64_t seed = 0;

  void validate() const;  // throws std::invalid_argument
};

// Ordered top-K output of a mechanism. step_log_probs holds the exact log of
// each step's categorical probability and is populated only for the
// sequential samplers (DPLP, Exponential).
struct Recommendation {
  NodeId query = 0;
  std::vector<NodeId> items;
  std::vector<double> step_log_probs;
};

// sigma = epsilon_p / (2 K ln(delta_a + 1))
double dplp_sigma(double epsilon_p, int k, double delta_a);

// Baseline noise calibration. Both use the 2K/epsilon_p factor so all
// mechanisms are compared under the same per-query budget accounting as
// the DPLP identity epsilon_p = 2 K sigma ln(1 + delta_a).
double laplace_noise_scale(double epsilon_p, int k, double delta_a);
double gaussian_noise_stddev(double epsilon_p, int k, double delta_a,
                             double delta_p);

// Per-candidate log-weights. DPLP: sigma * ln(score + delta_a + 1).
// Exponential: epsilon_p * score / (2 K delta_a) (per-round budget eps/K).
std::vector<double> dplp_log_weights(std::span<const ScoreEntry> entries,
                                     double sigma, double delta_a);
std::vector<double> exponential_log_weights(std::span<const ScoreEntry> entries,
                                            double epsilon_p, int k,
                                            double delta_a);

// K rounds of categorical sampling without replacement over the given
// log-weights: each round adds an independent standard Gumbel to every
// remaining log-weight and takes the argmax, which is distributed exactly
// as the renormalized categorical draw. Returns the drawn index order and
// the exact per-step log-probabilities.
struct SequentialDraw {
  std::vector<std::size_t> order;
  std::vector<double> step_log_probs;
};
SequentialDraw sample_sequential(std::span<const double> log_weights,
                                 std::size_t k, Rng& rng);

// Exact log of the probability that sequential sampling over log_weights
// draws exactly `order` (a sequence of distinct indices).
double sequence_log_probability(std::span<const double> log_weights,
                                std::span<const std::size_t> order);

// Score-descending order, ties by ascending node id; first min(K, n) items.
Recommendation deterministic_topk(const ScoredCandidates& sc, int k);

Recommendation dplp_sample(const ScoredCandidates& sc, const DpConfig& cfg,
                           double delta_a, Rng& rng);
Recommendation laplace_topk(const ScoredCandidates& sc, const DpConfig& cfg,
                            double delta_a, Rng& rng);
Recommendation gaussian_topk(const ScoredCandidates& sc, const DpConfig& cfg,
                             double delta_a, Rng& rng);
Recommendation exponential_topk(const ScoredCandidates& sc,
                                const DpConfig& cfg, double delta_a, Rng& rng);

// Dispatch on cfg.mechanism.
Recommendation run_mechanism(const ScoredCandidates& sc, const DpConfig& cfg,
                             double delta_a, Rng& rng);

// Closed-form log Pr(items | sc) for the sequential mechanisms
// (DPLP, Exponential); the quantity the privacy auditor enumerates.
double exact_output_log_probability(const ScoredCandidates& sc,
                                    const DpConfig& cfg, double delta_a,
                                    std::span<const NodeId> items);

double log_sum_exp(std::span<const double> values);

}  // namespace dplp

#endif  // DPLP_MECHANISMS_HPP_

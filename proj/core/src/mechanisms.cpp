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

#include "dplp/mechanisms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace dplp {

namespace {

void require_nonempty(const ScoredCandidates& sc) {
  if (sc.entries.empty()) {
    throw std::invalid_argument("candidate pool is empty");
  }
}

void require_positive_sensitivity(double delta_a) {
  if (!(delta_a > 0)) {
    throw std::invalid_argument("sensitivity must be positive");
  }
}

// Ranks entry indices by perturbed score, descending, ties by node id.
Recommendation noisy_topk(const ScoredCandidates& sc, int k,
                          const std::vector<double>& perturbed) {
  std::vector<std::size_t> idx(sc.entries.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (perturbed[a] != perturbed[b]) return perturbed[a] > perturbed[b];
    return sc.entries[a].node < sc.entries[b].node;
  });
  Recommendation rec;
  rec.query = sc.query;
  const std::size_t take =
      std::min<std::size_t>(static_cast<std::size_t>(k), idx.size());
  rec.items.reserve(take);
  for (std::size_t i = 0; i < take; ++i) {
    rec.items.push_back(sc.entries[idx[i]].node);
  }
  return rec;
}

Recommendation from_sequential(const ScoredCandidates& sc,
                               const SequentialDraw& draw) {
  Recommendation rec;
  rec.query = sc.query;
  rec.items.reserve(draw.order.size());
  for (std::size_t i : draw.order) rec.items.push_back(sc.entries[i].node);
  rec.step_log_probs = draw.step_log_probs;
  return rec;
}

}  // namespace

std::string_view mechanism_name(Mechanism m) {
  switch (m) {
    case Mechanism::kDplp:
      return "dplp";
    case Mechanism::kLaplace:
      return "laplace";
    case Mechanism::kGaussian:
      return "gaussian";
    case Mechanism::kExponential:
      return "exponential";
    case Mechanism::kNonPrivate:
      return "nonprivate";
  }
  return "?";
}

std::optional<Mechanism> mechanism_from_name(std::string_view name) {
  if (name == "dplp") return Mechanism::kDplp;
  if (name == "laplace") return Mechanism::kLaplace;
  if (name == "gaussian") return Mechanism::kGaussian;
  if (name == "exponential") return Mechanism::kExponential;
  if (name == "nonprivate") return Mechanism::kNonPrivate;
  return std::nullopt;
}

void DpConfig::validate() const {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (mechanism != Mechanism::kNonPrivate && !(epsilon_p > 0)) {
    throw std::invalid_argument("epsilon_p must be positive");
  }
  if (!(delta_p > 0) || !(delta_p < 1)) {
    throw std::invalid_argument("delta_p must lie in (0, 1)");
  }
}

double dplp_sigma(double epsilon_p, int k, double delta_a) {
  if (!(epsilon_p > 0) || k < 1) {
    throw std::invalid_argument("epsilon_p and k must be positive");
  }
  require_positive_sensitivity(delta_a);
  return epsilon_p / (2.0 * static_cast<double>(k) * std::log1p(delta_a));
}

double laplace_noise_scale(double epsilon_p, int k, double delta_a) {
  if (!(epsilon_p > 0) || k < 1) {
    throw std::invalid_argument("epsilon_p and k must be positive");
  }
  require_positive_sensitivity(delta_a);
  return 2.0 * static_cast<double>(k) * delta_a / epsilon_p;
}

double gaussian_noise_stddev(double epsilon_p, int k, double delta_a,
                             double delta_p) {
  if (!(delta_p > 0) || !(delta_p < 1)) {
    throw std::invalid_argument("delta_p must lie in (0, 1)");
  }
  return laplace_noise_scale(epsilon_p, k, delta_a) *
         std::sqrt(2.0 * std::log(1.25 / delta_p));
}

std::vector<double> dplp_log_weights(std::span<const ScoreEntry> entries,
                                     double sigma, double delta_a) {
  require_positive_sensitivity(delta_a);
  if (!(sigma >= 0)) throw std::invalid_argument("sigma must be >= 0");
  std::vector<double> lw(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    lw[i] = sigma * std::log(entries[i].score + delta_a + 1.0);
  }
  return lw;
}

std::vector<double> exponential_log_weights(std::span<const ScoreEntry> entries,
                                            double epsilon_p, int k,
                                            double delta_a) {
  if (!(epsilon_p > 0) || k < 1) {
    throw std::invalid_argument("epsilon_p and k must be positive");
  }
  require_positive_sensitivity(delta_a);
  const double rate = epsilon_p / (2.0 * static_cast<double>(k) * delta_a);
  std::vector<double> lw(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    lw[i] = rate * entries[i].score;
  }
  return lw;
}

double log_sum_exp(std::span<const double> values) {
  if (values.empty()) return -std::numeric_limits<double>::infinity();
  const double m = *std::max_element(values.begin(), values.end());
  if (!std::isfinite(m)) return m;
  double sum = 0.0;
  for (double v : values) sum += std::exp(v - m);
  return m + std::log(sum);
}

SequentialDraw sample_sequential(std::span<const double> log_weights,
                                 std::size_t k, Rng& rng) {
  if (log_weights.empty()) {
    throw std::invalid_argument("candidate pool is empty");
  }
  const std::size_t steps = std::min(k, log_weights.size());

  std::vector<std::size_t> remaining(log_weights.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;

  SequentialDraw draw;
  draw.order.reserve(steps);
  draw.step_log_probs.reserve(steps);
  std::vector<double> live;
  for (std::size_t step = 0; step < steps; ++step) {
    live.clear();
    for (std::size_t i : remaining) live.push_back(log_weights[i]);
    const double log_z = log_sum_exp(live);

    std::size_t best = 0;
    double best_value = -std::numeric_limits<double>::infinity();
    for (std::size_t pos = 0; pos < remaining.size(); ++pos) {
      const double value = log_weights[remaining[pos]] + rng.gumbel();
      if (value > best_value) {
        best_value = value;
        best = pos;
      }
    }
    draw.order.push_back(remaining[best]);
    draw.step_log_probs.push_back(log_weights[remaining[best]] - log_z);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return draw;
}

double sequence_log_probability(std::span<const double> log_weights,
                                std::span<const std::size_t> order) {
  if (order.size() > log_weights.size()) {
    throw std::invalid_argument("sequence longer than pool");
  }
  std::vector<bool> used(log_weights.size(), false);
  double total = 0.0;
  std::vector<double> live;
  for (std::size_t step = 0; step < order.size(); ++step) {
    const std::size_t pick = order[step];
    if (pick >= log_weights.size() || used[pick]) {
      throw std::invalid_argument("sequence must be distinct in-pool indices");
    }
    live.clear();
    for (std::size_t i = 0; i < log_weights.size(); ++i) {
      if (!used[i]) live.push_back(log_weights[i]);
    }
    total += log_weights[pick] - log_sum_exp(live);
    used[pick] = true;
  }
  return total;
}

Recommendation deterministic_topk(const ScoredCandidates& sc, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  require_nonempty(sc);
  std::vector<double> scores(sc.entries.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    scores[i] = sc.entries[i].score;
  }
  return noisy_topk(sc, k, scores);
}

Recommendation dplp_sample(const ScoredCandidates& sc, const DpConfig& cfg,
                           double delta_a, Rng& rng) {
  cfg.validate();
  if (cfg.mechanism != Mechanism::kDplp) {
    throw std::invalid_argument("config mechanism is not dplp");
  }
  require_nonempty(sc);
  const double sigma = dplp_sigma(cfg.epsilon_p, cfg.k, delta_a);
  const auto lw = dplp_log_weights(sc.entries, sigma, delta_a);
  return from_sequential(
      sc, sample_sequential(lw, static_cast<std::size_t>(cfg.k), rng));
}

Recommendation laplace_topk(const ScoredCandidates& sc, const DpConfig& cfg,
                            double delta_a, Rng& rng) {
  cfg.validate();
  if (cfg.mechanism != Mechanism::kLaplace) {
    throw std::invalid_argument("config mechanism is not laplace");
  }
  require_nonempty(sc);
  const double scale = laplace_noise_scale(cfg.epsilon_p, cfg.k, delta_a);
  std::vector<double> perturbed(sc.entries.size());
  for (std::size_t i = 0; i < perturbed.size(); ++i) {
    perturbed[i] = sc.entries[i].score + rng.laplace(scale);
  }
  return noisy_topk(sc, cfg.k, perturbed);
}

Recommendation gaussian_topk(const ScoredCandidates& sc, const DpConfig& cfg,
                             double delta_a, Rng& rng) {
  cfg.validate();
  if (cfg.mechanism != Mechanism::kGaussian) {
    throw std::invalid_argument("config mechanism is not gaussian");
  }
  require_nonempty(sc);
  const double stddev =
      gaussian_noise_stddev(cfg.epsilon_p, cfg.k, delta_a, cfg.delta_p);
  std::vector<double> perturbed(sc.entries.size());
  for (std::size_t i = 0; i < perturbed.size(); ++i) {
    perturbed[i] = sc.entries[i].score + rng.gaussian(stddev);
  }
  return noisy_topk(sc, cfg.k, perturbed);
}

Recommendation exponential_topk(const ScoredCandidates& sc,
                                const DpConfig& cfg, double delta_a,
                                Rng& rng) {
  cfg.validate();
  if (cfg.mechanism != Mechanism::kExponential) {
    throw std::invalid_argument("config mechanism is not exponential");
  }
  require_nonempty(sc);
  const auto lw =
      exponential_log_weights(sc.entries, cfg.epsilon_p, cfg.k, delta_a);
  return from_sequential(
      sc, sample_sequential(lw, static_cast<std::size_t>(cfg.k), rng));
}

Recommendation run_mechanism(const ScoredCandidates& sc, const DpConfig& cfg,
                             double delta_a, Rng& rng) {
  switch (cfg.mechanism) {
    case Mechanism::kDplp:
      return dplp_sample(sc, cfg, delta_a, rng);
    case Mechanism::kLaplace:
      return laplace_topk(sc, cfg, delta_a, rng);
    case Mechanism::kGaussian:
      return gaussian_topk(sc, cfg, delta_a, rng);
    case Mechanism::kExponential:
      return exponential_topk(sc, cfg, delta_a, rng);
    case Mechanism::kNonPrivate:
      return deterministic_topk(sc, cfg.k);
  }
  throw std::logic_error("unknown mechanism");
}

double exact_output_log_probability(const ScoredCandidates& sc,
                                    const DpConfig& cfg, double delta_a,
                                    std::span<const NodeId> items) {
  cfg.validate();
  require_nonempty(sc);
  std::vector<double> lw;
  if (cfg.mechanism == Mechanism::kDplp) {
    lw = dplp_log_weights(sc.entries,
                          dplp_sigma(cfg.epsilon_p, cfg.k, delta_a), delta_a);
  } else if (cfg.mechanism == Mechanism::kExponential) {
    lw = exponential_log_weights(sc.entries, cfg.epsilon_p, cfg.k, delta_a);
  } else {
    throw std::invalid_argument(
        "exact output probability requires a sequential mechanism");
  }

  std::unordered_map<NodeId, std::size_t> index;
  index.reserve(sc.entries.size());
  for (std::size_t i = 0; i < sc.entries.size(); ++i) {
    index.emplace(sc.entries[i].node, i);
  }
  std::vector<std::size_t> order;
  order.reserve(items.size());
  for (NodeId item : items) {
    const auto it = index.find(item);
    if (it == index.end()) {
      throw std::invalid_argument("item outside candidate pool");
    }
    order.push_back(it->second);
  }
  return sequence_log_probability(lw, order);
}

}  // namespace dplp

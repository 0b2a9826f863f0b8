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

#include "dplp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "dplp/format.hpp"
#include "dplp/latent.hpp"

namespace dplp {

double ranking_loss(const RankLossInput& in, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (in.method_distances.size() != in.ideal_positions.size()) {
    throw std::invalid_argument("distance/rank length mismatch");
  }
  if (in.method_distances.size() < static_cast<std::size_t>(k)) {
    throw std::invalid_argument("fewer than k entries");
  }
  {
    std::set<int> distinct(in.ideal_positions.begin(),
                           in.ideal_positions.end());
    if (distinct.size() != in.ideal_positions.size()) {
      throw std::invalid_argument("ideal ranks must be distinct");
    }
  }
  double sum = 0.0;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (in.ideal_positions[static_cast<std::size_t>(i)] >
          in.ideal_positions[static_cast<std::size_t>(j)]) {
        const double gap = in.method_distances[static_cast<std::size_t>(i)] -
                           in.method_distances[static_cast<std::size_t>(j)];
        sum += gap * gap;
      }
    }
  }
  return sum / (2.0 * static_cast<double>(k));
}

double surrogate_loss(std::span<const double> method_distances,
                      std::span<const double> ideal_distances, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (method_distances.size() < static_cast<std::size_t>(k) ||
      ideal_distances.size() < static_cast<std::size_t>(k)) {
    throw std::invalid_argument("fewer than k entries");
  }
  double sum = 0.0;
  for (int i = 0; i < k; ++i) {
    const double gap = method_distances[static_cast<std::size_t>(i)] -
                       ideal_distances[static_cast<std::size_t>(i)];
    sum += gap * gap;
  }
  return sum;
}

double gamma_bar_empirical(const Graph& g, const ScoreFunction& f,
                           const DpConfig& cfg, NodeId u, int trials,
                           Rng& rng) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const auto pool = g.non_neighbors(u);
  if (pool.empty()) throw std::invalid_argument("candidate pool is empty");
  const auto sc = f.score_all(g, u, pool);

  std::vector<double> score_of;
  score_of.reserve(sc.entries.size());
  double best_sum = 0.0;
  {
    const auto det = deterministic_topk(sc, cfg.k);
    // entries are in ascending node order, so node -> score is positional.
    for (const auto& e : sc.entries) score_of.push_back(e.score);
    for (NodeId item : det.items) {
      const auto it = std::lower_bound(pool.begin(), pool.end(), item);
      best_sum += score_of[static_cast<std::size_t>(it - pool.begin())];
    }
  }

  double total = 0.0;
  for (int t = 0; t < trials; ++t) {
    const auto rec = run_mechanism(sc, cfg, f.sensitivity(), rng);
    double sampled_sum = 0.0;
    for (NodeId item : rec.items) {
      const auto it = std::lower_bound(pool.begin(), pool.end(), item);
      sampled_sum += score_of[static_cast<std::size_t>(it - pool.begin())];
    }
    total += best_sum - sampled_sum;
  }
  return total / static_cast<double>(trials);
}

double gamma_bar_bound(std::span<const double> scores_desc,
                              double delta_a, double sigma,
                              std::int64_t n_nodes, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (scores_desc.size() < static_cast<std::size_t>(k)) {
    throw std::invalid_argument("fewer than k scores");
  }
  if (!std::is_sorted(scores_desc.begin(), scores_desc.end(),
                      std::greater<double>())) {
    throw std::invalid_argument("scores must be sorted descending");
  }
  if (!(delta_a > 0) || !(sigma > 0)) {
    throw std::invalid_argument("delta_a and sigma must be positive");
  }
  if (n_nodes < k) throw std::invalid_argument("n_nodes must be >= k");

  const double log_floor = std::log(delta_a + 1.0);
  double bound = 0.0;
  for (int i = 1; i <= k; ++i) {
    const double s_i = scores_desc[static_cast<std::size_t>(i - 1)];
    // Largest score at ranks i+1..K strictly below s_i; 0 when all tie.
    double s_next = 0.0;
    for (int j = i + 1; j <= k; ++j) {
      const double s_j = scores_desc[static_cast<std::size_t>(j - 1)];
      if (s_j < s_i) {
        s_next = s_j;
        break;
      }
    }
    const double remaining = static_cast<double>(n_nodes - i);
    const double log_num = sigma * std::log(s_next + delta_a + 1.0);
    const double own = sigma * std::log(s_i + delta_a + 1.0);
    double log_den;
    if (remaining > 0) {
      const double rest = std::log(remaining) + sigma * log_floor;
      const double hi = std::max(own, rest);
      log_den = hi + std::log(std::exp(own - hi) + std::exp(rest - hi));
    } else {
      log_den = own;
    }
    bound += s_i * static_cast<double>(n_nodes - i + 1) *
             std::exp(log_num - log_den);
  }
  return bound;
}

double epsilon_bernstein(std::int64_t n_nodes, double delta) {
  if (n_nodes < 2) throw std::invalid_argument("n_nodes must be >= 2");
  if (!(delta > 0) || !(delta < 1)) {
    throw std::invalid_argument("delta must lie in (0, 1)");
  }
  const double log_term = std::log(2.0 / delta);
  return std::sqrt(2.0 * log_term / static_cast<double>(n_nodes)) +
         7.0 * log_term / (3.0 * static_cast<double>(n_nodes - 1));
}

BoundResult rank_loss_bound(const BoundParams& p) {
  if (p.k < 1) throw std::invalid_argument("k must be >= 1");
  if (p.dimension < 1 || p.k * p.dimension < 2) {
    throw std::invalid_argument("need K*D >= 2");
  }
  if (p.n_nodes < std::max<std::int64_t>(2, p.k)) {
    throw std::invalid_argument("n_nodes must be >= max(2, k)");
  }
  if (!(p.r > 0)) throw std::invalid_argument("r must be positive");
  if (!(p.gamma_bar >= 0)) {
    throw std::invalid_argument("gamma_bar must be >= 0");
  }

  BoundResult result;
  result.epsilon = epsilon_bernstein(p.n_nodes, p.delta);
  const double n = static_cast<double>(p.n_nodes);
  const double kk = static_cast<double>(p.k);
  const double vol = omega(p.dimension, p.r);
  const double core = 2.0 * kk * result.epsilon + p.gamma_bar / n;

  double argument;
  switch (p.heuristic) {
    case Heuristic::kCommonNeighbors:
      argument = core / vol;
      break;
    case Heuristic::kAdamicAdar: {
      if (!(n * vol > 1.0)) {
        throw std::invalid_argument(
            "AA bound undefined: |V| * Omega(r) must exceed 1");
      }
      argument = std::log(n * vol) * core / vol;
      break;
    }
    case Heuristic::kJaccard:
      argument = 4.0 * kk * result.epsilon + 2.0 * p.gamma_bar / n;
      break;
    default:
      throw std::invalid_argument("bound defined only for cn, aa, jc");
  }

  const double prefactor = 4.0 * kk * kk * kk * p.r * p.r;
  result.bound =
      prefactor *
      std::pow(argument, 2.0 / (kk * static_cast<double>(p.dimension)));
  result.trivial_max = kk * (2.0 * p.r) * (2.0 * p.r) * (kk - 1.0) / 2.0 /
                       (2.0 * kk);
  result.informative = result.bound < result.trivial_max;
  return result;
}

TradeoffResult tradeoff_check(double gamma_bar, double s_max, int k,
                                     double delta_a, double epsilon_p) {
  if (!(gamma_bar > 0) || !(s_max > 0)) {
    throw std::invalid_argument("gamma_bar and s_max must be positive");
  }
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(delta_a > 0) || !(epsilon_p > 0)) {
    throw std::invalid_argument("delta_a and epsilon_p must be positive");
  }
  TradeoffResult res;
  res.lhs = std::log(gamma_bar / (2.0 * static_cast<double>(k) * s_max)) /
            epsilon_p;
  res.rhs = (std::log(s_max + delta_a + 1.0) / std::log(delta_a + 1.0) - 1.0) /
            (2.0 * static_cast<double>(k));
  res.holds = res.lhs <= res.rhs + 1e-12;
  return res;
}

std::string bound_csv_header() {
  return "heuristic,n_nodes,D,K,r,delta,gamma_bar,epsilon,bound,informative";
}

std::string bound_csv_row(const BoundParams& p, const BoundResult& r) {
  std::string row;
  row += heuristic_name(p.heuristic);
  row += ',' + std::to_string(p.n_nodes);
  row += ',' + std::to_string(p.dimension);
  row += ',' + std::to_string(p.k);
  row += ',' + format_double(p.r);
  row += ',' + format_double(p.delta);
  row += ',' + format_double(p.gamma_bar);
  row += ',' + format_double(r.epsilon);
  row += ',' + format_double(r.bound);
  row += ',';
  row += r.informative ? "true" : "false";
  return row;
}

}  // namespace dplp

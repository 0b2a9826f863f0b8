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

#include "dplp/latent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "gtest/gtest.h"
#include "testing/stats.hpp"

namespace dplp {
namespace {

TEST(UnitBallRadius, FrozenValues) {
  EXPECT_NEAR(unit_ball_radius(1), 0.5, 1e-12);
  EXPECT_NEAR(unit_ball_radius(2), 0.5641895835477563, 1e-12);  // 1/sqrt(pi)
  EXPECT_NEAR(unit_ball_radius(3), 0.6203504908994001, 1e-12);  // (3/4pi)^(1/3)
  EXPECT_THROW(unit_ball_radius(0), std::invalid_argument);
}

TEST(Omega, FullAndScaledBalls) {
  const double r2 = unit_ball_radius(2);
  EXPECT_NEAR(omega(2, r2), 1.0, 1e-12);
  EXPECT_NEAR(omega(2, r2 / 2), 0.25, 1e-12);
  const double r3 = unit_ball_radius(3) * std::cbrt(0.05);
  EXPECT_NEAR(omega(3, r3), 0.05, 1e-12);
  // Radii beyond the unit-volume ball clamp to 1.
  EXPECT_DOUBLE_EQ(omega(2, 10.0), 1.0);
  EXPECT_THROW(omega(2, 0.0), std::invalid_argument);
}

TEST(Omega, UnitBallIdentityAcrossDimensions) {
  for (int d = 1; d <= 10; ++d) {
    EXPECT_NEAR(omega(d, unit_ball_radius(d)), 1.0, 1e-12) << "D=" << d;
  }
}

TEST(OmegaInverse, RoundTrips) {
  for (int d : {1, 2, 3, 7}) {
    for (double vol : {0.01, 0.05, 0.5, 1.0}) {
      EXPECT_NEAR(omega(d, omega_inverse(d, vol)), vol, 1e-12);
    }
  }
  EXPECT_THROW(omega_inverse(2, 0.0), std::invalid_argument);
  EXPECT_THROW(omega_inverse(2, 1.5), std::invalid_argument);
}

TEST(Generate, EmptyAndCompleteLimits) {
  Rng rng(1);
  const auto empty = generate_latent_graph(0, 2, 0.1, rng);
  EXPECT_EQ(empty.graph.node_count(), 0);

  // r at least the ball diameter forces a complete graph.
  Rng rng2(2);
  const auto complete =
      generate_latent_graph(30, 2, 2.0 * unit_ball_radius(2) + 1e-9, rng2);
  EXPECT_EQ(complete.graph.edge_count(), 30 * 29 / 2);
}

TEST(Generate, EdgeRuleMatchesPairwiseDistances) {
  Rng rng(3);
  const auto inst = generate_latent_graph(40, 3, 0.4, rng);
  for (NodeId u = 0; u < 40; ++u) {
    for (NodeId v = u + 1; v < 40; ++v) {
      EXPECT_EQ(inst.graph.has_edge(u, v), inst.model.distance(u, v) < 0.4);
    }
  }
}

TEST(Generate, PositionsStayInsideBall) {
  Rng rng(4);
  const auto inst = generate_latent_graph(500, 4, 0.1, rng);
  const double limit = inst.model.ball_radius + 1e-12;
  for (NodeId u = 0; u < 500; ++u) {
    double norm = 0.0;
    for (double c : inst.model.position(u)) norm += c * c;
    EXPECT_LE(std::sqrt(norm), limit);
  }
}

// ||x||^D / R^D must be Uniform[0,1] for uniform ball samples.
TEST(Generate, RadialCdfIsUniform) {
  Rng rng(5);
  const int d = 3;
  const auto inst = generate_latent_graph(10000, d, 0.01, rng);
  std::vector<double> transformed;
  transformed.reserve(10000);
  for (NodeId u = 0; u < 10000; ++u) {
    double norm = 0.0;
    for (double c : inst.model.position(u)) norm += c * c;
    norm = std::sqrt(norm);
    transformed.push_back(std::pow(norm / inst.model.ball_radius, d));
  }
  EXPECT_GT(testing::ks_uniform_pvalue(std::move(transformed)), 0.01);
}

TEST(IdealRanking, CollinearPositions) {
  LatentModel m;
  m.dimension = 1;
  m.radius = 0.1;
  m.ball_radius = 4.0;
  m.positions = {0.0, 1.0, 2.0, 3.0};
  const std::vector<NodeId> pool = {1, 2, 3};
  EXPECT_EQ(ideal_ranking(m, 0, pool), (std::vector<NodeId>{1, 2, 3}));
  EXPECT_EQ(latent_distances(m, 0, pool), (std::vector<double>{1.0, 2.0, 3.0}));

  const std::vector<NodeId> singleton = {2};
  EXPECT_EQ(ideal_ranking(m, 0, singleton), singleton);
  EXPECT_TRUE(latent_distances(m, 0, {}).empty());
}

TEST(IdealRanking, MatchesBruteForceSort) {
  Rng rng(6);
  const auto inst = generate_latent_graph(60, 2, 0.2, rng);
  const NodeId u = 17;
  std::vector<NodeId> pool;
  for (NodeId v = 0; v < 60; ++v) {
    if (v != u) pool.push_back(v);
  }
  const auto ranked = ideal_ranking(inst.model, u, pool);

  std::vector<std::pair<double, NodeId>> brute;
  for (NodeId v : pool) brute.emplace_back(inst.model.distance(u, v), v);
  std::sort(brute.begin(), brute.end());
  for (std::size_t i = 0; i < brute.size(); ++i) {
    EXPECT_EQ(ranked[i], brute[i].second);
  }
  EXPECT_THROW(ideal_ranking(inst.model, u, std::vector<NodeId>{u}),
               std::invalid_argument);
}

TEST(LatentDistances, RecomputationOracle) {
  Rng rng(7);
  const auto inst = generate_latent_graph(30, 5, 0.2, rng);
  const std::vector<NodeId> items = {4, 9, 1, 22};
  const auto distances = latent_distances(inst.model, 3, items);
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto a = inst.model.position(3);
    const auto b = inst.model.position(items[i]);
    double sum = 0.0;
    for (int d = 0; d < 5; ++d) {
      sum += (a[static_cast<std::size_t>(d)] - b[static_cast<std::size_t>(d)]) *
             (a[static_cast<std::size_t>(d)] - b[static_cast<std::size_t>(d)]);
    }
    EXPECT_NEAR(distances[i], std::sqrt(sum), 1e-12);
  }
}

TEST(PositionsCsv, HeaderAndRowCount) {
  Rng rng(8);
  const auto inst = generate_latent_graph(5, 2, 0.3, rng);
  std::ostringstream out;
  write_positions_csv(inst.model, out);
  const std::string text = out.str();
  EXPECT_EQ(text.substr(0, 13), "node,x_1,x_2\n");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 6);
}

// Reference points for the hand-rolled test statistics, pinned against
// published table values.
TEST(StatsHelpers, ReferenceValues) {
  EXPECT_NEAR(testing::chi_square_pvalue(11.07, 5), 0.05000961862, 1e-9);
  EXPECT_NEAR(testing::chi_square_pvalue(3.841, 1), 0.05001368376, 1e-9);
  EXPECT_NEAR(testing::chi_square_pvalue(2.0, 5), 0.84914503608, 1e-9);
  EXPECT_NEAR(testing::spearman_rho({1, 2, 3, 4}, {1, 2, 4, 3}), 0.8, 1e-12);
  EXPECT_NEAR(testing::spearman_rho({1, 2, 3, 4}, {8, 6, 4, 2}), -1.0, 1e-12);
}

TEST(Generate, GraphInvariantsHold) {
  Rng rng(9);
  const auto inst = generate_latent_graph(100, 2, 0.15, rng);
  std::int64_t degree_sum = 0;
  for (NodeId u = 0; u < 100; ++u) {
    const auto nbrs = inst.graph.neighbors(u);
    EXPECT_TRUE(std::is_sorted(nbrs.begin(), nbrs.end()));
    for (NodeId v : nbrs) {
      EXPECT_TRUE(inst.graph.has_edge(v, u));
      EXPECT_NE(v, u);
    }
    degree_sum += inst.graph.degree(u);
  }
  EXPECT_EQ(inst.graph.edge_count(), degree_sum / 2);
}

}  // namespace
}  // namespace dplp

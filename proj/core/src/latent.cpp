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
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "dplp/format.hpp"

namespace dplp {

namespace {

void check_dimension(int dimension) {
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
}

// ln C_D with C_D = pi^(D/2) / Gamma(D/2 + 1), the unit-radius D-ball volume.
double log_unit_volume_constant(int dimension) {
  const double half = static_cast<double>(dimension) / 2.0;
  return half * std::log(std::numbers::pi) - std::lgamma(half + 1.0);
}

}  // namespace

double unit_ball_radius(int dimension) {
  check_dimension(dimension);
  return std::exp(-log_unit_volume_constant(dimension) /
                  static_cast<double>(dimension));
}

double omega(int dimension, double r) {
  check_dimension(dimension);
  if (!(r > 0)) throw std::invalid_argument("radius must be positive");
  const double volume = std::exp(log_unit_volume_constant(dimension) +
                                 static_cast<double>(dimension) * std::log(r));
  return std::min(volume, 1.0);
}

double omega_inverse(int dimension, double volume) {
  check_dimension(dimension);
  if (!(volume > 0) || !(volume <= 1)) {
    throw std::invalid_argument("volume must lie in (0, 1]");
  }
  return unit_ball_radius(dimension) *
         std::pow(volume, 1.0 / static_cast<double>(dimension));
}

std::span<const double> LatentModel::position(NodeId u) const {
  if (u < 0 || u >= node_count()) {
    throw std::invalid_argument("node id out of range");
  }
  return {positions.data() +
              static_cast<std::size_t>(u) * static_cast<std::size_t>(dimension),
          static_cast<std::size_t>(dimension)};
}

double LatentModel::distance(NodeId u, NodeId v) const {
  const auto xu = position(u);
  const auto xv = position(v);
  double sum = 0.0;
  for (int d = 0; d < dimension; ++d) {
    const double diff = xu[static_cast<std::size_t>(d)] -
                        xv[static_cast<std::size_t>(d)];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

LatentInstance generate_latent_graph(NodeId n, int dimension, double r,
                                     Rng& rng) {
  check_dimension(dimension);
  if (n < 0) throw std::invalid_argument("negative node count");
  if (!(r > 0)) throw std::invalid_argument("radius must be positive");

  LatentInstance out;
  out.model.dimension = dimension;
  out.model.radius = r;
  out.model.ball_radius = unit_ball_radius(dimension);
  out.model.positions.resize(static_cast<std::size_t>(n) *
                             static_cast<std::size_t>(dimension));

  std::vector<double> direction(static_cast<std::size_t>(dimension));
  for (NodeId u = 0; u < n; ++u) {
    // Uniform direction from normalized gaussians; degenerate all-zero draws
    // are retried (probability 0 in exact arithmetic).
    double norm = 0.0;
    do {
      norm = 0.0;
      for (auto& coord : direction) {
        coord = rng.gaussian(1.0);
        norm += coord * coord;
      }
      norm = std::sqrt(norm);
    } while (norm == 0.0);
    const double radius =
        out.model.ball_radius *
        std::pow(rng.next_unit(), 1.0 / static_cast<double>(dimension));
    for (int d = 0; d < dimension; ++d) {
      out.model.positions[static_cast<std::size_t>(u) *
                              static_cast<std::size_t>(dimension) +
                          static_cast<std::size_t>(d)] =
          radius * direction[static_cast<std::size_t>(d)] / norm;
    }
  }

  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (out.model.distance(u, v) < r) edges.emplace_back(u, v);
    }
  }
  out.graph = Graph::from_edges(n, std::move(edges));
  return out;
}

std::vector<NodeId> ideal_ranking(const LatentModel& m, NodeId u,
                                  std::span<const NodeId> pool) {
  std::vector<std::pair<double, NodeId>> keyed;
  keyed.reserve(pool.size());
  for (NodeId v : pool) {
    if (v == u) throw std::invalid_argument("pool must exclude the query");
    keyed.emplace_back(m.distance(u, v), v);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<NodeId> out;
  out.reserve(keyed.size());
  for (const auto& [d, v] : keyed) out.push_back(v);
  return out;
}

std::vector<double> latent_distances(const LatentModel& m, NodeId u,
                                     std::span<const NodeId> items) {
  std::vector<double> out;
  out.reserve(items.size());
  for (NodeId v : items) out.push_back(m.distance(u, v));
  return out;
}

void write_positions_csv(const LatentModel& m, std::ostream& out) {
  out << "node";
  for (int d = 1; d <= m.dimension; ++d) out << ",x_" << d;
  out << '\n';
  for (NodeId u = 0; u < m.node_count(); ++u) {
    out << u;
    for (double coord : m.position(u)) out << ',' << format_double(coord);
    out << '\n';
  }
}

}  // namespace dplp

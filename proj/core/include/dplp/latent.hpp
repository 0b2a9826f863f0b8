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

#ifndef DPLP_LATENT_HPP_
#define DPLP_LATENT_HPP_

#include <iosfwd>
#include <span>
#include <vector>

#include "dplp/graph.hpp"
#include "dplp/random.hpp"

namespace dplp {

// Radius of the D-dimensional ball with unit volume:
// R_D = Gamma(D/2 + 1)^(1/D) / sqrt(pi).
double unit_ball_radius(int dimension);

// Volume of the radius-r D-ball, clamped to 1 for r beyond the unit-volume
// radius. Requires r > 0.
double omega(int dimension, double r);

// Inverse of omega on (0, 1]: the radius whose D-ball has the given volume.
double omega_inverse(int dimension, double volume);

// Latent positions in the unit-volume D-ball plus the connection radius.
// Nodes u, v are adjacent in the generated graph iff ||x_u - x_v|| < r.
struct LatentModel {
  int dimension = 0;
  double radius = 0.0;       // connection radius r
  double ball_radius = 0.0;  // R_D
  std::vector<double> positions;  // node-major, dimension entries per node

  NodeId node_count() const {
    return dimension == 0
               ? 0
               : static_cast<NodeId>(positions.size() /
                                     static_cast<std::size_t>(dimension));
  }
  std::span<const double> position(NodeId u) const;
  double distance(NodeId u, NodeId v) const;
};

struct LatentInstance {
  LatentModel model;
  Graph graph;
};

// Samples n positions uniformly in the unit-volume D-ball (uniform direction,
// radius R_D * U^(1/D)) and connects every pair closer than r.
LatentInstance generate_latent_graph(NodeId n, int dimension, double r,
                                     Rng& rng);

// Pool sorted by ascending latent distance from u, ties by node id.
std::vector<NodeId> ideal_ranking(const LatentModel& m, NodeId u,
                                  std::span<const NodeId> pool);

// Euclidean distances from u to the listed nodes, in list order.
std::vector<double> latent_distances(const LatentModel& m, NodeId u,
                                     std::span<const NodeId> items);

// "node,x_1,...,x_D" rows with a header line.
void write_positions_csv(const LatentModel& m, std::ostream& out);

}  // namespace dplp

#endif  // DPLP_LATENT_HPP_

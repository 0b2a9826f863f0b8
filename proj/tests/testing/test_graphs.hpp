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

#ifndef DPLP_TESTS_TESTING_TEST_GRAPHS_HPP_
#define DPLP_TESTS_TESTING_TEST_GRAPHS_HPP_

#include <utility>
#include <vector>

#include "dplp/graph.hpp"
#include "dplp/random.hpp"

namespace dplp::testing {

// The worked four-node example: triangle 0-1-2 plus pendant edge 2-3.
inline Graph g0() {
  return Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
}

inline Graph path(NodeId n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return Graph::from_edges(n, std::move(edges));
}

inline Graph complete(NodeId n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, std::move(edges));
}

inline Graph erdos_renyi(NodeId n, double p, Rng& rng) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (rng.next_unit() < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace dplp::testing

#endif  // DPLP_TESTS_TESTING_TEST_GRAPHS_HPP_

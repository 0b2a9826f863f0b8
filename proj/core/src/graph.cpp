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

#include "dplp/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "dplp/error.hpp"

namespace dplp {

namespace {

std::pair<NodeId, NodeId> ordered(NodeId a, NodeId b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

}  // namespace

void Graph::check_node(NodeId u) const {
  if (u < 0 || u >= node_count()) {
    throw std::invalid_argument("node id " + std::to_string(u) +
                                " out of range [0, " +
                                std::to_string(node_count()) + ")");
  }
}

Graph Graph::from_edges(NodeId node_count,
                        std::vector<std::pair<NodeId, NodeId>> edges) {
  if (node_count < 0) throw std::invalid_argument("negative node count");
  Graph g;
  g.offsets_.assign(static_cast<std::size_t>(node_count) + 1, 0);

  for (auto& [a, b] : edges) {
    if (a < 0 || a >= node_count || b < 0 || b >= node_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (a == b) throw std::invalid_argument("self-loop in edge list");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("duplicate edge in edge list");
  }

  for (const auto& [a, b] : edges) {
    ++g.offsets_[static_cast<std::size_t>(a) + 1];
    ++g.offsets_[static_cast<std::size_t>(b) + 1];
  }
  for (std::size_t i = 1; i < g.offsets_.size(); ++i) {
    g.offsets_[i] += g.offsets_[i - 1];
  }
  g.adjacency_.resize(static_cast<std::size_t>(g.offsets_.back()));
  std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [a, b] : edges) {
    g.adjacency_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(a)]++)] = b;
    g.adjacency_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(b)]++)] = a;
  }
  // Entries land in a row in edge-iteration order, which is not sorted
  // per row; each row still needs its own sort.
  for (NodeId u = 0; u < node_count; ++u) {
    auto begin = g.adjacency_.begin() + g.offsets_[static_cast<std::size_t>(u)];
    auto end = g.adjacency_.begin() + g.offsets_[static_cast<std::size_t>(u) + 1];
    std::sort(begin, end);
  }
  g.edge_count_ = static_cast<std::int64_t>(edges.size());
  return g;
}

std::span<const NodeId> Graph::neighbors(NodeId u) const {
  check_node(u);
  const auto begin = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(u)]);
  const auto end = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(u) + 1]);
  return {adjacency_.data() + begin, end - begin};
}

NodeId Graph::degree(NodeId u) const {
  check_node(u);
  return offsets_[static_cast<std::size_t>(u) + 1] -
         offsets_[static_cast<std::size_t>(u)];
}

std::vector<NodeId> Graph::non_neighbors(NodeId u) const {
  const auto nbrs = neighbors(u);
  std::vector<NodeId> out;
  out.reserve(static_cast<std::size_t>(node_count()));
  std::size_t i = 0;
  for (NodeId v = 0; v < node_count(); ++v) {
    while (i < nbrs.size() && nbrs[i] < v) ++i;
    if (v == u || (i < nbrs.size() && nbrs[i] == v)) continue;
    out.push_back(v);
  }
  return out;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  if (u == v) return false;
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool Graph::has_triangle(NodeId u) const {
  const auto nbrs = neighbors(u);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    const auto wi = neighbors(nbrs[i]);
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (std::binary_search(wi.begin(), wi.end(), nbrs[j])) return true;
    }
  }
  return false;
}

Graph Graph::apply_perturbation(const EdgePerturbation& p) const {
  check_node(p.u);
  check_node(p.v);
  if (p.u == p.v) throw std::invalid_argument("perturbation endpoints equal");
  const bool present = has_edge(p.u, p.v);
  if (p.kind == PerturbationKind::kAdd && present) {
    throw std::invalid_argument("Add of existing edge");
  }
  if (p.kind == PerturbationKind::kRemove && !present) {
    throw std::invalid_argument("Remove of absent edge");
  }

  Graph out;
  const NodeId n = node_count();
  out.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  const std::int64_t delta = p.kind == PerturbationKind::kAdd ? 1 : -1;
  out.adjacency_.resize(adjacency_.size() + static_cast<std::size_t>(2 * delta));
  std::int64_t pos = 0;
  for (NodeId u = 0; u < n; ++u) {
    const auto row = neighbors(u);
    const bool touched = u == p.u || u == p.v;
    const NodeId other = u == p.u ? p.v : p.u;
    if (!touched) {
      std::copy(row.begin(), row.end(), out.adjacency_.begin() + pos);
      pos += static_cast<std::int64_t>(row.size());
    } else if (p.kind == PerturbationKind::kRemove) {
      for (NodeId w : row) {
        if (w != other) out.adjacency_[static_cast<std::size_t>(pos++)] = w;
      }
    } else {
      bool inserted = false;
      for (NodeId w : row) {
        if (!inserted && other < w) {
          out.adjacency_[static_cast<std::size_t>(pos++)] = other;
          inserted = true;
        }
        out.adjacency_[static_cast<std::size_t>(pos++)] = w;
      }
      if (!inserted) out.adjacency_[static_cast<std::size_t>(pos++)] = other;
    }
    out.offsets_[static_cast<std::size_t>(u) + 1] = pos;
  }
  out.edge_count_ = edge_count_ + delta;
  return out;
}

Graph Graph::remove_edges_at(NodeId center,
                             std::span<const NodeId> others) const {
  check_node(center);
  if (!std::is_sorted(others.begin(), others.end())) {
    throw std::invalid_argument("removal list must be sorted");
  }
  for (NodeId v : others) {
    if (!has_edge(center, v)) {
      throw std::invalid_argument("Remove of absent edge");
    }
  }
  if (others.empty()) return *this;

  Graph out;
  const NodeId n = node_count();
  out.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  out.adjacency_.resize(adjacency_.size() - 2 * others.size());
  std::int64_t pos = 0;
  for (NodeId u = 0; u < n; ++u) {
    const auto row = neighbors(u);
    if (u == center) {
      for (NodeId w : row) {
        if (!std::binary_search(others.begin(), others.end(), w)) {
          out.adjacency_[static_cast<std::size_t>(pos++)] = w;
        }
      }
    } else if (std::binary_search(others.begin(), others.end(), u)) {
      for (NodeId w : row) {
        if (w != center) out.adjacency_[static_cast<std::size_t>(pos++)] = w;
      }
    } else {
      std::copy(row.begin(), row.end(), out.adjacency_.begin() + pos);
      pos += static_cast<std::int64_t>(row.size());
    }
    out.offsets_[static_cast<std::size_t>(u) + 1] = pos;
  }
  out.edge_count_ = edge_count_ - static_cast<std::int64_t>(others.size());
  return out;
}

void Graph::write_edge_list(std::ostream& out) const {
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out << u << ' ' << v << '\n';
    }
  }
}

std::uint64_t Graph::adjacency_hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  feed(static_cast<std::uint64_t>(node_count()));
  for (auto o : offsets_) feed(static_cast<std::uint64_t>(o));
  for (auto v : adjacency_) feed(static_cast<std::uint64_t>(v));
  return h;
}

EdgeListData load_edge_list(std::istream& in) {
  std::set<std::int64_t> label_set;
  std::set<std::pair<std::int64_t, std::int64_t>> edge_set;
  EdgeListData data;

  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;

    std::istringstream fields(line.substr(start));
    std::int64_t a = 0, b = 0;
    if (!(fields >> a >> b)) {
      throw ParseError("expected two integer node ids", line_number);
    }
    std::string rest;
    if (fields >> rest) {
      throw ParseError("trailing token '" + rest + "'", line_number);
    }
    if (a < 0 || b < 0) {
      throw ParseError("negative node id", line_number);
    }
    label_set.insert(a);
    label_set.insert(b);
    if (a == b) {
      ++data.self_loops_dropped;
      continue;
    }
    if (!edge_set.insert(ordered(a, b)).second) {
      ++data.duplicate_edges_dropped;
    }
  }

  data.labels.assign(label_set.begin(), label_set.end());
  data.label_to_id.reserve(data.labels.size());
  for (std::size_t i = 0; i < data.labels.size(); ++i) {
    data.label_to_id.emplace(data.labels[i], static_cast<NodeId>(i));
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(edge_set.size());
  for (const auto& [a, b] : edge_set) {
    edges.emplace_back(data.label_to_id.at(a), data.label_to_id.at(b));
  }
  data.graph = Graph::from_edges(static_cast<NodeId>(data.labels.size()),
                                 std::move(edges));
  return data;
}

std::vector<EdgePerturbation> enumerate_perturbations(const Graph& g) {
  std::vector<EdgePerturbation> out;
  const NodeId n = g.node_count();
  out.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      out.push_back({u, v,
                     g.has_edge(u, v) ? PerturbationKind::kRemove
                                      : PerturbationKind::kAdd});
    }
  }
  return out;
}

}  // namespace dplp

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

#ifndef DPLP_GRAPH_HPP_
#define DPLP_GRAPH_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dplp {

using NodeId = std::int64_t;

enum class PerturbationKind { kAdd, kRemove };

// A single-edge difference between two graphs on the same node set.
// Add requires (u, v) absent, Remove requires it present; u != v.
struct EdgePerturbation {
  NodeId u = 0;
  NodeId v = 0;
  PerturbationKind kind = PerturbationKind::kAdd;
};

// Immutable undirected simple graph in compressed-row layout.
// Neighbor lists are strictly sorted; adjacency is symmetric; no self-loops.
// Safe to share across concurrent readers after construction.
class Graph {
 public:
  Graph() = default;

  // Builds from an explicit node count and edge list. Edges may appear in
  // either orientation but must be valid: in range, no self-loops, no
  // duplicates (throws std::invalid_argument otherwise).
  static Graph from_edges(NodeId node_count,
                          std::vector<std::pair<NodeId, NodeId>> edges);

  NodeId node_count() const {
    return static_cast<NodeId>(offsets_.empty() ? 0 : offsets_.size() - 1);
  }
  std::int64_t edge_count() const { return edge_count_; }

  std::span<const NodeId> neighbors(NodeId u) const;
  NodeId degree(NodeId u) const;

  // V \ ({u} ∪ N(u)), ascending.
  std::vector<NodeId> non_neighbors(NodeId u) const;

  bool has_edge(NodeId u, NodeId v) const;

  // True iff some pair of neighbors of u is itself connected.
  bool has_triangle(NodeId u) const;

  // Value-semantics single-edge perturbation; *this is left untouched.
  Graph apply_perturbation(const EdgePerturbation& p) const;

  // New graph with every edge (center, v) for v in others removed.
  // others must be sorted, and every listed edge must exist.
  Graph remove_edges_at(NodeId center, std::span<const NodeId> others) const;

  // Edges as "u v" lines with compact ids, u < v, ascending.
  void write_edge_list(std::ostream& out) const;

  // FNV-1a over the adjacency structure; used to detect accidental mutation.
  std::uint64_t adjacency_hash() const;

 private:
  void check_node(NodeId u) const;

  std::vector<std::int64_t> offsets_;  // size node_count + 1
  std::vector<NodeId> adjacency_;
  std::int64_t edge_count_ = 0;
};

// Result of parsing an edge-list stream. Node labels found in the file are
// compacted to 0..n-1 in ascending label order; `labels` maps back.
struct EdgeListData {
  Graph graph;
  std::vector<std::int64_t> labels;                    // compact id -> label
  std::unordered_map<std::int64_t, NodeId> label_to_id;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicate_edges_dropped = 0;
};

// Parses "u v" lines; '#' comment lines and blank lines are ignored.
// Self-loops and duplicate edges are dropped and counted, not fatal.
// Malformed lines raise ParseError with the line number.
EdgeListData load_edge_list(std::istream& in);

// Every unordered node pair contributes exactly one perturbation:
// Remove if the edge exists, Add otherwise. C(n, 2) entries.
std::vector<EdgePerturbation> enumerate_perturbations(const Graph& g);

}  // namespace dplp

#endif  // DPLP_GRAPH_HPP_

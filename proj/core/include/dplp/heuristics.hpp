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

#ifndef DPLP_HEURISTICS_HPP_
#define DPLP_HEURISTICS_HPP_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dplp/graph.hpp"

namespace dplp {

enum class Heuristic { kCommonNeighbors, kJaccard, kAdamicAdar, kExternal };

std::string_view heuristic_name(Heuristic h);
std::optional<Heuristic> heuristic_from_name(std::string_view name);

// Worst-case change of a score under a single-edge perturbation.
inline constexpr double kSensitivityCommonNeighbors = 1.0;
inline constexpr double kSensitivityJaccard = 1.0;
inline constexpr double kSensitivityAdamicAdar = 1.0 / std::numbers::ln2;

// |N(u) ∩ N(v)|
double score_cn(const Graph& g, NodeId u, NodeId v);

// |N(u) ∩ N(v)| / |N(u) ∪ N(v)|, with 0 for an empty union.
double score_jc(const Graph& g, NodeId u, NodeId v);

// Σ over common neighbors w of 1 / ln|N(w)|. Common neighbors always have
// degree >= 2, so every term is finite.
double score_aa(const Graph& g, NodeId u, NodeId v);

struct ScoreEntry {
  NodeId node = 0;
  double score = 0.0;
};

// Scores of one query node against a candidate pool, in pool order.
struct ScoredCandidates {
  NodeId query = 0;
  std::vector<ScoreEntry> entries;
};

// Unordered-pair score table for externally computed link predictors.
using ExternalScoreTable = std::unordered_map<std::uint64_t, double>;

std::uint64_t external_pair_key(NodeId u, NodeId v);

// A link-prediction scoring rule bundled with its sensitivity constant.
// Immutable and cheap to copy; external tables are shared.
class ScoreFunction {
 public:
  static ScoreFunction common_neighbors();
  static ScoreFunction jaccard();
  static ScoreFunction adamic_adar();
  // Table keys are compact node ids; sensitivity must be > 0 and every
  // score >= 0 (validated here).
  static ScoreFunction external(ExternalScoreTable table, double sensitivity);

  Heuristic kind() const { return kind_; }
  double sensitivity() const { return sensitivity_; }
  std::string_view name() const { return heuristic_name(kind_); }

  double score(const Graph& g, NodeId u, NodeId v) const;

  // One entry per pool member. Unless check_pool is false, the pool must be
  // a subset of V \ ({u} ∪ N(u)).
  ScoredCandidates score_all(const Graph& g, NodeId u,
                             std::span<const NodeId> pool,
                             bool check_pool = true) const;

 private:
  ScoreFunction(Heuristic kind, double sensitivity)
      : kind_(kind), sensitivity_(sensitivity) {}

  Heuristic kind_;
  double sensitivity_;
  std::shared_ptr<const ExternalScoreTable> table_;
};

// Parses "u v score" lines ('#' comments allowed) with node ids in the
// original label space of the loaded graph; scores must be >= 0 and a pair
// may not repeat with a different value. Pairs involving labels absent from
// the graph are ignored. Missing pairs score 0 at lookup time.
ScoreFunction load_external_scores(
    std::istream& in, double sensitivity,
    const std::unordered_map<std::int64_t, NodeId>& label_to_id);

}  // namespace dplp

#endif  // DPLP_HEURISTICS_HPP_

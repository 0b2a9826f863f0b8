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

#include <benchmark/benchmark.h>

#include "dplp/audit.hpp"
#include "dplp/eval.hpp"
#include "dplp/heuristics.hpp"
#include "dplp/latent.hpp"
#include "dplp/mechanisms.hpp"
#include "dplp/random.hpp"

namespace {

using namespace dplp;

const LatentInstance& shared_instance() {
  static const LatentInstance inst = [] {
    Rng rng(7);
    return generate_latent_graph(1000, 2, omega_inverse(2, 0.05), rng);
  }();
  return inst;
}

void BM_ScorePool(benchmark::State& state) {
  const auto& inst = shared_instance();
  const ScoreFunction f = state.range(0) == 0
                              ? ScoreFunction::common_neighbors()
                              : (state.range(0) == 1
                                     ? ScoreFunction::jaccard()
                                     : ScoreFunction::adamic_adar());
  const auto pool = inst.graph.non_neighbors(17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.score_all(inst.graph, 17, pool));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(pool.size()));
}
BENCHMARK(BM_ScorePool)->Arg(0)->Arg(1)->Arg(2);

void BM_DplpSample(benchmark::State& state) {
  const auto& inst = shared_instance();
  const auto f = ScoreFunction::common_neighbors();
  const auto pool = inst.graph.non_neighbors(17);
  const auto sc = f.score_all(inst.graph, 17, pool);
  DpConfig cfg;
  cfg.mechanism = Mechanism::kDplp;
  cfg.epsilon_p = 0.1;
  cfg.k = static_cast<int>(state.range(0));
  Rng rng(11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dplp_sample(sc, cfg, f.sensitivity(), rng));
  }
}
BENCHMARK(BM_DplpSample)->Arg(1)->Arg(10)->Arg(50);

void BM_GaussianTopk(benchmark::State& state) {
  const auto& inst = shared_instance();
  const auto f = ScoreFunction::common_neighbors();
  const auto pool = inst.graph.non_neighbors(17);
  const auto sc = f.score_all(inst.graph, 17, pool);
  DpConfig cfg;
  cfg.mechanism = Mechanism::kGaussian;
  cfg.epsilon_p = 0.1;
  cfg.k = 10;
  Rng rng(11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gaussian_topk(sc, cfg, f.sensitivity(), rng));
  }
}
BENCHMARK(BM_GaussianTopk);

void BM_GenerateLatentGraph(benchmark::State& state) {
  const auto n = static_cast<NodeId>(state.range(0));
  Rng rng(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        generate_latent_graph(n, 2, omega_inverse(2, 0.05), rng));
  }
}
BENCHMARK(BM_GenerateLatentGraph)->Arg(250)->Arg(1000);

void BM_AuditExactQuery(benchmark::State& state) {
  Rng graph_rng(5);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < 7; ++u) {
    for (NodeId v = u + 1; v < 7; ++v) {
      if (graph_rng.next_unit() < 0.5) edges.emplace_back(u, v);
    }
  }
  const Graph g = Graph::from_edges(7, std::move(edges));
  DpConfig cfg;
  cfg.mechanism = Mechanism::kDplp;
  cfg.epsilon_p = 0.3;
  cfg.k = 2;
  const auto f = ScoreFunction::adamic_adar();
  for (auto _ : state) {
    benchmark::DoNotOptimize(audit_exact(g, f, cfg, 0));
  }
}
BENCHMARK(BM_AuditExactQuery);

void BM_SplitForQuery(benchmark::State& state) {
  const auto& inst = shared_instance();
  SplitSpec spec;
  spec.seed = 21;
  int trial = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(split_for_query(inst.graph, 17, spec, trial++));
  }
}
BENCHMARK(BM_SplitForQuery);

}  // namespace

BENCHMARK_MAIN();

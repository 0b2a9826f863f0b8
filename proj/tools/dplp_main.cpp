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

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dplp/audit.hpp"
#include "dplp/error.hpp"
#include "dplp/eval.hpp"
#include "dplp/format.hpp"
#include "dplp/graph.hpp"
#include "dplp/heuristics.hpp"
#include "dplp/latent.hpp"
#include "dplp/mechanisms.hpp"
#include "dplp/metrics.hpp"
#include "dplp/parallel.hpp"
#include "dplp/random.hpp"
#include "dplp/version.hpp"

namespace {

using namespace dplp;

constexpr std::uint64_t kRecommendStream = 0x11;
constexpr std::uint64_t kLatentStream = 0x21;
constexpr std::uint64_t kLatentMechanismStream = 0x22;
constexpr std::uint64_t kLatentGammaStream = 0x23;
constexpr std::uint64_t kAuditStream = 0x31;

void print_repro_header(std::uint64_t seed, int argc, char** argv) {
  std::string cmd;
  for (int i = 0; i < argc; ++i) {
    if (i) cmd += ' ';
    cmd += argv[i];
  }
  std::cerr << "# seed=" << seed << " cmd=" << cmd << " version=" << kVersion
            << "\n";
}

EdgeListData load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  EdgeListData data = load_edge_list(in);
  if (data.self_loops_dropped > 0 || data.duplicate_edges_dropped > 0) {
    std::cerr << "# dropped " << data.self_loops_dropped << " self-loops, "
              << data.duplicate_edges_dropped << " duplicate edges from "
              << path << "\n";
  }
  std::cerr << "# loaded " << path << ": |V|=" << data.graph.node_count()
            << " |E|=" << data.graph.edge_count() << "\n";
  return data;
}

Heuristic parse_heuristic(const std::string& name) {
  const auto h = heuristic_from_name(name);
  if (!h) throw std::invalid_argument("unknown heuristic: " + name);
  return *h;
}

Mechanism parse_mechanism(const std::string& name) {
  const auto m = mechanism_from_name(name);
  if (!m) throw std::invalid_argument("unknown mechanism: " + name);
  return *m;
}

ScoreFunction make_score_function(const EdgeListData& data,
                                  const std::string& heuristic,
                                  const std::string& scores_path,
                                  double sensitivity) {
  switch (parse_heuristic(heuristic)) {
    case Heuristic::kCommonNeighbors:
      return ScoreFunction::common_neighbors();
    case Heuristic::kJaccard:
      return ScoreFunction::jaccard();
    case Heuristic::kAdamicAdar:
      return ScoreFunction::adamic_adar();
    case Heuristic::kExternal: {
      if (scores_path.empty()) {
        throw std::invalid_argument("external heuristic needs --scores");
      }
      std::ifstream in(scores_path);
      if (!in) {
        throw std::invalid_argument("cannot open score file: " + scores_path);
      }
      return load_external_scores(in, sensitivity, data.label_to_id);
    }
  }
  throw std::invalid_argument("unknown heuristic: " + heuristic);
}

void write_output(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << body;
}

NodeId resolve_query_label(const EdgeListData& data, std::int64_t label) {
  const auto it = data.label_to_id.find(label);
  if (it == data.label_to_id.end()) {
    throw std::invalid_argument("query label " + std::to_string(label) +
                                " not present in the graph");
  }
  return it->second;
}

struct LatentSimOptions {
  NodeId n = 500;
  int dim = 2;
  double omega_target = 0.0;  // one of omega/radius is set
  double radius = 0.0;
  std::string heuristic = "cn";
  std::string mechanism = "dplp";
  std::vector<double> epsilons;
  int k = 5;
  double delta = 0.01;
  int trials = 10;
  std::int64_t max_queries = 0;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string out;
  std::string positions_out;
};

std::string latent_sim_csv(const LatentSimOptions& opt) {
  if (opt.epsilons.empty()) {
    throw std::invalid_argument("need at least one epsilon");
  }
  const double r = opt.radius > 0 ? opt.radius
                                  : omega_inverse(opt.dim, opt.omega_target);
  Rng gen_rng(derive_stream_seed(opt.seed, kLatentStream));
  const LatentInstance instance =
      generate_latent_graph(opt.n, opt.dim, r, gen_rng);
  if (!opt.positions_out.empty()) {
    std::ofstream pos_out(opt.positions_out, std::ios::binary);
    if (!pos_out) {
      throw std::runtime_error("cannot open positions file: " +
                               opt.positions_out);
    }
    write_positions_csv(instance.model, pos_out);
  }

  const Heuristic heuristic = parse_heuristic(opt.heuristic);
  if (heuristic == Heuristic::kExternal) {
    throw std::invalid_argument("latent-sim supports cn, jc, aa only");
  }
  ScoreFunction f = heuristic == Heuristic::kCommonNeighbors
                        ? ScoreFunction::common_neighbors()
                        : (heuristic == Heuristic::kJaccard
                               ? ScoreFunction::jaccard()
                               : ScoreFunction::adamic_adar());
  const Mechanism mechanism = parse_mechanism(opt.mechanism);

  std::vector<NodeId> queries;
  for (NodeId u = 0; u < instance.graph.node_count(); ++u) {
    if (static_cast<std::int64_t>(instance.graph.non_neighbors(u).size()) >=
        opt.k) {
      queries.push_back(u);
    }
    if (opt.max_queries > 0 &&
        static_cast<std::int64_t>(queries.size()) >= opt.max_queries) {
      break;
    }
  }
  if (queries.empty()) {
    throw std::invalid_argument("no queries with a large enough pool");
  }

  struct QueryCell {
    double rank_loss_sum = 0.0;
    double gamma = 0.0;
    double s_max = 0.0;
    bool tradeoff_ok = true;
  };
  // cells[e * queries + q]
  std::vector<QueryCell> cells(opt.epsilons.size() * queries.size());

  parallel_for(queries.size(), opt.threads, [&](std::size_t qi) {
    const NodeId q = queries[qi];
    const auto pool = instance.graph.non_neighbors(q);
    const auto sc = f.score_all(instance.graph, q, pool);
    const auto ideal = ideal_ranking(instance.model, q, pool);
    std::unordered_map<NodeId, int> ideal_rank;
    ideal_rank.reserve(ideal.size());
    for (std::size_t i = 0; i < ideal.size(); ++i) {
      ideal_rank.emplace(ideal[i], static_cast<int>(i + 1));
    }
    double s_max = 0.0;
    for (const auto& e : sc.entries) s_max = std::max(s_max, e.score);

    for (std::size_t ei = 0; ei < opt.epsilons.size(); ++ei) {
      DpConfig cfg;
      cfg.mechanism = mechanism;
      cfg.epsilon_p = opt.epsilons[ei];
      cfg.k = opt.k;
      cfg.seed = opt.seed;

      QueryCell& cell = cells[ei * queries.size() + qi];
      cell.s_max = s_max;

      Rng mech_rng(derive_stream_seed(opt.seed, kLatentMechanismStream,
                                      static_cast<std::uint64_t>(q), ei));
      for (int t = 0; t < opt.trials; ++t) {
        const Recommendation rec =
            run_mechanism(sc, cfg, f.sensitivity(), mech_rng);
        RankLossInput input;
        input.method_distances =
            latent_distances(instance.model, q, rec.items);
        input.ideal_positions.reserve(rec.items.size());
        for (NodeId item : rec.items) {
          input.ideal_positions.push_back(ideal_rank.at(item));
        }
        cell.rank_loss_sum += ranking_loss(input, opt.k);
      }

      Rng gamma_rng(derive_stream_seed(opt.seed, kLatentGammaStream,
                                       static_cast<std::uint64_t>(q), ei));
      cell.gamma = gamma_bar_empirical(instance.graph, f, cfg, q, opt.trials,
                                       gamma_rng);
      if (cell.gamma > 0 && s_max > 0) {
        cell.tradeoff_ok = tradeoff_check(cell.gamma, s_max, opt.k,
                                                 f.sensitivity(),
                                                 cfg.epsilon_p)
                               .holds;
      }
    }
  });

  std::string body =
      "heuristic,mechanism,n_nodes,D,K,r,omega,delta,epsilon_p,gamma_bar,"
      "epsilon,mean_rank_loss,bound,informative,tradeoff_holds,n_queries,"
      "trials,status\n";
  for (std::size_t ei = 0; ei < opt.epsilons.size(); ++ei) {
    double loss_sum = 0.0, gamma_sum = 0.0;
    bool tradeoff_all = true;
    for (std::size_t qi = 0; qi < queries.size(); ++qi) {
      const QueryCell& cell = cells[ei * queries.size() + qi];
      loss_sum += cell.rank_loss_sum;
      gamma_sum += cell.gamma;
      tradeoff_all = tradeoff_all && cell.tradeoff_ok;
    }
    const double mean_loss =
        loss_sum / (static_cast<double>(queries.size()) *
                    static_cast<double>(opt.trials));
    const double mean_gamma = gamma_sum / static_cast<double>(queries.size());

    BoundParams params;
    params.n_nodes = instance.graph.node_count();
    params.dimension = opt.dim;
    params.k = opt.k;
    params.r = r;
    params.delta = opt.delta;
    params.gamma_bar = std::max(mean_gamma, 0.0);
    params.heuristic = heuristic;

    std::string status = "ok";
    std::string bound_text, eps_text, informative_text;
    try {
      const BoundResult bound = rank_loss_bound(params);
      bound_text = format_double(bound.bound);
      eps_text = format_double(bound.epsilon);
      informative_text = bound.informative ? "true" : "false";
    } catch (const std::invalid_argument& e) {
      status = std::string("skipped: ") + e.what();
      bound_text = eps_text = informative_text = "";
    }

    std::ostringstream row;
    row << heuristic_name(heuristic) << ',' << mechanism_name(mechanism) << ','
        << instance.graph.node_count() << ',' << opt.dim << ',' << opt.k << ','
        << format_double(r) << ',' << format_double(omega(opt.dim, r)) << ','
        << format_double(opt.delta) << ',' << format_double(opt.epsilons[ei])
        << ',' << format_double(mean_gamma) << ',' << eps_text << ','
        << format_double(mean_loss) << ',' << bound_text << ','
        << informative_text << ',' << (tradeoff_all ? "true" : "false") << ','
        << queries.size() << ',' << opt.trials << ',' << status << '\n';
    body += row.str();
  }
  return body;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differentially private top-K link prediction toolkit"};
  app.require_subcommand(1);

  // recommend ---------------------------------------------------------------
  auto* rec_cmd =
      app.add_subcommand("recommend", "Top-K recommendation for one query");
  std::string rec_graph, rec_heuristic = "cn", rec_mechanism = "dplp";
  std::string rec_scores;
  double rec_sensitivity = 1.0, rec_epsilon = 0.1, rec_delta_p = 1e-5;
  int rec_k = 10;
  std::int64_t rec_query = 0;
  std::uint64_t rec_seed = 0;
  rec_cmd->add_option("--graph", rec_graph, "edge-list file")->required();
  rec_cmd->add_option("--heuristic", rec_heuristic, "cn|jc|aa|external");
  rec_cmd->add_option("--scores", rec_scores, "external score file");
  rec_cmd->add_option("--sensitivity", rec_sensitivity,
                      "sensitivity of external scores");
  rec_cmd->add_option("--mechanism", rec_mechanism,
                      "dplp|laplace|gaussian|exponential|nonprivate");
  rec_cmd->add_option("--epsilon", rec_epsilon, "privacy budget epsilon_p");
  rec_cmd->add_option("--k", rec_k, "list length");
  rec_cmd->add_option("--query", rec_query, "query node label")->required();
  rec_cmd->add_option("--seed", rec_seed, "master seed");
  rec_cmd->add_option("--delta-p", rec_delta_p, "gaussian delta_p");

  // evaluate ----------------------------------------------------------------
  auto* eval_cmd =
      app.add_subcommand("evaluate", "Held-out expected MAP for one cell");
  std::string ev_graph, ev_heuristic = "cn", ev_mechanism = "dplp", ev_out;
  double ev_epsilon = 0.1, ev_keep = 0.85, ev_delta_p = 1e-5;
  int ev_k = 10, ev_trials = 10, ev_threads = 0;
  std::uint64_t ev_seed = 0;
  eval_cmd->add_option("--graph", ev_graph, "edge-list file")->required();
  eval_cmd->add_option("--heuristic", ev_heuristic, "cn|jc|aa");
  eval_cmd->add_option("--mechanism", ev_mechanism,
                       "dplp|laplace|gaussian|exponential|nonprivate");
  eval_cmd->add_option("--epsilon", ev_epsilon, "privacy budget epsilon_p");
  eval_cmd->add_option("--k", ev_k, "list length");
  eval_cmd->add_option("--trials", ev_trials, "randomization trials");
  eval_cmd->add_option("--keep-fraction", ev_keep, "visible fraction");
  eval_cmd->add_option("--delta-p", ev_delta_p, "gaussian delta_p");
  eval_cmd->add_option("--seed", ev_seed, "master seed");
  eval_cmd->add_option("--threads", ev_threads, "parallelism cap");
  eval_cmd->add_option("--out", ev_out, "output CSV path ('-' = stdout)");

  // sweep ---------------------------------------------------------------
  auto* sweep_cmd =
      app.add_subcommand("sweep", "MAP over mechanisms x heuristics x eps");
  std::string sw_graph, sw_out;
  std::vector<std::string> sw_heuristics{"cn", "aa", "jc"};
  std::vector<std::string> sw_mechanisms{"dplp"};
  std::vector<double> sw_epsilons{0.1};
  double sw_keep = 0.85, sw_delta_p = 1e-5;
  int sw_k = 10, sw_trials = 10, sw_threads = 0;
  std::uint64_t sw_seed = 0;
  sweep_cmd->add_option("--graph", sw_graph, "edge-list file")->required();
  sweep_cmd->add_option("--heuristics", sw_heuristics, "comma list")
      ->delimiter(',');
  sweep_cmd->add_option("--mechanisms", sw_mechanisms, "comma list")
      ->delimiter(',');
  sweep_cmd->add_option("--epsilon", sw_epsilons, "comma list of budgets")
      ->delimiter(',');
  sweep_cmd->add_option("--k", sw_k, "list length");
  sweep_cmd->add_option("--trials", sw_trials, "randomization trials");
  sweep_cmd->add_option("--keep-fraction", sw_keep, "visible fraction");
  sweep_cmd->add_option("--delta-p", sw_delta_p, "gaussian delta_p");
  sweep_cmd->add_option("--seed", sw_seed, "master seed");
  sweep_cmd->add_option("--threads", sw_threads, "parallelism cap");
  sweep_cmd->add_option("--out", sw_out, "output CSV path ('-' = stdout)");

  // latent-sim ----------------------------------------------------------
  auto* lat_cmd = app.add_subcommand(
      "latent-sim", "Latent-model ranking loss vs theoretical bound");
  LatentSimOptions lat;
  lat_cmd->add_option("--n", lat.n, "node count");
  lat_cmd->add_option("--dim", lat.dim, "latent dimension");
  auto* omega_opt =
      lat_cmd->add_option("--omega", lat.omega_target, "Omega(r) in (0,1]");
  auto* radius_opt = lat_cmd->add_option("--radius", lat.radius,
                                         "connection radius r");
  omega_opt->excludes(radius_opt);
  lat_cmd->add_option("--heuristic", lat.heuristic, "cn|jc|aa");
  lat_cmd->add_option("--mechanism", lat.mechanism, "sampling mechanism");
  lat_cmd->add_option("--epsilon", lat.epsilons, "comma list of budgets")
      ->delimiter(',')
      ->required();
  lat_cmd->add_option("--k", lat.k, "list length");
  lat_cmd->add_option("--delta", lat.delta, "bound failure probability");
  lat_cmd->add_option("--trials", lat.trials, "Monte Carlo trials per query");
  lat_cmd->add_option("--max-queries", lat.max_queries,
                      "cap on query count (0 = all)");
  lat_cmd->add_option("--seed", lat.seed, "master seed");
  lat_cmd->add_option("--threads", lat.threads, "parallelism cap");
  lat_cmd->add_option("--out", lat.out, "output CSV path ('-' = stdout)");
  lat_cmd->add_option("--positions-out", lat.positions_out,
                      "write latent positions CSV here");

  // bounds -------------------------------------------------------------
  auto* bounds_cmd =
      app.add_subcommand("bounds", "Evaluate the ranking-loss bound");
  std::string bd_heuristic = "cn", bd_out;
  std::int64_t bd_n = 1000;
  int bd_dim = 2, bd_k = 10;
  double bd_omega = 0.0, bd_radius = 0.0, bd_delta = 0.01;
  std::vector<double> bd_gammas{0.0};
  bounds_cmd->add_option("--heuristic", bd_heuristic, "cn|jc|aa");
  bounds_cmd->add_option("--n", bd_n, "node count |V|");
  bounds_cmd->add_option("--dim", bd_dim, "latent dimension");
  bounds_cmd->add_option("--k", bd_k, "list length");
  auto* bd_omega_opt =
      bounds_cmd->add_option("--omega", bd_omega, "Omega(r) in (0,1]");
  auto* bd_radius_opt =
      bounds_cmd->add_option("--radius", bd_radius, "connection radius r");
  bd_omega_opt->excludes(bd_radius_opt);
  bounds_cmd->add_option("--delta", bd_delta, "bound failure probability");
  bounds_cmd->add_option("--gamma-bar", bd_gammas, "comma list of utility losses")
      ->delimiter(',');
  bounds_cmd->add_option("--out", bd_out, "output CSV path ('-' = stdout)");

  // audit ----------------------------------------------------------------
  auto* audit_cmd =
      app.add_subcommand("audit", "Exact differential-privacy audit");
  std::string au_graph, au_heuristic = "cn", au_mechanism = "dplp", au_out;
  int au_graphs = 50, au_nodes = 7, au_k = 2;
  double au_epsilon = 0.3;
  std::int64_t au_query = -1;
  std::uint64_t au_seed = 0;
  audit_cmd->add_option("--graph", au_graph,
                        "edge-list file (single-graph mode)");
  audit_cmd->add_option("--query", au_query,
                        "query label (single-graph mode)");
  audit_cmd->add_option("--graphs", au_graphs, "random graphs to audit");
  audit_cmd->add_option("--nodes", au_nodes, "nodes per random graph (<= 8)");
  audit_cmd->add_option("--heuristic", au_heuristic, "cn|jc|aa");
  audit_cmd->add_option("--mechanism", au_mechanism, "dplp|exponential");
  audit_cmd->add_option("--epsilon", au_epsilon, "privacy budget epsilon_p");
  audit_cmd->add_option("--k", au_k, "list length");
  audit_cmd->add_option("--seed", au_seed, "master seed");
  audit_cmd->add_option("--out", au_out, "output CSV path ('-' = stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  try {
    if (rec_cmd->parsed()) {
      print_repro_header(rec_seed, argc, argv);
      const EdgeListData data = load_graph_file(rec_graph);
      const ScoreFunction f = make_score_function(data, rec_heuristic,
                                                  rec_scores, rec_sensitivity);
      const NodeId query = resolve_query_label(data, rec_query);
      const auto pool = data.graph.non_neighbors(query);
      const auto sc = f.score_all(data.graph, query, pool);
      DpConfig cfg;
      cfg.mechanism = parse_mechanism(rec_mechanism);
      cfg.epsilon_p = rec_epsilon;
      cfg.k = rec_k;
      cfg.delta_p = rec_delta_p;
      cfg.seed = rec_seed;
      Rng rng(derive_stream_seed(rec_seed, kRecommendStream,
                                 static_cast<std::uint64_t>(query)));
      const Recommendation out = run_mechanism(sc, cfg, f.sensitivity(), rng);
      for (NodeId item : out.items) {
        std::cout << data.labels[static_cast<std::size_t>(item)] << "\n";
      }
      return 0;
    }

    if (eval_cmd->parsed()) {
      print_repro_header(ev_seed, argc, argv);
      const EdgeListData data = load_graph_file(ev_graph);
      const ScoreFunction f =
          make_score_function(data, ev_heuristic, "", 1.0);
      DpConfig cfg;
      cfg.mechanism = parse_mechanism(ev_mechanism);
      cfg.epsilon_p = ev_epsilon;
      cfg.k = ev_k;
      cfg.delta_p = ev_delta_p;
      cfg.seed = ev_seed;
      SplitSpec spec;
      spec.keep_fraction = ev_keep;
      spec.k = ev_k;
      spec.trials = ev_trials;
      spec.seed = ev_seed;
      const EvalReport report = sweep(data.graph, {f}, {cfg.mechanism}, cfg,
                                      {cfg.epsilon_p}, spec, ev_threads);
      std::cerr << "# queries eligible=" << report.eligible_queries
                << " skipped=" << report.skipped_queries << "\n";
      write_output(ev_out, eval_csv(report));
      return 0;
    }

    if (sweep_cmd->parsed()) {
      print_repro_header(sw_seed, argc, argv);
      const EdgeListData data = load_graph_file(sw_graph);
      std::vector<ScoreFunction> heuristics;
      for (const auto& name : sw_heuristics) {
        heuristics.push_back(make_score_function(data, name, "", 1.0));
      }
      std::vector<Mechanism> mechanisms;
      for (const auto& name : sw_mechanisms) {
        mechanisms.push_back(parse_mechanism(name));
      }
      DpConfig base;
      base.k = sw_k;
      base.delta_p = sw_delta_p;
      base.seed = sw_seed;
      base.epsilon_p = sw_epsilons.front();
      SplitSpec spec;
      spec.keep_fraction = sw_keep;
      spec.k = sw_k;
      spec.trials = sw_trials;
      spec.seed = sw_seed;
      const EvalReport report = sweep(data.graph, heuristics, mechanisms,
                                      base, sw_epsilons, spec, sw_threads);
      std::cerr << "# queries eligible=" << report.eligible_queries
                << " skipped=" << report.skipped_queries << "\n";
      write_output(sw_out, eval_csv(report));
      return 0;
    }

    if (lat_cmd->parsed()) {
      print_repro_header(lat.seed, argc, argv);
      if (lat.omega_target <= 0 && lat.radius <= 0) {
        throw std::invalid_argument("need --omega or --radius");
      }
      write_output(lat.out, latent_sim_csv(lat));
      return 0;
    }

    if (bounds_cmd->parsed()) {
      print_repro_header(0, argc, argv);
      if (bd_omega <= 0 && bd_radius <= 0) {
        throw std::invalid_argument("need --omega or --radius");
      }
      BoundParams params;
      params.n_nodes = bd_n;
      params.dimension = bd_dim;
      params.k = bd_k;
      params.r = bd_radius > 0 ? bd_radius : omega_inverse(bd_dim, bd_omega);
      params.delta = bd_delta;
      params.heuristic = parse_heuristic(bd_heuristic);
      std::string body = bound_csv_header() + "\n";
      for (double gamma : bd_gammas) {
        params.gamma_bar = gamma;
        const BoundResult result = rank_loss_bound(params);
        body += bound_csv_row(params, result) + "\n";
      }
      write_output(bd_out, body);
      return 0;
    }

    if (audit_cmd->parsed()) {
      print_repro_header(au_seed, argc, argv);
      const auto heuristic = parse_heuristic(au_heuristic);
      ScoreFunction f = heuristic == Heuristic::kCommonNeighbors
                            ? ScoreFunction::common_neighbors()
                            : (heuristic == Heuristic::kJaccard
                                   ? ScoreFunction::jaccard()
                                   : ScoreFunction::adamic_adar());
      if (heuristic == Heuristic::kExternal) {
        throw std::invalid_argument("audit supports cn, jc, aa only");
      }
      DpConfig cfg;
      cfg.mechanism = parse_mechanism(au_mechanism);
      cfg.epsilon_p = au_epsilon;
      cfg.k = au_k;
      cfg.seed = au_seed;

      AuditReport report;
      if (!au_graph.empty()) {
        if (au_query < 0) {
          throw std::invalid_argument("single-graph audit needs --query");
        }
        const EdgeListData data = load_graph_file(au_graph);
        report = audit_exact(data.graph, f, cfg,
                             resolve_query_label(data, au_query));
      } else {
        Rng rng(derive_stream_seed(au_seed, kAuditStream));
        report = audit_random_suite(au_graphs, au_nodes, f, cfg, rng);
      }
      std::cerr << "# bound=" << audit_bound_kind_name(report.bound_kind)
                << " max_abs_log_ratio=" << report.max_abs_log_ratio
                << " claimed=" << report.claimed_bound
                << " tightness=" << report.tightness()
                << " incident_skipped=" << report.incident_skipped << "\n";
      write_output(au_out, audit_csv_header() + "\n" +
                               audit_csv_row(report) + "\n");
      return report.passed ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

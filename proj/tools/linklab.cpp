// Copyright 2026 The linklab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line entry point. Subcommands cover each stage (generate, prune,
// score, segment, recommend, evaluate, infogain) plus the chained pipeline
// and the full experiment grid. Exit codes: 0 success, 2 parameter error,
// 3 stage failure.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "linklab/evaluation.hpp"
#include "linklab/features.hpp"
#include "linklab/generators.hpp"
#include "linklab/graph.hpp"
#include "linklab/io.hpp"
#include "linklab/pipeline.hpp"
#include "linklab/prediction.hpp"
#include "linklab/segmentation.hpp"

namespace {

using namespace linklab;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitStage = 3;

bool g_quiet = false;

void note(const std::string& message) {
  if (!g_quiet) std::cerr << message << "\n";
}

std::vector<std::uint64_t> parse_seed_list(const std::string& csv) {
  std::vector<std::uint64_t> seeds;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const auto comma = csv.find(',', start);
    const std::string token =
        csv.substr(start, comma == std::string::npos ? csv.size() - start
                                                     : comma - start);
    if (!token.empty()) seeds.push_back(std::stoull(token));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (seeds.empty()) throw std::invalid_argument("empty seed list");
  return seeds;
}

GenSpec spec_from_flags(const std::string& model, std::uint64_t n,
                        std::int64_t m_edges, std::int64_t ring_k,
                        double p_rewire, std::int64_t m_attach) {
  GenSpec spec;
  spec.model = parse_model(model);
  spec.n = static_cast<VertexId>(n);
  switch (spec.model) {
    case Model::erdos_renyi:
      if (m_edges < 0) {
        throw std::invalid_argument("er model needs --m-edges");
      }
      spec.er_edges = static_cast<std::uint64_t>(m_edges);
      break;
    case Model::watts_strogatz:
      if (ring_k < 0) {
        throw std::invalid_argument("ws model needs --ring-k");
      }
      spec.ws_ring_k = static_cast<VertexId>(ring_k);
      spec.ws_p_rewire = p_rewire;
      break;
    case Model::barabasi_albert:
      if (m_attach < 0) {
        throw std::invalid_argument("ba model needs --m-attach");
      }
      spec.ba_m_attach = static_cast<VertexId>(m_attach);
      break;
  }
  return spec;
}

struct GenerateArgs {
  std::string model;
  std::uint64_t n = 0;
  std::int64_t m_edges = -1;
  std::int64_t ring_k = -1;
  double p_rewire = 0.1;
  std::int64_t m_attach = -1;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_generate(const GenerateArgs& args) {
  GenSpec spec = spec_from_flags(args.model, args.n, args.m_edges, args.ring_k,
                                 args.p_rewire, args.m_attach);
  spec.seed = args.seed;
  const Graph g = generate(spec);
  save_edge_list(g, args.out);
  note("[generate] wrote " + args.out + " (n=" +
       std::to_string(g.vertex_count()) +
       ", m=" + std::to_string(g.edge_count()) + ")");
  return kExitOk;
}

struct ScoreArgs {
  std::string graph;
  std::string feature;
  std::string out;
  double tol = 1e-8;
  std::uint32_t max_iter = 100;
};

int cmd_score(const ScoreArgs& args) {
  const Feature feature = parse_feature(args.feature);
  const Graph g = load_graph(args.graph);
  VertexScores scores;
  if (feature == Feature::authority) {
    scores = hits_authority(g, args.tol, args.max_iter);
    if (!scores.converged) {
      note("[score] authority hit the iteration cap before converging");
    }
  } else {
    scores = compute_scores(g, feature);
  }
  save_scores_csv(scores, args.out, {{"graph", args.graph}});
  note("[score] wrote " + args.out);
  return kExitOk;
}

struct SegmentArgs {
  std::string graph;
  std::uint32_t k = 5;
  std::uint64_t seed = 1;
  std::uint32_t max_iter = 50;
  std::string out;
};

int cmd_segment(const SegmentArgs& args) {
  const Graph g = load_graph(args.graph);
  const Partition p = segment_kmeans_arcs(g, args.k, args.seed, args.max_iter);
  save_partition_csv(p, args.out,
                     {{"graph", args.graph},
                      {"seed", std::to_string(args.seed)}});
  note("[segment] wrote " + args.out);
  return kExitOk;
}

struct PruneArgs {
  std::string graph;
  double rho = 0.1;
  std::uint64_t seed = 1;
  std::string out_observed;
  std::string out_heldout;
};

int cmd_prune(const PruneArgs& args) {
  const Graph g = load_graph(args.graph);
  const PruneSplit split = prune(g, args.rho, args.seed);
  save_edge_list(split.observed, args.out_observed);
  save_edge_list(split.observed.vertex_count(), split.held_out,
                 args.out_heldout);
  note("[prune] kept " + std::to_string(split.observed.edge_count()) +
       " edges, held out " + std::to_string(split.held_out.size()));
  return kExitOk;
}

struct RecommendArgs {
  std::string observed;
  std::string clusters;
  std::string scores;
  std::string policy = "intra";
  std::uint32_t n = 10;
  std::string out;
};

int cmd_recommend(const RecommendArgs& args) {
  PruneSplit split;
  split.observed = load_graph(args.observed);
  const Partition partition = load_partition_csv(args.clusters);
  const VertexScores scores = load_scores_csv(args.scores);
  const Recommendations recs = recommend(split, partition, scores,
                                         parse_policy(args.policy), args.n);
  save_recommendations_csv(recs, args.out,
                           {{"observed", args.observed},
                            {"clusters", args.clusters},
                            {"scores", args.scores},
                            {"top_n", std::to_string(args.n)}});
  note("[recommend] wrote " + args.out);
  return kExitOk;
}

struct EvaluateArgs {
  std::string recs;
  std::string heldout;
  std::string out;
  std::string average = "micro";
};

int cmd_evaluate(const EvaluateArgs& args) {
  EvalAverage average;
  if (args.average == "micro") {
    average = EvalAverage::micro;
  } else if (args.average == "macro") {
    average = EvalAverage::macro;
  } else {
    throw std::invalid_argument("unknown average '" + args.average +
                                "' (expected micro or macro)");
  }
  const Recommendations recs = load_recommendations_csv(args.recs);
  const EdgeList held_out = load_edge_list(args.heldout).second;
  EvalReport report = evaluate(recs, held_out, average);
  report.config = {{"recs", args.recs},
                   {"heldout", args.heldout},
                   {"scorer", recs.scorer_name},
                   {"policy", policy_name(recs.policy)},
                   {"average", eval_average_name(average)}};
  save_eval_csv(report, args.out);
  note("[evaluate] wrote " + args.out + " (P@10=" +
       fmt_g10(report.precision_at[kEvalDepth - 1]) + ")");
  return kExitOk;
}

struct InfogainArgs {
  std::string observed;
  std::string heldout;
  std::uint32_t neg_ratio = 1;
  std::uint32_t bins = 10;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_infogain(const InfogainArgs& args) {
  PruneSplit split;
  split.observed = load_graph(args.observed);
  split.held_out = load_edge_list(args.heldout).second;
  std::sort(split.held_out.begin(), split.held_out.end());
  if (split.held_out.empty()) {
    throw std::invalid_argument("infogain: empty held-out set");
  }
  const VertexScores deg = degree_coefficient(split.observed);
  const VertexScores trans = transitivity_coefficient(split.observed);
  const VertexScores auth = hits_authority(split.observed);
  const auto instances =
      build_instances(split, deg, trans, auth, args.neg_ratio, args.seed);

  std::vector<std::pair<double, InstanceFeature>> rows;
  for (InstanceFeature f : kInstanceFeatures) {
    rows.emplace_back(information_gain(instances, f, args.bins), f);
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });

  Provenance provenance = {{"observed", args.observed},
                           {"heldout", args.heldout},
                           {"neg_ratio", std::to_string(args.neg_ratio)},
                           {"bins", std::to_string(args.bins)},
                           {"seed", std::to_string(args.seed)},
                           {"instances", std::to_string(instances.size())}};
  std::ofstream out(args.out);
  if (!out) throw std::runtime_error("cannot open " + args.out + " for writing");
  out << detail::provenance_line("infogain", provenance);
  out << "feature,infogain\n";
  for (const auto& [gain, feature] : rows) {
    out << instance_feature_name(feature) << ',' << fmt_g10(gain) << '\n';
  }
  out.flush();
  if (!out) throw std::runtime_error("I/O error writing " + args.out);
  note("[infogain] wrote " + args.out);
  return kExitOk;
}

struct PipelineArgs {
  std::string model;
  std::uint64_t n = 10000;
  std::int64_t m_edges = -1;
  std::int64_t ring_k = 5;
  double p_rewire = 0.1;
  std::int64_t m_attach = 5;
  double rho = 0.1;
  std::uint32_t k = 5;
  std::string scorer = "authority";
  std::string policy = "intra";
  std::uint32_t top_n = 10;
  std::string seeds = "1,2,3,4,5";
  std::string out_dir;
};

int cmd_pipeline(const PipelineArgs& args) {
  PipelineConfig cfg;
  cfg.gen = spec_from_flags(args.model, args.n, args.m_edges, args.ring_k,
                            args.p_rewire, args.m_attach);
  if (cfg.gen.model == Model::erdos_renyi && args.m_edges < 0) {
    // convenience default: match the WS edge budget
    cfg.gen.er_edges = args.n * static_cast<std::uint64_t>(args.ring_k);
  }
  cfg.rho = args.rho;
  cfg.clusters = args.k;
  cfg.scorer = parse_feature(args.scorer);
  cfg.policy = parse_policy(args.policy);
  cfg.top_n = args.top_n;
  cfg.seeds = parse_seed_list(args.seeds);
  cfg.work_dir = args.out_dir;
  const PipelineResult result = run_pipeline(cfg);
  note("[pipeline] mean P@10 = " +
       fmt_g10(result.mean.precision_at[kEvalDepth - 1]) + ", mean R@10 = " +
       fmt_g10(result.mean.recall_at[kEvalDepth - 1]) + " over " +
       std::to_string(result.per_seed.size()) + " seed(s)");
  return kExitOk;
}

struct GridArgs {
  std::string models = "er,ba,ws";
  std::string k_values = "3,4,5,6,7";
  std::string rho_values = "0.10,0.25";
  std::string scorers = "authority,degree,transitivity";
  std::string seeds = "1,2,3,4,5";
  std::uint64_t n = 10000;
  std::int64_t ring_k = 5;
  double p_rewire = 0.1;
  std::int64_t m_attach = 5;
  std::int64_t er_edges = 0;
  std::string policy = "intra";
  std::uint32_t top_n = 10;
  std::string out_dir;
  unsigned jobs = 0;
};

int cmd_grid(const GridArgs& args) {
  ExperimentGrid grid;
  grid.models.clear();
  std::istringstream models(args.models);
  for (std::string token; std::getline(models, token, ',');) {
    if (!token.empty()) grid.models.push_back(parse_model(token));
  }
  grid.k_values.clear();
  for (std::uint64_t k : parse_seed_list(args.k_values)) {
    grid.k_values.push_back(static_cast<std::uint32_t>(k));
  }
  grid.rho_values.clear();
  std::istringstream rhos(args.rho_values);
  for (std::string token; std::getline(rhos, token, ',');) {
    if (!token.empty()) grid.rho_values.push_back(std::stod(token));
  }
  grid.scorers.clear();
  std::istringstream scorers(args.scorers);
  for (std::string token; std::getline(scorers, token, ',');) {
    if (!token.empty()) grid.scorers.push_back(parse_feature(token));
  }
  grid.seeds = parse_seed_list(args.seeds);
  grid.n = static_cast<VertexId>(args.n);
  grid.ws_ring_k = static_cast<VertexId>(args.ring_k);
  grid.ws_p_rewire = args.p_rewire;
  grid.ba_m_attach = static_cast<VertexId>(args.m_attach);
  grid.er_edges = static_cast<std::uint64_t>(std::max<std::int64_t>(0, args.er_edges));
  grid.policy = parse_policy(args.policy);
  grid.top_n = args.top_n;
  const auto tables = run_grid(grid, args.out_dir, args.jobs);
  for (const auto& table : tables) note("[grid] wrote " + table.string());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"link prediction laboratory for synthetic networks"};
  app.require_subcommand(1);
  app.add_flag("--quiet", g_quiet, "suppress progress notes");

  GenerateArgs gen_args;
  auto* generate = app.add_subcommand("generate", "write a synthetic graph");
  generate->add_option("--model", gen_args.model, "er | ws | ba")->required();
  generate->add_option("--n", gen_args.n, "vertex count")->required();
  generate->add_option("--m-edges", gen_args.m_edges, "er: edge count");
  generate->add_option("--ring-k", gen_args.ring_k, "ws: neighbors per side");
  generate->add_option("--p-rewire", gen_args.p_rewire, "ws: rewiring probability");
  generate->add_option("--m-attach", gen_args.m_attach, "ba: edges per vertex");
  generate->add_option("--seed", gen_args.seed, "RNG seed");
  generate->add_option("--out", gen_args.out, "output edge list")->required();

  ScoreArgs score_args;
  auto* score = app.add_subcommand("score", "score every vertex");
  score->add_option("--graph", score_args.graph, "input edge list")->required();
  score->add_option("--feature", score_args.feature,
                    "degree | transitivity | authority")->required();
  score->add_option("--out", score_args.out, "output CSV")->required();
  score->add_option("--tol", score_args.tol, "authority convergence threshold");
  score->add_option("--max-iter", score_args.max_iter, "authority iteration cap");

  SegmentArgs segment_args;
  auto* segment = app.add_subcommand("segment", "cluster the vertices");
  segment->add_option("--graph", segment_args.graph, "input edge list")->required();
  segment->add_option("--k", segment_args.k, "cluster count")->required();
  segment->add_option("--seed", segment_args.seed, "RNG seed");
  segment->add_option("--max-iter", segment_args.max_iter, "sweep cap");
  segment->add_option("--out", segment_args.out, "output CSV")->required();

  PruneArgs prune_args;
  auto* prune_cmd = app.add_subcommand("prune", "split edges into observed and held out");
  prune_cmd->add_option("--graph", prune_args.graph, "input edge list")->required();
  prune_cmd->add_option("--rho", prune_args.rho, "held-out fraction")->required();
  prune_cmd->add_option("--seed", prune_args.seed, "RNG seed");
  prune_cmd->add_option("--out-observed", prune_args.out_observed,
                        "observed edge list")->required();
  prune_cmd->add_option("--out-heldout", prune_args.out_heldout,
                        "held-out edge list")->required();

  RecommendArgs rec_args;
  auto* rec = app.add_subcommand("recommend", "rank candidates per target");
  rec->add_option("--observed", rec_args.observed, "observed edge list")->required();
  rec->add_option("--clusters", rec_args.clusters, "cluster CSV")->required();
  rec->add_option("--scores", rec_args.scores, "score CSV")->required();
  rec->add_option("--policy", rec_args.policy, "intra | foaf");
  rec->add_option("--n", rec_args.n, "list length");
  rec->add_option("--out", rec_args.out, "output CSV")->required();

  EvaluateArgs eval_args;
  auto* eval = app.add_subcommand("evaluate", "score recommendations against held-out edges");
  eval->add_option("--recs", eval_args.recs, "recommendation CSV")->required();
  eval->add_option("--heldout", eval_args.heldout, "held-out edge list")->required();
  eval->add_option("--out", eval_args.out, "output CSV")->required();
  eval->add_option("--average", eval_args.average,
                   "micro (ratio of sums, default) | macro (per-target mean)");

  InfogainArgs ig_args;
  auto* infogain = app.add_subcommand("infogain", "feature separability on link instances");
  infogain->add_option("--observed", ig_args.observed, "observed edge list")->required();
  infogain->add_option("--heldout", ig_args.heldout, "held-out edge list")->required();
  infogain->add_option("--neg-ratio", ig_args.neg_ratio, "negatives per positive");
  infogain->add_option("--bins", ig_args.bins, "equal-frequency bins");
  infogain->add_option("--seed", ig_args.seed, "RNG seed");
  infogain->add_option("--out", ig_args.out, "output CSV")->required();

  PipelineArgs pipe_args;
  auto* pipe = app.add_subcommand(
      "pipeline", "generate, prune, score, segment, recommend, evaluate");
  pipe->add_option("--model", pipe_args.model, "er | ws | ba")->required();
  pipe->add_option("--n", pipe_args.n, "vertex count (default 10000)");
  pipe->add_option("--m-edges", pipe_args.m_edges, "er: edge count");
  pipe->add_option("--ring-k", pipe_args.ring_k, "ws: neighbors per side");
  pipe->add_option("--p-rewire", pipe_args.p_rewire, "ws: rewiring probability");
  pipe->add_option("--m-attach", pipe_args.m_attach, "ba: edges per vertex");
  pipe->add_option("--rho", pipe_args.rho, "held-out fraction");
  pipe->add_option("--k", pipe_args.k, "cluster count");
  pipe->add_option("--scorer", pipe_args.scorer, "degree | transitivity | authority");
  pipe->add_option("--policy", pipe_args.policy, "intra | foaf");
  pipe->add_option("--top-n", pipe_args.top_n, "recommendation list length");
  pipe->add_option("--seeds", pipe_args.seeds, "comma-separated seed list");
  pipe->add_option("--out-dir", pipe_args.out_dir,
                   "artifact directory (stages resume from it)")->required();

  GridArgs grid_args;
  auto* grid = app.add_subcommand("grid", "run the full experiment matrix");
  grid->add_option("--models", grid_args.models, "comma list of er,ba,ws");
  grid->add_option("--k-values", grid_args.k_values, "comma list of cluster counts");
  grid->add_option("--rho-values", grid_args.rho_values, "comma list of pruning rates");
  grid->add_option("--scorers", grid_args.scorers, "comma list of scorers");
  grid->add_option("--seeds", grid_args.seeds, "comma-separated seed list");
  grid->add_option("--n", grid_args.n, "vertex count (default 10000)");
  grid->add_option("--ring-k", grid_args.ring_k, "ws: neighbors per side");
  grid->add_option("--p-rewire", grid_args.p_rewire, "ws: rewiring probability");
  grid->add_option("--m-attach", grid_args.m_attach, "ba: edges per vertex");
  grid->add_option("--er-edges", grid_args.er_edges,
                   "er: edge count (0 matches the ws budget)");
  grid->add_option("--policy", grid_args.policy, "intra | foaf");
  grid->add_option("--top-n", grid_args.top_n, "recommendation list length");
  grid->add_option("--jobs", grid_args.jobs, "worker threads (0 = auto)");
  grid->add_option("--out-dir", grid_args.out_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen_args);
    if (score->parsed()) return cmd_score(score_args);
    if (segment->parsed()) return cmd_segment(segment_args);
    if (prune_cmd->parsed()) return cmd_prune(prune_args);
    if (rec->parsed()) return cmd_recommend(rec_args);
    if (eval->parsed()) return cmd_evaluate(eval_args);
    if (infogain->parsed()) return cmd_infogain(ig_args);
    if (pipe->parsed()) return cmd_pipeline(pipe_args);
    if (grid->parsed()) return cmd_grid(grid_args);
  } catch (const PipelineError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStage;
  }
  return kExitUsage;
}

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

#pragma once

#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "linklab/evaluation.hpp"
#include "linklab/features.hpp"
#include "linklab/generators.hpp"
#include "linklab/graph.hpp"
#include "linklab/io.hpp"
#include "linklab/prediction.hpp"
#include "linklab/random.hpp"
#include "linklab/segmentation.hpp"

namespace linklab {

/// A failure inside one pipeline stage, tagged with the stage name.
class PipelineError : public std::runtime_error {
 public:
  PipelineError(std::string stage, const std::string& what)
      : std::runtime_error("[" + stage + "] " + what), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

/// One experiment: generate, prune, score on the observed graph, segment
/// the observed graph, recommend, evaluate. Repeated per seed.
struct PipelineConfig {
  GenSpec gen;  // gen.seed is ignored; per-run seeds below drive every stage
  double rho = 0.10;
  std::uint32_t clusters = 5;
  Feature scorer = Feature::authority;
  CandidatePolicy policy = CandidatePolicy::intra_cluster;
  std::uint32_t top_n = 10;
  std::vector<std::uint64_t> seeds = {1};
  // When set, every stage writes its artifact here and a rerun loads
  // whatever is already on disk instead of recomputing it.
  std::filesystem::path work_dir;
};

struct PipelineResult {
  std::vector<EvalReport> per_seed;
  EvalReport mean;
};

namespace detail {

template <typename F>
auto run_stage(const char* name, F&& body) {
  try {
    return body();
  } catch (const PipelineError&) {
    throw;
  } catch (const std::exception& e) {
    throw PipelineError(name, e.what());
  }
}

inline std::string gen_slug(const GenSpec& spec) {
  std::ostringstream out;
  out << model_name(spec.model) << "_n" << spec.n;
  switch (spec.model) {
    case Model::erdos_renyi:
      out << "_m" << spec.er_edges;
      break;
    case Model::watts_strogatz:
      out << "_rk" << spec.ws_ring_k << "_pr" << fmt_g10(spec.ws_p_rewire);
      break;
    case Model::barabasi_albert:
      out << "_ma" << spec.ba_m_attach;
      break;
  }
  return out.str();
}

inline Provenance pipeline_provenance(const PipelineConfig& cfg,
                                      std::uint64_t seed) {
  Provenance p;
  p.emplace_back("model", model_name(cfg.gen.model));
  p.emplace_back("n", std::to_string(cfg.gen.n));
  switch (cfg.gen.model) {
    case Model::erdos_renyi:
      p.emplace_back("m_edges", std::to_string(cfg.gen.er_edges));
      break;
    case Model::watts_strogatz:
      p.emplace_back("ring_k", std::to_string(cfg.gen.ws_ring_k));
      p.emplace_back("p_rewire", fmt_g10(cfg.gen.ws_p_rewire));
      break;
    case Model::barabasi_albert:
      p.emplace_back("m_attach", std::to_string(cfg.gen.ba_m_attach));
      break;
  }
  p.emplace_back("rho", fmt_g10(cfg.rho));
  p.emplace_back("k", std::to_string(cfg.clusters));
  p.emplace_back("scorer", feature_name(cfg.scorer));
  p.emplace_back("policy", policy_name(cfg.policy));
  p.emplace_back("top_n", std::to_string(cfg.top_n));
  p.emplace_back("seed", std::to_string(seed));
  return p;
}

// Stage seed tags.
inline constexpr std::uint64_t kStageGenerate = 0;
inline constexpr std::uint64_t kStagePrune = 1;
inline constexpr std::uint64_t kStageSegment = 2;

}  // namespace detail

/// Runs the full experiment for one seed. Ranking scores are passed through
/// their 10-digit serialized form so a resumed run (which reads them back
/// from disk) reproduces a fresh run exactly.
inline EvalReport run_pipeline_once(const PipelineConfig& cfg,
                                    std::uint64_t seed) {
  namespace fs = std::filesystem;
  const bool cache = !cfg.work_dir.empty();
  if (cache) fs::create_directories(cfg.work_dir);
  const std::string slug = detail::gen_slug(cfg.gen);
  const std::string seed_tag = "_seed" + std::to_string(seed);
  const std::string rho_tag = "_rho" + fmt_g10(cfg.rho);

  GenSpec gen = cfg.gen;
  gen.seed = derive_seed(seed, detail::kStageGenerate);

  const Graph full = detail::run_stage("generate", [&] {
    const fs::path path = cfg.work_dir / ("graph_" + slug + seed_tag + ".edges");
    if (cache && fs::exists(path)) return load_graph(path);
    Graph g = generate(gen);
    if (cache) save_edge_list(g, path);
    return g;
  });

  PruneSplit split = detail::run_stage("prune", [&] {
    const fs::path obs_path =
        cfg.work_dir / ("observed_" + slug + rho_tag + seed_tag + ".edges");
    const fs::path held_path =
        cfg.work_dir / ("heldout_" + slug + rho_tag + seed_tag + ".edges");
    if (cache && fs::exists(obs_path) && fs::exists(held_path)) {
      PruneSplit loaded;
      loaded.observed = load_graph(obs_path);
      loaded.held_out = load_edge_list(held_path).second;
      std::sort(loaded.held_out.begin(), loaded.held_out.end());
      loaded.rho = cfg.rho;
      loaded.seed = seed;
      return loaded;
    }
    PruneSplit fresh = prune(full, cfg.rho, derive_seed(seed, detail::kStagePrune));
    if (cache) {
      save_edge_list(fresh.observed, obs_path);
      save_edge_list(fresh.observed.vertex_count(), fresh.held_out, held_path);
    }
    return fresh;
  });

  const VertexScores scores = detail::run_stage("score", [&] {
    const fs::path path =
        cfg.work_dir / ("scores_" + std::string(feature_name(cfg.scorer)) +
                        "_" + slug + rho_tag + seed_tag + ".csv");
    if (cache && fs::exists(path)) return load_scores_csv(path);
    VertexScores s = compute_scores(split.observed, cfg.scorer);
    for (double& v : s.values) v = round_sig10(v);
    if (cache) save_scores_csv(s, path);
    return s;
  });

  const Partition partition = detail::run_stage("segment", [&] {
    const fs::path path =
        cfg.work_dir / ("clusters_k" + std::to_string(cfg.clusters) + "_" +
                        slug + rho_tag + seed_tag + ".csv");
    if (cache && fs::exists(path)) return load_partition_csv(path);
    Partition p = segment_kmeans_arcs(split.observed, cfg.clusters,
                                      derive_seed(seed, detail::kStageSegment));
    if (cache) save_partition_csv(p, path);
    return p;
  });

  const Recommendations recs = detail::run_stage("recommend", [&] {
    const fs::path path =
        cfg.work_dir /
        ("recs_" + std::string(feature_name(cfg.scorer)) + "_" +
         policy_name(cfg.policy) + "_k" + std::to_string(cfg.clusters) + "_" +
         slug + rho_tag + seed_tag + ".csv");
    if (cache && fs::exists(path)) return load_recommendations_csv(path);
    Recommendations r = recommend(split, partition, scores, cfg.policy, cfg.top_n);
    if (cache) save_recommendations_csv(r, path);
    return r;
  });

  EvalReport report = detail::run_stage("evaluate", [&] {
    EvalReport rep = evaluate(recs, split.held_out);
    rep.config = detail::pipeline_provenance(cfg, seed);
    for (double& v : rep.precision_at) v = round_sig10(v);
    for (double& v : rep.recall_at) v = round_sig10(v);
    if (cache) {
      save_eval_csv(rep, cfg.work_dir / ("eval_" + slug + rho_tag + "_k" +
                                         std::to_string(cfg.clusters) + "_" +
                                         feature_name(cfg.scorer) + seed_tag +
                                         ".csv"));
    }
    return rep;
  });
  return report;
}

inline EvalReport mean_report(const std::vector<EvalReport>& reports) {
  EvalReport mean;
  if (reports.empty()) return mean;
  for (const EvalReport& r : reports) {
    for (std::uint32_t i = 0; i < kEvalDepth; ++i) {
      mean.precision_at[i] += r.precision_at[i];
      mean.recall_at[i] += r.recall_at[i];
    }
    mean.targets_evaluated += r.targets_evaluated;
  }
  const double count = static_cast<double>(reports.size());
  for (std::uint32_t i = 0; i < kEvalDepth; ++i) {
    mean.precision_at[i] /= count;
    mean.recall_at[i] /= count;
  }
  mean.targets_evaluated /= count;
  return mean;
}

/// Per-seed reports plus their mean.
inline PipelineResult run_pipeline(const PipelineConfig& cfg) {
  if (cfg.seeds.empty()) {
    throw std::invalid_argument("pipeline: need at least one seed");
  }
  PipelineResult result;
  result.per_seed.reserve(cfg.seeds.size());
  for (std::uint64_t seed : cfg.seeds) {
    result.per_seed.push_back(run_pipeline_once(cfg, seed));
  }
  result.mean = mean_report(result.per_seed);
  result.mean.config = result.per_seed.front().config;
  for (auto& [key, value] : result.mean.config) {
    if (key == "seed") {
      std::string all;
      for (std::uint64_t seed : cfg.seeds) {
        if (!all.empty()) all += '+';
        all += std::to_string(seed);
      }
      value = all;
      key = "seeds";
    }
  }
  if (!cfg.work_dir.empty()) {
    save_eval_csv(result.mean,
                  cfg.work_dir / ("eval_" + detail::gen_slug(cfg.gen) + "_rho" +
                                  fmt_g10(cfg.rho) + "_k" +
                                  std::to_string(cfg.clusters) + "_" +
                                  feature_name(cfg.scorer) + "_mean.csv"));
  }
  return result;
}

/// The full experiment matrix behind the summary tables: every combination
/// of model, pruning rate, scorer, and cluster count, repeated over seeds.
struct ExperimentGrid {
  std::vector<Model> models = {Model::erdos_renyi, Model::barabasi_albert,
                               Model::watts_strogatz};
  std::vector<double> rho_values = {0.10, 0.25};
  std::vector<Feature> scorers = {Feature::authority, Feature::degree,
                                  Feature::transitivity};
  std::vector<std::uint32_t> k_values = {3, 4, 5, 6, 7};
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  VertexId n = 10000;
  VertexId ws_ring_k = 5;
  double ws_p_rewire = 0.1;
  VertexId ba_m_attach = 5;
  std::uint64_t er_edges = 0;  // 0: match the WS edge budget n * ring_k
  CandidatePolicy policy = CandidatePolicy::intra_cluster;
  std::uint32_t top_n = 10;

  GenSpec gen_spec(Model model) const {
    GenSpec spec;
    spec.model = model;
    spec.n = n;
    spec.er_edges = er_edges == 0 ? static_cast<std::uint64_t>(n) * ws_ring_k
                                  : er_edges;
    spec.ws_ring_k = ws_ring_k;
    spec.ws_p_rewire = ws_p_rewire;
    spec.ba_m_attach = ba_m_attach;
    return spec;
  }

  void validate() const {
    if (models.empty() || rho_values.empty() || scorers.empty() ||
        k_values.empty() || seeds.empty()) {
      throw std::invalid_argument("grid: every axis needs at least one value");
    }
  }
};

/// Path of one grid cell's per-seed evaluation report.
inline std::filesystem::path grid_cell_path(
    const std::filesystem::path& out_dir, Model model, double rho,
    std::uint32_t k, Feature scorer, std::uint64_t seed) {
  std::ostringstream name;
  name << "cell_" << model_name(model) << "_rho" << fmt_g10(rho) << "_k" << k
       << "_" << feature_name(scorer) << "_seed" << seed << ".csv";
  return out_dir / "cells" / name.str();
}

inline std::filesystem::path grid_table_path(
    const std::filesystem::path& out_dir, Model model, double rho) {
  std::ostringstream name;
  name << "grid_" << model_name(model) << "_rho" << fmt_g10(rho) << ".csv";
  return out_dir / name.str();
}

namespace detail {

struct GridJob {
  Model model;
  std::uint64_t seed;
};

// Computes every missing cell for one (model, seed): the generated graph,
// each pruning, and each segmentation are shared across the cells that use
// them. Finished cells are flushed immediately, so an interrupted run loses
// at most the cells in flight.
inline void run_grid_job(const ExperimentGrid& grid,
                         const std::filesystem::path& out_dir,
                         const GridJob& job) {
  namespace fs = std::filesystem;
  bool all_cached = true;
  for (double rho : grid.rho_values) {
    for (std::uint32_t k : grid.k_values) {
      for (Feature scorer : grid.scorers) {
        if (!fs::exists(grid_cell_path(out_dir, job.model, rho, k, scorer,
                                       job.seed))) {
          all_cached = false;
        }
      }
    }
  }
  if (all_cached) return;

  GenSpec spec = grid.gen_spec(job.model);
  spec.seed = derive_seed(job.seed, kStageGenerate);
  const Graph full = generate(spec);

  PipelineConfig cell_cfg;
  cell_cfg.gen = grid.gen_spec(job.model);
  cell_cfg.policy = grid.policy;
  cell_cfg.top_n = grid.top_n;

  for (double rho : grid.rho_values) {
    bool rho_needed = false;
    for (std::uint32_t k : grid.k_values) {
      for (Feature scorer : grid.scorers) {
        if (!fs::exists(grid_cell_path(out_dir, job.model, rho, k, scorer,
                                       job.seed))) {
          rho_needed = true;
        }
      }
    }
    if (!rho_needed) continue;
    const PruneSplit split =
        prune(full, rho, derive_seed(job.seed, kStagePrune));
    std::array<std::optional<VertexScores>, 3> score_cache;
    auto scores_for = [&](Feature f) -> const VertexScores& {
      auto& slot = score_cache[static_cast<std::size_t>(f)];
      if (!slot) {
        VertexScores s = compute_scores(split.observed, f);
        for (double& v : s.values) v = round_sig10(v);
        slot = std::move(s);
      }
      return *slot;
    };
    for (std::uint32_t k : grid.k_values) {
      std::optional<Partition> partition;
      for (Feature scorer : grid.scorers) {
        const fs::path cell =
            grid_cell_path(out_dir, job.model, rho, k, scorer, job.seed);
        if (fs::exists(cell)) continue;
        if (!partition) {
          partition = segment_kmeans_arcs(split.observed, k,
                                          derive_seed(job.seed, kStageSegment));
        }
        const Recommendations recs =
            recommend(split, *partition, scores_for(scorer), grid.policy,
                      grid.top_n);
        EvalReport report = evaluate(recs, split.held_out);
        cell_cfg.rho = rho;
        cell_cfg.clusters = k;
        cell_cfg.scorer = scorer;
        report.config = pipeline_provenance(cell_cfg, job.seed);
        for (double& v : report.precision_at) v = round_sig10(v);
        for (double& v : report.recall_at) v = round_sig10(v);

        std::ostringstream content;
        Provenance provenance = report.config;
        provenance.emplace_back("targets", fmt_g10(report.targets_evaluated));
        content << provenance_line("grid-cell", provenance);
        content << "N,precision,recall\n";
        for (std::uint32_t i = 0; i < kEvalDepth; ++i) {
          content << (i + 1) << ',' << fmt_g10(report.precision_at[i]) << ','
                  << fmt_g10(report.recall_at[i]) << '\n';
        }
        write_text_atomic(cell, content.str());
      }
    }
  }
}

inline double sample_stddev(const std::vector<double>& xs, double mean) {
  if (xs.size() < 2) return 0.0;
  double sum_sq = 0.0;
  for (double x : xs) sum_sq += (x - mean) * (x - mean);
  return std::sqrt(sum_sq / static_cast<double>(xs.size() - 1));
}

}  // namespace detail

/// Runs the grid and writes one table CSV per (model, rho) with rows
/// (scorer, k) and columns P@10, R@10, and their stddev across seeds.
/// Cells are cached under out_dir/cells, so reruns resume and identical
/// parameters reproduce identical bytes. Returns the table paths.
inline std::vector<std::filesystem::path> run_grid(
    const ExperimentGrid& grid, const std::filesystem::path& out_dir,
    unsigned jobs = 0) {
  namespace fs = std::filesystem;
  grid.validate();
  fs::create_directories(out_dir / "cells");

  std::vector<detail::GridJob> job_list;
  for (Model model : grid.models) {
    for (std::uint64_t seed : grid.seeds) {
      job_list.push_back(detail::GridJob{model, seed});
    }
  }
  if (jobs == 0) jobs = std::thread::hardware_concurrency();
  jobs = std::max(1u, std::min<unsigned>(jobs, job_list.size()));

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= job_list.size()) break;
          detail::run_grid_job(grid, out_dir, job_list[i]);
        }
      } catch (...) {
        errors[w] = std::current_exception();
        next.store(job_list.size());  // stop the other workers soon
      }
    });
  }
  for (auto& worker : workers) worker.join();
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }

  // Tables are assembled from the cell files (never from in-memory values),
  // so fresh and resumed runs serialize identically.
  std::vector<fs::path> tables;
  for (Model model : grid.models) {
    for (double rho : grid.rho_values) {
      Provenance provenance;
      provenance.emplace_back("model", model_name(model));
      provenance.emplace_back("rho", fmt_g10(rho));
      provenance.emplace_back("n", std::to_string(grid.n));
      provenance.emplace_back("ring_k", std::to_string(grid.ws_ring_k));
      provenance.emplace_back("p_rewire", fmt_g10(grid.ws_p_rewire));
      provenance.emplace_back("m_attach", std::to_string(grid.ba_m_attach));
      provenance.emplace_back(
          "er_edges", std::to_string(grid.gen_spec(Model::erdos_renyi).er_edges));
      provenance.emplace_back("policy", policy_name(grid.policy));
      provenance.emplace_back("top_n", std::to_string(grid.top_n));
      {
        std::string all;
        for (std::uint64_t seed : grid.seeds) {
          if (!all.empty()) all += '+';
          all += std::to_string(seed);
        }
        provenance.emplace_back("seeds", all);
      }
      std::ostringstream content;
      content << detail::provenance_line("grid", provenance);
      content << "scorer,k,p_at_10,r_at_10,p_at_10_stddev,r_at_10_stddev\n";
      for (Feature scorer : grid.scorers) {
        for (std::uint32_t k : grid.k_values) {
          std::vector<double> p_vals;
          std::vector<double> r_vals;
          for (std::uint64_t seed : grid.seeds) {
            const EvalReport cell = load_eval_csv(
                grid_cell_path(out_dir, model, rho, k, scorer, seed));
            p_vals.push_back(cell.precision_at[kEvalDepth - 1]);
            r_vals.push_back(cell.recall_at[kEvalDepth - 1]);
          }
          double p_mean = 0.0, r_mean = 0.0;
          for (double x : p_vals) p_mean += x;
          for (double x : r_vals) r_mean += x;
          p_mean /= static_cast<double>(p_vals.size());
          r_mean /= static_cast<double>(r_vals.size());
          content << feature_name(scorer) << ',' << k << ',' << fmt_g10(p_mean)
                  << ',' << fmt_g10(r_mean) << ','
                  << fmt_g10(detail::sample_stddev(p_vals, p_mean)) << ','
                  << fmt_g10(detail::sample_stddev(r_vals, r_mean)) << '\n';
        }
      }
      const fs::path table = grid_table_path(out_dir, model, rho);
      write_text_atomic(table, content.str());
      tables.push_back(table);
    }
  }
  return tables;
}

}  // namespace linklab

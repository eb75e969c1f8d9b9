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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "linklab/features.hpp"
#include "linklab/graph.hpp"
#include "linklab/prediction.hpp"
#include "linklab/random.hpp"

namespace linklab {

inline constexpr std::uint32_t kEvalDepth = 10;

/// Micro-averaged precision/recall at N = 1..10 plus the configuration the
/// numbers came from. Entries are indexed N-1.
struct EvalReport {
  std::array<double, kEvalDepth> precision_at{};
  std::array<double, kEvalDepth> recall_at{};
  double targets_evaluated = 0;
  std::vector<std::pair<std::string, std::string>> config;
};

/// How per-target counts aggregate into P@N / R@N.
enum class EvalAverage { micro, macro };

inline const char* eval_average_name(EvalAverage a) {
  return a == EvalAverage::micro ? "micro" : "macro";
}

/// Scores recommendation lists against the held-out edges.
///
/// Targets are the vertices with at least one incident held-out edge. In
/// the default micro average, precision@N is sum(hits) / sum(min(N, list
/// length)) over those targets and recall@N is sum(hits) / sum(incident
/// held-out edges); each undirected held-out edge counts toward both
/// endpoints. The macro variant averages the per-target ratios instead
/// (targets with empty lists contribute precision 0). An N with no
/// recommendations at all reports precision 0.
inline EvalReport evaluate(const Recommendations& recs,
                           const EdgeList& held_out,
                           EvalAverage average = EvalAverage::micro) {
  if (held_out.empty()) {
    throw std::invalid_argument("evaluate: empty held-out set");
  }
  VertexId n = static_cast<VertexId>(recs.lists.size());
  for (const Edge& e : held_out) n = std::max({n, e.u + 1, e.v + 1});
  std::vector<std::uint32_t> miss_count(n, 0);
  std::vector<std::vector<VertexId>> miss_partners(n);
  for (const Edge& e : held_out) {
    ++miss_count[e.u];
    ++miss_count[e.v];
    miss_partners[e.u].push_back(e.v);
    miss_partners[e.v].push_back(e.u);
  }
  for (auto& partners : miss_partners) std::sort(partners.begin(), partners.end());

  std::array<std::uint64_t, kEvalDepth> hits{};
  std::array<std::uint64_t, kEvalDepth> list_slots{};
  std::array<double, kEvalDepth> precision_sum{};
  std::array<double, kEvalDepth> recall_sum{};
  std::uint64_t miss_total = 0;
  std::uint64_t targets = 0;
  for (VertexId u = 0; u < n; ++u) {
    if (miss_count[u] == 0) continue;
    ++targets;
    miss_total += miss_count[u];
    const auto& partners = miss_partners[u];
    std::array<std::uint64_t, kEvalDepth> prefix{};
    std::size_t list_len = 0;
    if (u < recs.lists.size()) {
      const auto& list = recs.lists[u];
      list_len = list.size();
      std::uint64_t prefix_hits = 0;
      for (std::size_t r = 0; r < list.size() && r < kEvalDepth; ++r) {
        if (std::binary_search(partners.begin(), partners.end(),
                               list[r].candidate)) {
          ++prefix_hits;
        }
        prefix[r] = prefix_hits;
      }
      for (std::size_t r = list.size(); r < kEvalDepth; ++r) {
        prefix[r] = prefix_hits;
      }
    }
    for (std::uint32_t N = 1; N <= kEvalDepth; ++N) {
      const std::uint64_t slots = std::min<std::uint64_t>(N, list_len);
      hits[N - 1] += prefix[N - 1];
      list_slots[N - 1] += slots;
      if (slots > 0) {
        precision_sum[N - 1] += static_cast<double>(prefix[N - 1]) /
                                static_cast<double>(slots);
      }
      recall_sum[N - 1] += static_cast<double>(prefix[N - 1]) /
                           static_cast<double>(miss_count[u]);
    }
  }

  EvalReport report;
  report.targets_evaluated = static_cast<double>(targets);
  for (std::uint32_t i = 0; i < kEvalDepth; ++i) {
    if (average == EvalAverage::micro) {
      report.precision_at[i] =
          list_slots[i] == 0 ? 0.0
                             : static_cast<double>(hits[i]) /
                                   static_cast<double>(list_slots[i]);
      report.recall_at[i] =
          static_cast<double>(hits[i]) / static_cast<double>(miss_total);
    } else {
      report.precision_at[i] =
          precision_sum[i] / static_cast<double>(targets);
      report.recall_at[i] = recall_sum[i] / static_cast<double>(targets);
    }
  }
  return report;
}

/// One labeled link instance: the six observed-graph scores of the target
/// (subscript 1) and candidate (subscript 2) endpoints.
struct LinkInstance {
  double auth1 = 0, auth2 = 0;
  double deg1 = 0, deg2 = 0;
  double trans1 = 0, trans2 = 0;
  bool label = false;  // true: the pair is a held-out edge
};

enum class InstanceFeature { auth1, auth2, deg1, deg2, trans1, trans2 };

inline constexpr std::array<InstanceFeature, 6> kInstanceFeatures = {
    InstanceFeature::auth1, InstanceFeature::auth2,
    InstanceFeature::deg1,  InstanceFeature::deg2,
    InstanceFeature::trans1, InstanceFeature::trans2};

inline const char* instance_feature_name(InstanceFeature f) {
  switch (f) {
    case InstanceFeature::auth1: return "auth1";
    case InstanceFeature::auth2: return "auth2";
    case InstanceFeature::deg1: return "deg1";
    case InstanceFeature::deg2: return "deg2";
    case InstanceFeature::trans1: return "trans1";
    case InstanceFeature::trans2: return "trans2";
  }
  return "?";
}

inline double instance_feature(const LinkInstance& inst, InstanceFeature f) {
  switch (f) {
    case InstanceFeature::auth1: return inst.auth1;
    case InstanceFeature::auth2: return inst.auth2;
    case InstanceFeature::deg1: return inst.deg1;
    case InstanceFeature::deg2: return inst.deg2;
    case InstanceFeature::trans1: return inst.trans1;
    case InstanceFeature::trans2: return inst.trans2;
  }
  return 0.0;
}

/// Builds labeled instances from a prune split: one positive per held-out
/// edge and neg_ratio negatives per positive, drawn uniformly without
/// replacement from the non-edges of the original graph. The target
/// (subscript 1) is the endpoint with the lower observed degree, ties going
/// to the lower id. Features are read from observed-graph scores.
inline std::vector<LinkInstance> build_instances(
    const PruneSplit& split, const VertexScores& degree_scores,
    const VertexScores& transitivity_scores,
    const VertexScores& authority_scores, std::uint32_t neg_ratio,
    std::uint64_t seed) {
  if (neg_ratio < 1) {
    throw std::invalid_argument("build_instances: neg_ratio must be >= 1");
  }
  const Graph& obs = split.observed;
  const VertexId n = obs.vertex_count();
  if (degree_scores.values.size() != n ||
      transitivity_scores.values.size() != n ||
      authority_scores.values.size() != n) {
    throw std::invalid_argument("build_instances: score dimension mismatch");
  }

  auto oriented = [&obs](VertexId a, VertexId b) {
    // target first: fewer observed friends, ties to the lower id
    if (obs.degree(b) < obs.degree(a) ||
        (obs.degree(b) == obs.degree(a) && b < a)) {
      std::swap(a, b);
    }
    return std::pair<VertexId, VertexId>(a, b);
  };
  auto make_instance = [&](VertexId a, VertexId b, bool label) {
    const auto [t, c] = oriented(a, b);
    LinkInstance inst;
    inst.auth1 = authority_scores.values[t];
    inst.auth2 = authority_scores.values[c];
    inst.deg1 = degree_scores.values[t];
    inst.deg2 = degree_scores.values[c];
    inst.trans1 = transitivity_scores.values[t];
    inst.trans2 = transitivity_scores.values[c];
    inst.label = label;
    return inst;
  };

  std::vector<LinkInstance> instances;
  instances.reserve(split.held_out.size() * (1 + neg_ratio));
  for (const Edge& e : split.held_out) {
    instances.push_back(make_instance(e.u, e.v, true));
  }

  // Negatives come from pairs that are edges in neither part of the split.
  EdgeList original_edges = obs.edges();
  original_edges.insert(original_edges.end(), split.held_out.begin(),
                        split.held_out.end());
  const Graph original = build_graph(n, std::move(original_edges));
  const std::uint64_t pair_count = max_edge_count(n);
  const std::uint64_t non_edges = pair_count - original.edge_count();
  const std::uint64_t needed =
      static_cast<std::uint64_t>(split.held_out.size()) * neg_ratio;
  if (needed > non_edges) {
    throw std::runtime_error(
        "build_instances: graph too dense, only " + std::to_string(non_edges) +
        " non-edges for " + std::to_string(needed) + " negatives");
  }

  Rng rng = make_rng(seed);
  std::unordered_set<std::uint64_t> used;
  used.reserve(needed * 2);
  std::uint64_t drawn = 0;
  std::uint64_t attempts = 0;
  const std::uint64_t attempt_cap = 200 * needed + 10000;
  while (drawn < needed && attempts < attempt_cap) {
    ++attempts;
    const std::uint64_t index = bounded(rng, pair_count);
    const Edge e = detail::pair_from_index(n, index);
    if (original.has_edge(e.u, e.v) || !used.insert(index).second) continue;
    instances.push_back(make_instance(e.u, e.v, false));
    ++drawn;
  }
  if (drawn < needed) {
    // Rejection stalled (nearly complete graph): enumerate the non-edges.
    for (VertexId u = 0; u < n && drawn < needed; ++u) {
      for (VertexId v = u + 1; v < n && drawn < needed; ++v) {
        const std::uint64_t index =
            static_cast<std::uint64_t>(u) * (2ull * n - u - 1) / 2 +
            (v - u - 1);
        if (original.has_edge(u, v) || used.count(index)) continue;
        instances.push_back(make_instance(u, v, false));
        ++drawn;
      }
    }
  }
  return instances;
}

namespace detail {

/// Entropy in bits of a two-class split, with 0 log 0 = 0.
inline double label_entropy(std::uint64_t positives, std::uint64_t total) {
  if (total == 0) return 0.0;
  const double p = static_cast<double>(positives) / static_cast<double>(total);
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

}  // namespace detail

/// Information gain H(label) - H(label | binned feature) in bits.
///
/// The feature is discretized by equal-frequency binning: cut points are
/// the k/bins order statistics and a value's bin is the number of cut
/// points strictly below it, so equal values always share a bin and any
/// strictly increasing transform of the feature leaves the result
/// unchanged.
inline double information_gain(const std::vector<LinkInstance>& instances,
                               InstanceFeature feature,
                               std::uint32_t bins = 10) {
  if (bins < 1) throw std::invalid_argument("information_gain: bins must be >= 1");
  if (instances.size() < 2) {
    throw std::invalid_argument("information_gain: need at least 2 instances");
  }
  std::uint64_t positives = 0;
  for (const auto& inst : instances) positives += inst.label ? 1 : 0;
  if (positives == 0 || positives == instances.size()) {
    throw std::invalid_argument("information_gain: both labels must be present");
  }

  const std::uint64_t count = instances.size();
  std::vector<double> values(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    values[i] = instance_feature(instances[i], feature);
  }
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> cuts;
  cuts.reserve(bins - 1);
  for (std::uint32_t b = 1; b < bins; ++b) {
    const std::uint64_t idx = (count * b + bins - 1) / bins;  // ceil(count*b/bins)
    cuts.push_back(sorted[idx - 1]);
  }

  std::vector<std::uint64_t> bin_total(bins, 0);
  std::vector<std::uint64_t> bin_pos(bins, 0);
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto bin = static_cast<std::uint32_t>(
        std::lower_bound(cuts.begin(), cuts.end(), values[i]) - cuts.begin());
    ++bin_total[bin];
    if (instances[i].label) ++bin_pos[bin];
  }

  const double h_label = detail::label_entropy(positives, count);
  double h_cond = 0.0;
  for (std::uint32_t b = 0; b < bins; ++b) {
    if (bin_total[b] == 0) continue;
    const double weight =
        static_cast<double>(bin_total[b]) / static_cast<double>(count);
    h_cond += weight * detail::label_entropy(bin_pos[b], bin_total[b]);
  }
  return h_label - h_cond;
}

}  // namespace linklab

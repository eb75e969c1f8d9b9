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
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "linklab/features.hpp"
#include "linklab/graph.hpp"
#include "linklab/random.hpp"
#include "linklab/segmentation.hpp"

namespace linklab {

/// Partition of a graph's edges into an observed graph and a held-out list.
/// The observed graph keeps the full vertex set.
struct PruneSplit {
  Graph observed;
  EdgeList held_out;  // canonical: u < v, sorted
  double rho = 0.0;
  std::uint64_t seed = 0;
};

/// Removes round(rho * m) edges, drawn uniformly without replacement, into
/// the held-out list. Half-way counts round up.
inline PruneSplit prune(const Graph& g, double rho, std::uint64_t seed) {
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw std::invalid_argument("prune: rho must be in [0,1]");
  }
  EdgeList edges = g.edges();
  const std::uint64_t m = edges.size();
  const std::uint64_t h = static_cast<std::uint64_t>(
      std::floor(rho * static_cast<double>(m) + 0.5));
  Rng rng = make_rng(seed);
  for (std::uint64_t i = 0; i < h; ++i) {
    const std::uint64_t j = i + bounded(rng, m - i);
    std::swap(edges[i], edges[j]);
  }
  EdgeList held(edges.begin(), edges.begin() + h);
  EdgeList kept(edges.begin() + h, edges.end());
  std::sort(held.begin(), held.end());
  PruneSplit split;
  split.observed = build_graph(g.vertex_count(), std::move(kept));
  split.held_out = std::move(held);
  split.rho = rho;
  split.seed = seed;
  return split;
}

enum class CandidatePolicy { intra_cluster, foaf };

inline const char* policy_name(CandidatePolicy p) {
  return p == CandidatePolicy::intra_cluster ? "intra" : "foaf";
}

inline CandidatePolicy parse_policy(std::string_view s) {
  if (s == "intra" || s == "intra_cluster") return CandidatePolicy::intra_cluster;
  if (s == "foaf") return CandidatePolicy::foaf;
  throw std::invalid_argument("unknown policy '" + std::string(s) +
                              "' (expected intra or foaf)");
}

/// Candidate set for one target: same-cluster non-neighbors, or vertices at
/// distance exactly 2 in the observed graph. Sorted ascending.
inline std::vector<VertexId> candidates(const PruneSplit& split,
                                        const Partition& partition,
                                        VertexId u, CandidatePolicy policy) {
  const Graph& g = split.observed;
  const VertexId n = g.vertex_count();
  if (u >= n) throw std::out_of_range("candidates: target out of range");
  std::vector<VertexId> out;
  if (policy == CandidatePolicy::intra_cluster) {
    if (partition.assignment.size() != n) {
      throw std::invalid_argument("candidates: partition does not match graph");
    }
    const std::uint32_t cluster = partition.assignment[u];
    for (VertexId v = 0; v < n; ++v) {
      if (v != u && partition.assignment[v] == cluster && !g.has_edge(u, v)) {
        out.push_back(v);
      }
    }
  } else {
    std::vector<bool> seen(n, false);
    seen[u] = true;
    for (VertexId w : g.neighbors(u)) seen[w] = true;
    for (VertexId w : g.neighbors(u)) {
      for (VertexId x : g.neighbors(w)) {
        if (!seen[x]) {
          seen[x] = true;
          out.push_back(x);
        }
      }
    }
    std::sort(out.begin(), out.end());
  }
  return out;
}

struct Recommendation {
  VertexId candidate = 0;
  double score = 0.0;
  friend bool operator==(const Recommendation&, const Recommendation&) = default;
};

/// Per-target ranked candidate lists. lists[u] is sorted by score
/// descending with ascending-id tie break and holds at most top_n entries.
struct Recommendations {
  std::vector<std::vector<Recommendation>> lists;
  std::string scorer_name;
  CandidatePolicy policy = CandidatePolicy::intra_cluster;
};

/// Ranks every vertex's candidate set by the candidates' scores. The scores
/// must come from the observed graph; ranking with full-graph scores leaks
/// the held-out edges.
inline Recommendations recommend(const PruneSplit& split,
                                 const Partition& partition,
                                 const VertexScores& scores,
                                 CandidatePolicy policy, std::uint32_t top_n) {
  const Graph& g = split.observed;
  const VertexId n = g.vertex_count();
  if (top_n < 1) throw std::invalid_argument("recommend: top_n must be >= 1");
  if (scores.values.size() != n) {
    throw std::invalid_argument("recommend: score vector has dimension " +
                                std::to_string(scores.values.size()) +
                                ", graph has " + std::to_string(n));
  }
  auto ranks_before = [&scores](VertexId a, VertexId b) {
    if (scores.values[a] != scores.values[b]) {
      return scores.values[a] > scores.values[b];
    }
    return a < b;
  };

  Recommendations recs;
  recs.lists.resize(n);
  recs.scorer_name = scores.feature_name;
  recs.policy = policy;

  if (policy == CandidatePolicy::intra_cluster) {
    if (partition.assignment.size() != n) {
      throw std::invalid_argument("recommend: partition does not match graph");
    }
    // Scores are query independent, so each cluster is ranked once and every
    // target walks that order, skipping itself and its observed neighbors.
    std::vector<std::vector<VertexId>> ranked(partition.k);
    for (VertexId v = 0; v < n; ++v) {
      ranked[partition.assignment[v]].push_back(v);
    }
    for (auto& members : ranked) {
      std::sort(members.begin(), members.end(), ranks_before);
    }
    for (VertexId u = 0; u < n; ++u) {
      auto& list = recs.lists[u];
      for (VertexId v : ranked[partition.assignment[u]]) {
        if (v == u || g.has_edge(u, v)) continue;
        list.push_back(Recommendation{v, scores.values[v]});
        if (list.size() == top_n) break;
      }
    }
  } else {
    std::vector<bool> seen(n, false);
    std::vector<VertexId> found;
    for (VertexId u = 0; u < n; ++u) {
      found.clear();
      seen[u] = true;
      for (VertexId w : g.neighbors(u)) seen[w] = true;
      for (VertexId w : g.neighbors(u)) {
        for (VertexId x : g.neighbors(w)) {
          if (!seen[x]) {
            seen[x] = true;
            found.push_back(x);
          }
        }
      }
      seen[u] = false;
      for (VertexId w : g.neighbors(u)) seen[w] = false;
      for (VertexId x : found) seen[x] = false;
      std::sort(found.begin(), found.end(), ranks_before);
      if (found.size() > top_n) found.resize(top_n);
      auto& list = recs.lists[u];
      list.reserve(found.size());
      for (VertexId v : found) {
        list.push_back(Recommendation{v, scores.values[v]});
      }
    }
  }
  return recs;
}

}  // namespace linklab

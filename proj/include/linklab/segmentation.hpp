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

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "linklab/graph.hpp"
#include "linklab/random.hpp"

namespace linklab {

/// Assignment of every vertex to one of k clusters; no cluster is empty.
struct Partition {
  std::uint32_t k = 0;
  std::vector<std::uint32_t> assignment;
  std::vector<std::uint32_t> sizes;
};

namespace detail {

// Cosine distance between two vertices' adjacency rows. A zero row is at
// distance 1 from everything, including another zero row.
inline double row_distance(const Graph& g, VertexId a, VertexId b) {
  const auto ra = g.neighbors(a);
  const auto rb = g.neighbors(b);
  if (ra.empty() || rb.empty()) return 1.0;
  std::uint64_t common = 0;
  std::size_t i = 0, j = 0;
  while (i < ra.size() && j < rb.size()) {
    if (ra[i] < rb[j]) {
      ++i;
    } else if (ra[i] > rb[j]) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return 1.0 - static_cast<double>(common) /
                   std::sqrt(static_cast<double>(ra.size()) *
                             static_cast<double>(rb.size()));
}

}  // namespace detail

/// k-means over the vertices' adjacency indicator rows (each undirected
/// edge contributes the two arcs leaving its endpoints) with cosine
/// distance.
///
/// Centroids are seeded farthest-point style: the first center is drawn
/// from `seed` (or forced via `initial_center`), each further center is the
/// vertex maximizing the distance to its nearest chosen center. Assignment
/// ties and zero rows fall to the smallest cluster index; empty clusters
/// steal the vertex farthest from its own centroid. Iteration stops after a
/// sweep with no assignment changes, or after max_iter sweeps.
/// Deterministic given (g, k, seed).
inline Partition segment_kmeans_arcs(
    const Graph& g, std::uint32_t k, std::uint64_t seed,
    std::uint32_t max_iter = 50,
    std::optional<VertexId> initial_center = std::nullopt) {
  const VertexId n = g.vertex_count();
  if (k < 1) throw std::invalid_argument("segment: k must be at least 1");
  if (k > n) {
    throw std::invalid_argument("segment: k = " + std::to_string(k) +
                                " exceeds vertex count " + std::to_string(n));
  }

  // Farthest-point seeding on vertex rows.
  Rng rng = make_rng(seed);
  std::vector<VertexId> centers;
  centers.reserve(k);
  std::vector<bool> is_center(n, false);
  {
    VertexId first = initial_center.value_or(
        static_cast<VertexId>(bounded(rng, n)));
    if (first >= n) throw std::out_of_range("segment: initial center id");
    centers.push_back(first);
    is_center[first] = true;
    std::vector<double> nearest(n);
    for (VertexId u = 0; u < n; ++u) {
      nearest[u] = detail::row_distance(g, u, first);
    }
    while (centers.size() < k) {
      VertexId best = 0;
      double best_dist = -1.0;
      for (VertexId u = 0; u < n; ++u) {
        if (!is_center[u] && nearest[u] > best_dist) {
          best_dist = nearest[u];
          best = u;
        }
      }
      centers.push_back(best);
      is_center[best] = true;
      for (VertexId u = 0; u < n; ++u) {
        nearest[u] = std::min(nearest[u], detail::row_distance(g, u, best));
      }
    }
  }

  std::vector<std::uint32_t> assignment(n, 0);
  std::vector<double> assigned_dist(n, 1.0);
  std::vector<std::uint32_t> sizes(k, 0);
  // Dense centroids: k rows over the n coordinates, plus their norms.
  std::vector<std::vector<double>> centroid(k, std::vector<double>(n, 0.0));
  std::vector<double> centroid_norm(k, 0.0);

  auto assign_sweep = [&]() -> std::uint64_t {
    std::uint64_t changes = 0;
    std::fill(sizes.begin(), sizes.end(), 0);
    for (VertexId u = 0; u < n; ++u) {
      const auto row = g.neighbors(u);
      const double row_norm = std::sqrt(static_cast<double>(row.size()));
      std::uint32_t best_c = 0;
      double best_dist = std::numeric_limits<double>::infinity();
      for (std::uint32_t c = 0; c < k; ++c) {
        double dist = 1.0;
        if (!row.empty() && centroid_norm[c] > 0.0) {
          double dot = 0.0;
          for (VertexId v : row) dot += centroid[c][v];
          dist = 1.0 - dot / (row_norm * centroid_norm[c]);
        }
        if (dist < best_dist) {
          best_dist = dist;
          best_c = c;
        }
      }
      if (assignment[u] != best_c) ++changes;
      assignment[u] = best_c;
      assigned_dist[u] = best_dist;
      ++sizes[best_c];
    }
    return changes;
  };

  auto repair_empty = [&]() -> std::uint64_t {
    std::uint64_t repairs = 0;
    for (std::uint32_t c = 0; c < k; ++c) {
      if (sizes[c] > 0) continue;
      VertexId victim = 0;
      double worst = -1.0;
      for (VertexId u = 0; u < n; ++u) {
        if (sizes[assignment[u]] < 2) continue;  // never empty another cluster
        if (assigned_dist[u] > worst) {
          worst = assigned_dist[u];
          victim = u;
        }
      }
      --sizes[assignment[victim]];
      assignment[victim] = c;
      assigned_dist[victim] = 0.0;  // it will define the centroid
      ++sizes[c];
      ++repairs;
    }
    return repairs;
  };

  // Initial assignment against the seed vertices' own rows.
  for (VertexId u = 0; u < n; ++u) {
    std::uint32_t best_c = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::uint32_t c = 0; c < k; ++c) {
      const double dist = detail::row_distance(g, u, centers[c]);
      if (dist < best_dist) {
        best_dist = dist;
        best_c = c;
      }
    }
    assignment[u] = best_c;
    assigned_dist[u] = best_dist;
    ++sizes[best_c];
  }
  repair_empty();

  for (std::uint32_t iter = 0; iter < max_iter; ++iter) {
    for (std::uint32_t c = 0; c < k; ++c) {
      std::fill(centroid[c].begin(), centroid[c].end(), 0.0);
    }
    for (VertexId u = 0; u < n; ++u) {
      const double w = 1.0 / sizes[assignment[u]];
      auto& row = centroid[assignment[u]];
      for (VertexId v : g.neighbors(u)) row[v] += w;
    }
    for (std::uint32_t c = 0; c < k; ++c) {
      double norm_sq = 0.0;
      for (double x : centroid[c]) norm_sq += x * x;
      centroid_norm[c] = std::sqrt(norm_sq);
    }
    const std::uint64_t changes = assign_sweep();
    const std::uint64_t repairs = repair_empty();
    if (changes == 0 && repairs == 0) break;
  }

  return Partition{k, std::move(assignment), std::move(sizes)};
}

/// Newman modularity of a partition: sum over clusters of
/// intra_edges/m - (degree_sum/(2m))^2.
inline double modularity(const Graph& g, const Partition& p) {
  if (g.edge_count() == 0) {
    throw std::invalid_argument("modularity needs at least one edge");
  }
  if (p.assignment.size() != g.vertex_count()) {
    throw std::invalid_argument("partition size does not match graph");
  }
  const double m = static_cast<double>(g.edge_count());
  std::vector<double> intra(p.k, 0.0);
  std::vector<double> deg_sum(p.k, 0.0);
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    deg_sum[p.assignment[u]] += g.degree(u);
    for (VertexId v : g.neighbors(u)) {
      if (v > u && p.assignment[u] == p.assignment[v]) {
        intra[p.assignment[u]] += 1.0;
      }
    }
  }
  double q = 0.0;
  for (std::uint32_t c = 0; c < p.k; ++c) {
    const double a = deg_sum[c] / (2.0 * m);
    q += intra[c] / m - a * a;
  }
  return q;
}

}  // namespace linklab

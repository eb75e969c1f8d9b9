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
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "linklab/graph.hpp"

namespace linklab {

/// One real score per vertex for a named query-independent feature.
struct VertexScores {
  std::string feature_name;
  std::vector<double> values;
  bool converged = true;  // false only when an iterative scorer hit its cap
};

enum class Feature { degree, transitivity, authority };

inline const char* feature_name(Feature f) {
  switch (f) {
    case Feature::degree: return "degree";
    case Feature::transitivity: return "transitivity";
    case Feature::authority: return "authority";
  }
  return "?";
}

inline Feature parse_feature(std::string_view s) {
  if (s == "degree") return Feature::degree;
  if (s == "transitivity") return Feature::transitivity;
  if (s == "authority") return Feature::authority;
  throw std::invalid_argument(
      "unknown feature '" + std::string(s) +
      "' (expected degree, transitivity, or authority)");
}

namespace detail {

inline std::uint64_t count_common(std::span<const VertexId> a,
                                  std::span<const VertexId> b) {
  std::uint64_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (a[i] > b[j]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace detail

/// Degree normalized by the maximum degree of the graph, so scores lie in
/// [0,1] and at least one vertex scores exactly 1.
inline VertexScores degree_coefficient(const Graph& g) {
  if (g.edge_count() == 0) {
    throw std::invalid_argument("degree coefficient needs at least one edge");
  }
  const VertexId n = g.vertex_count();
  VertexId max_deg = 0;
  for (VertexId u = 0; u < n; ++u) max_deg = std::max(max_deg, g.degree(u));
  VertexScores s{"degree", std::vector<double>(n), true};
  for (VertexId u = 0; u < n; ++u) {
    s.values[u] = static_cast<double>(g.degree(u)) / max_deg;
  }
  return s;
}

/// Local clustering: realized edges among a vertex's neighbors divided by
/// the d(d-1)/2 possible ones. Vertices of degree <= 1 have no closable
/// wedge and score 0.
inline VertexScores transitivity_coefficient(const Graph& g) {
  const VertexId n = g.vertex_count();
  VertexScores s{"transitivity", std::vector<double>(n), true};
  for (VertexId u = 0; u < n; ++u) {
    const auto nbrs = g.neighbors(u);
    const std::uint64_t d = nbrs.size();
    if (d <= 1) {
      s.values[u] = 0.0;
      continue;
    }
    std::uint64_t twice_links = 0;
    for (VertexId v : nbrs) twice_links += detail::count_common(nbrs, g.neighbors(v));
    const std::uint64_t links = twice_links / 2;
    s.values[u] = static_cast<double>(links) /
                  static_cast<double>(d * (d - 1) / 2);
  }
  return s;
}

/// HITS authority for undirected graphs, where hub and authority coincide:
/// the fixed point is the dominant eigenvector direction of the adjacency
/// operator. The power iteration applies A + I so it also converges on
/// bipartite graphs (A alone oscillates between the +/- lambda_1
/// eigenspaces there); the shift leaves eigenvectors unchanged. Stops when
/// the largest per-vertex change drops below tol; if max_iter is hit first,
/// the result is returned with converged = false.
inline VertexScores hits_authority(const Graph& g, double tol = 1e-8,
                                   std::uint32_t max_iter = 100) {
  if (g.edge_count() == 0) {
    throw std::invalid_argument("authority needs at least one edge");
  }
  const VertexId n = g.vertex_count();
  VertexScores s{"authority", std::vector<double>(n), false};
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  for (std::uint32_t iter = 0; iter < max_iter; ++iter) {
    for (VertexId u = 0; u < n; ++u) {
      double sum = x[u];
      for (VertexId v : g.neighbors(u)) sum += x[v];
      y[u] = sum;
    }
    double norm_sq = 0.0;
    for (VertexId u = 0; u < n; ++u) norm_sq += y[u] * y[u];
    const double inv_norm = 1.0 / std::sqrt(norm_sq);
    double delta = 0.0;
    for (VertexId u = 0; u < n; ++u) {
      y[u] *= inv_norm;
      delta = std::max(delta, std::abs(y[u] - x[u]));
    }
    x.swap(y);
    if (delta < tol) {
      s.converged = true;
      break;
    }
  }
  s.values = std::move(x);
  return s;
}

inline VertexScores compute_scores(const Graph& g, Feature f) {
  switch (f) {
    case Feature::degree: return degree_coefficient(g);
    case Feature::transitivity: return transitivity_coefficient(g);
    case Feature::authority: return hits_authority(g);
  }
  throw std::invalid_argument("unknown feature");
}

enum class FoafKind { common_neighbors, jaccard, adamic_adar, salton, sorensen };

inline FoafKind parse_foaf_kind(std::string_view s) {
  if (s == "common_neighbors" || s == "cn") return FoafKind::common_neighbors;
  if (s == "jaccard") return FoafKind::jaccard;
  if (s == "adamic_adar" || s == "aa") return FoafKind::adamic_adar;
  if (s == "salton") return FoafKind::salton;
  if (s == "sorensen") return FoafKind::sorensen;
  throw std::invalid_argument("unknown FOAF index '" + std::string(s) + "'");
}

/// Pairwise neighborhood-overlap indices. Cases with a zero denominator
/// return 0; Adamic-Adar skips common neighbors of degree <= 1.
inline double foaf_index(const Graph& g, VertexId u, VertexId v,
                         FoafKind kind) {
  if (u == v) throw std::invalid_argument("foaf_index needs u != v");
  const auto nu = g.neighbors(u);
  const auto nv = g.neighbors(v);
  const double du = static_cast<double>(nu.size());
  const double dv = static_cast<double>(nv.size());
  switch (kind) {
    case FoafKind::common_neighbors:
      return static_cast<double>(detail::count_common(nu, nv));
    case FoafKind::jaccard: {
      const double common = static_cast<double>(detail::count_common(nu, nv));
      const double uni = du + dv - common;
      return uni == 0.0 ? 0.0 : common / uni;
    }
    case FoafKind::adamic_adar: {
      double sum = 0.0;
      std::size_t i = 0, j = 0;
      while (i < nu.size() && j < nv.size()) {
        if (nu[i] < nv[j]) {
          ++i;
        } else if (nu[i] > nv[j]) {
          ++j;
        } else {
          const VertexId w = nu[i];
          if (g.degree(w) > 1) sum += 1.0 / std::log(static_cast<double>(g.degree(w)));
          ++i;
          ++j;
        }
      }
      return sum;
    }
    case FoafKind::salton: {
      const double common = static_cast<double>(detail::count_common(nu, nv));
      const double denom = std::sqrt(du * dv);
      return denom == 0.0 ? 0.0 : common / denom;
    }
    case FoafKind::sorensen: {
      const double common = static_cast<double>(detail::count_common(nu, nv));
      return (du + dv) == 0.0 ? 0.0 : 2.0 * common / (du + dv);
    }
  }
  throw std::invalid_argument("unknown FOAF kind");
}

}  // namespace linklab

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
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "linklab/graph.hpp"
#include "linklab/random.hpp"

namespace linklab {

enum class Model { erdos_renyi, watts_strogatz, barabasi_albert };

inline const char* model_name(Model m) {
  switch (m) {
    case Model::erdos_renyi: return "er";
    case Model::watts_strogatz: return "ws";
    case Model::barabasi_albert: return "ba";
  }
  return "?";
}

inline Model parse_model(std::string_view s) {
  if (s == "er" || s == "erdos_renyi") return Model::erdos_renyi;
  if (s == "ws" || s == "watts_strogatz") return Model::watts_strogatz;
  if (s == "ba" || s == "barabasi_albert") return Model::barabasi_albert;
  throw std::invalid_argument("unknown model '" + std::string(s) +
                              "' (expected er, ws, or ba)");
}

/// Parameters for one synthetic network; only the fields of the chosen
/// model are read.
struct GenSpec {
  Model model = Model::watts_strogatz;
  VertexId n = 10000;
  std::uint64_t er_edges = 0;     // er: exact edge count
  VertexId ws_ring_k = 5;         // ws: lattice neighbors per side
  double ws_p_rewire = 0.1;       // ws: rewiring probability
  VertexId ba_m_attach = 5;       // ba: edges per new vertex
  std::uint64_t seed = 1;
};

/// G(n, m): exactly m_edges distinct edges drawn uniformly from all vertex
/// pairs (Floyd's subset-sampling algorithm).
inline Graph gen_erdos_renyi(VertexId n, std::uint64_t m_edges,
                             std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("er: n must be at least 2");
  const std::uint64_t max_m = max_edge_count(n);
  if (m_edges > max_m) {
    throw std::invalid_argument("er: m_edges " + std::to_string(m_edges) +
                                " exceeds n(n-1)/2 = " + std::to_string(max_m));
  }
  Rng rng = make_rng(seed);
  std::unordered_set<std::uint64_t> picked;
  picked.reserve(m_edges * 2);
  for (std::uint64_t j = max_m - m_edges; j < max_m; ++j) {
    const std::uint64_t t = bounded(rng, j + 1);
    if (!picked.insert(t).second) picked.insert(j);
  }
  EdgeList edges;
  edges.reserve(m_edges);
  for (std::uint64_t index : picked) {
    edges.push_back(detail::pair_from_index(n, index));
  }
  return build_graph(n, std::move(edges));
}

/// Ring lattice with ring_k neighbors per side, then one pass over the
/// lattice edges rewiring each far endpoint with probability p_rewire to a
/// uniform vertex. Draws that would create a self-loop or duplicate an
/// existing edge are redrawn; if a vertex already neighbors everyone, the
/// original edge is kept. Edge count is always n * ring_k.
inline Graph gen_watts_strogatz(VertexId n, VertexId ring_k, double p_rewire,
                                std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("ws: n must be at least 2");
  if (ring_k < 1 || 2ull * ring_k >= n) {
    throw std::invalid_argument("ws: ring_k must satisfy 1 <= ring_k < n/2");
  }
  if (!(p_rewire >= 0.0 && p_rewire <= 1.0)) {
    throw std::invalid_argument("ws: p_rewire must be in [0,1]");
  }
  Rng rng = make_rng(seed);
  std::vector<std::unordered_set<VertexId>> adj(n);
  auto add = [&adj](VertexId a, VertexId b) {
    adj[a].insert(b);
    adj[b].insert(a);
  };
  auto remove = [&adj](VertexId a, VertexId b) {
    adj[a].erase(b);
    adj[b].erase(a);
  };
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId j = 1; j <= ring_k; ++j) {
      add(u, static_cast<VertexId>((u + j) % n));
    }
  }
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId j = 1; j <= ring_k; ++j) {
      const VertexId old = static_cast<VertexId>((u + j) % n);
      if (unit_real(rng) >= p_rewire) continue;
      if (adj[u].size() >= n - 1) continue;  // no legal target, keep edge
      VertexId fresh;
      do {
        fresh = static_cast<VertexId>(bounded(rng, n));
      } while (fresh == u || adj[u].contains(fresh));
      remove(u, old);
      add(u, fresh);
    }
  }
  EdgeList edges;
  edges.reserve(static_cast<std::size_t>(n) * ring_k);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : adj[u]) {
      if (v > u) edges.push_back(Edge{u, v});
    }
  }
  return build_graph(n, std::move(edges));
}

/// Preferential attachment: seed clique on m_attach + 1 vertices, then each
/// new vertex attaches to m_attach distinct existing vertices drawn with
/// probability proportional to current degree. Total edge count is
/// m0(m0-1)/2 + (n - m0) * m_attach with m0 = m_attach + 1.
inline Graph gen_barabasi_albert(VertexId n, VertexId m_attach,
                                 std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("ba: n must be at least 2");
  if (m_attach < 1 || m_attach >= n) {
    throw std::invalid_argument("ba: m_attach must satisfy 1 <= m_attach < n");
  }
  Rng rng = make_rng(seed);
  const VertexId m0 = m_attach + 1;
  EdgeList edges;
  edges.reserve(max_edge_count(m0) +
                static_cast<std::size_t>(n - m0) * m_attach);
  // One entry per degree unit; sampling an index uniformly is sampling a
  // vertex proportionally to its degree.
  std::vector<VertexId> degree_urn;
  degree_urn.reserve(2ull * (max_edge_count(m0) +
                             static_cast<std::uint64_t>(n - m0) * m_attach));
  for (VertexId u = 0; u < m0; ++u) {
    for (VertexId v = u + 1; v < m0; ++v) {
      edges.push_back(Edge{u, v});
      degree_urn.push_back(u);
      degree_urn.push_back(v);
    }
  }
  std::vector<VertexId> chosen;
  chosen.reserve(m_attach);
  for (VertexId v = m0; v < n; ++v) {
    chosen.clear();
    while (chosen.size() < m_attach) {
      const VertexId target = degree_urn[bounded(rng, degree_urn.size())];
      if (std::find(chosen.begin(), chosen.end(), target) == chosen.end()) {
        chosen.push_back(target);
      }
    }
    for (VertexId target : chosen) {
      edges.push_back(Edge{target, v});
      degree_urn.push_back(target);
      degree_urn.push_back(v);
    }
  }
  return build_graph(n, std::move(edges));
}

inline Graph generate(const GenSpec& spec) {
  switch (spec.model) {
    case Model::erdos_renyi:
      return gen_erdos_renyi(spec.n, spec.er_edges, spec.seed);
    case Model::watts_strogatz:
      return gen_watts_strogatz(spec.n, spec.ws_ring_k, spec.ws_p_rewire,
                                spec.seed);
    case Model::barabasi_albert:
      return gen_barabasi_albert(spec.n, spec.ba_m_attach, spec.seed);
  }
  throw std::invalid_argument("unknown model");
}

}  // namespace linklab

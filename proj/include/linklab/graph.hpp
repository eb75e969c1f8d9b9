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
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace linklab {

using VertexId = std::uint32_t;

/// Unordered vertex pair; canonical form has u < v.
struct Edge {
  VertexId u{};
  VertexId v{};
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

/// Error for malformed text inputs; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Immutable undirected simple graph over dense vertex ids 0..n-1.
///
/// Stored in CSR form: each neighbor list is strictly increasing and every
/// edge appears in both endpoint lists. Instances never change after
/// construction, so concurrent reads need no synchronization.
class Graph {
 public:
  Graph() = default;

  VertexId vertex_count() const { return n_; }
  std::uint64_t edge_count() const { return m_; }

  /// Sorted neighbors of u.
  std::span<const VertexId> neighbors(VertexId u) const {
    require_vertex(u);
    return std::span<const VertexId>(adj_.data() + offsets_[u],
                                     adj_.data() + offsets_[u + 1]);
  }

  VertexId degree(VertexId u) const {
    require_vertex(u);
    return static_cast<VertexId>(offsets_[u + 1] - offsets_[u]);
  }

  /// True iff {u,v} is an edge; (u,u) is never an edge.
  bool has_edge(VertexId u, VertexId v) const {
    require_vertex(u);
    require_vertex(v);
    if (u == v) return false;
    if (degree(u) > degree(v)) std::swap(u, v);
    const auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
  }

  /// Canonical edge list: u < v, lexicographically sorted.
  EdgeList edges() const {
    EdgeList out;
    out.reserve(m_);
    for (VertexId u = 0; u < n_; ++u) {
      for (VertexId v : neighbors(u)) {
        if (v > u) out.push_back(Edge{u, v});
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;
  friend Graph build_graph(VertexId n, EdgeList edges);

 private:
  void require_vertex(VertexId u) const {
    if (u >= n_) {
      throw std::out_of_range("vertex id " + std::to_string(u) +
                              " out of range (n=" + std::to_string(n_) + ")");
    }
  }

  VertexId n_ = 0;
  std::uint64_t m_ = 0;
  std::vector<std::uint64_t> offsets_ = {0};
  std::vector<VertexId> adj_;
};

/// Builds a graph from a raw edge list. Reversed and duplicate pairs are
/// deduplicated; self-loops and out-of-range endpoints are rejected.
inline Graph build_graph(VertexId n, EdgeList edges) {
  for (Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument(
          "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
          ") has an endpoint outside 0.." + std::to_string(n) + "-1");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.n_ = n;
  g.m_ = edges.size();
  std::vector<std::uint64_t> deg(n, 0);
  for (const Edge& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (VertexId u = 0; u < n; ++u) g.offsets_[u + 1] = g.offsets_[u] + deg[u];
  g.adj_.resize(2 * g.m_);
  // Two passes keep each row sorted: ids below the row's vertex first, then
  // ids above it, both in ascending order.
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) g.adj_[cursor[e.v]++] = e.u;
  for (const Edge& e : edges) g.adj_[cursor[e.u]++] = e.v;
  return g;
}

namespace detail {

inline bool parse_u32(std::string_view token, VertexId& out) {
  std::uint64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value > 0xffffffffull) return false;
  out = static_cast<VertexId>(value);
  return true;
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace detail

/// Reads the edge-list text format: one edge per line as two base-10 vertex
/// ids separated by whitespace, '#' lines ignored, optional first content
/// line "n=<int>". Without the header, n is inferred as 1 + max id.
inline std::pair<VertexId, EdgeList> load_edge_list(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  EdgeList edges;
  VertexId header_n = 0;
  bool has_header = false;
  bool seen_content = false;
  VertexId max_id = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    if (!seen_content && tokens[0].substr(0, 2) == "n=") {
      seen_content = true;
      if (tokens.size() != 1 ||
          !detail::parse_u32(tokens[0].substr(2), header_n)) {
        throw ParseError("malformed n= header", lineno);
      }
      has_header = true;
      continue;
    }
    seen_content = true;
    Edge e;
    if (tokens.size() != 2 || !detail::parse_u32(tokens[0], e.u) ||
        !detail::parse_u32(tokens[1], e.v)) {
      throw ParseError("expected two vertex ids", lineno);
    }
    max_id = std::max({max_id, e.u, e.v});
    edges.push_back(e);
  }
  if (in.bad()) throw std::runtime_error("I/O error reading " + path.string());
  const VertexId n = has_header ? header_n : (edges.empty() ? 0 : max_id + 1);
  return {n, std::move(edges)};
}

/// Writes an edge list with an explicit "n=" header so isolated vertices
/// survive a round trip. Pairs are emitted canonically (u < v, sorted).
inline void save_edge_list(VertexId n, const EdgeList& edges,
                           const std::filesystem::path& path) {
  EdgeList canon = edges;
  for (Edge& e : canon) {
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge endpoint outside 0..n-1");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() +
                                     " for writing");
  out << "n=" << n << "\n";
  for (const Edge& e : canon) out << e.u << " " << e.v << "\n";
  out.flush();
  if (!out) throw std::runtime_error("I/O error writing " + path.string());
}

inline void save_edge_list(const Graph& g, const std::filesystem::path& path) {
  save_edge_list(g.vertex_count(), g.edges(), path);
}

inline Graph load_graph(const std::filesystem::path& path) {
  auto [n, edges] = load_edge_list(path);
  return build_graph(n, std::move(edges));
}

inline std::uint64_t max_edge_count(VertexId n) {
  return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

namespace detail {

// Decodes a lexicographic pair index in [0, n(n-1)/2) to (u, v) with u < v.
inline Edge pair_from_index(VertexId n, std::uint64_t index) {
  const double nd = static_cast<double>(n);
  const double disc =
      (2.0 * nd - 1.0) * (2.0 * nd - 1.0) - 8.0 * static_cast<double>(index);
  auto row_start = [n](std::uint64_t u) { return u * (2ull * n - u - 1) / 2; };
  std::uint64_t u = static_cast<std::uint64_t>(
      (2.0 * nd - 1.0 - std::sqrt(std::max(disc, 0.0))) / 2.0);
  if (u > n - 2) u = n - 2;
  while (u > 0 && row_start(u) > index) --u;
  while (row_start(u + 1) <= index) ++u;
  const std::uint64_t v = u + 1 + (index - row_start(u));
  return Edge{static_cast<VertexId>(u), static_cast<VertexId>(v)};
}

}  // namespace detail

}  // namespace linklab

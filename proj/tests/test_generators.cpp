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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "linklab/generators.hpp"

using namespace linklab;

namespace {

void check_graph_invariants(const Graph& g) {
  std::uint64_t degree_sum = 0;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const auto nbrs = g.neighbors(u);
    degree_sum += nbrs.size();
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      CHECK(nbrs[i] != u);
      if (i > 0) CHECK(nbrs[i - 1] < nbrs[i]);
      CHECK(g.has_edge(nbrs[i], u));
    }
  }
  CHECK(degree_sum == 2 * g.edge_count());
}

}  // namespace

TEST_CASE("erdos-renyi edge budgets") {
  CHECK(gen_erdos_renyi(5, 10, 3).edge_count() == 10);  // K5
  CHECK(gen_erdos_renyi(5, 0, 3).edge_count() == 0);
  CHECK_THROWS_AS(gen_erdos_renyi(5, 11, 3), std::invalid_argument);
}

TEST_CASE("erdos-renyi is deterministic per seed") {
  const Graph a = gen_erdos_renyi(100, 300, 42);
  const Graph b = gen_erdos_renyi(100, 300, 42);
  const Graph c = gen_erdos_renyi(100, 300, 43);
  CHECK(a.edges() == b.edges());
  CHECK(a.edges() != c.edges());
  check_graph_invariants(a);
}

TEST_CASE("erdos-renyi samples pairs uniformly") {
  // n=10, m=20: every pair should appear with frequency 20/45 ~ 0.444.
  const int runs = 10000;
  int containing = 0;
  for (int seed = 0; seed < runs; ++seed) {
    if (gen_erdos_renyi(10, 20, seed).has_edge(2, 7)) ++containing;
  }
  const double freq = static_cast<double>(containing) / runs;
  CHECK(freq >= 0.42);
  CHECK(freq <= 0.47);
}

TEST_CASE("watts-strogatz without rewiring is the ring lattice") {
  const Graph cycle = gen_watts_strogatz(6, 1, 0.0, 9);
  CHECK(cycle.edge_count() == 6);
  for (VertexId u = 0; u < 6; ++u) {
    CHECK(cycle.degree(u) == 2);
    CHECK(cycle.has_edge(u, (u + 1) % 6));
  }

  const Graph lattice = gen_watts_strogatz(20, 2, 0.0, 9);
  CHECK(lattice.edge_count() == 40);
  for (VertexId u = 0; u < 20; ++u) CHECK(lattice.degree(u) == 4);
}

TEST_CASE("watts-strogatz preserves the edge count at any rewiring rate") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = gen_watts_strogatz(20, 2, 1.0, seed);
    CHECK(g.edge_count() == 40);
    check_graph_invariants(g);
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CHECK(gen_watts_strogatz(200, 5, 0.1, seed).edge_count() == 1000);
  }
}

TEST_CASE("watts-strogatz is deterministic per seed") {
  CHECK(gen_watts_strogatz(50, 3, 0.3, 5).edges() ==
        gen_watts_strogatz(50, 3, 0.3, 5).edges());
}

TEST_CASE("watts-strogatz parameter validation") {
  CHECK_THROWS_AS(gen_watts_strogatz(6, 3, 0.1, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_watts_strogatz(6, 0, 0.1, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_watts_strogatz(6, 1, 1.5, 1), std::invalid_argument);
}

TEST_CASE("barabasi-albert boundary: n = m_attach + 1 is a clique") {
  const Graph g = gen_barabasi_albert(4, 3, 1);
  CHECK(g.edge_count() == 6);
  for (VertexId u = 0; u < 4; ++u) CHECK(g.degree(u) == 3);
}

TEST_CASE("barabasi-albert edge count follows the closed form") {
  // m0 = m_attach + 1 seed clique, then m_attach edges per later vertex.
  const Graph g = gen_barabasi_albert(1000, 2, 17);
  CHECK(g.edge_count() == 3 + 997 * 2);
  const Graph h = gen_barabasi_albert(500, 5, 17);
  CHECK(h.edge_count() == 15 + 494 * 5);
}

TEST_CASE("barabasi-albert minimum degree and determinism") {
  const Graph a = gen_barabasi_albert(400, 3, 23);
  const Graph b = gen_barabasi_albert(400, 3, 23);
  CHECK(a.edges() == b.edges());
  check_graph_invariants(a);
  for (VertexId u = 0; u < a.vertex_count(); ++u) CHECK(a.degree(u) >= 3);
  CHECK_THROWS_AS(gen_barabasi_albert(4, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_barabasi_albert(4, 4, 1), std::invalid_argument);
}

TEST_CASE("barabasi-albert degree tail is heavier than the bulk") {
  // Quick scale check; the full slope fit runs in the acceptance suite.
  const Graph g = gen_barabasi_albert(3000, 3, 7);
  VertexId max_deg = 0;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    max_deg = std::max(max_deg, g.degree(u));
  }
  CHECK(max_deg > 40);
}

TEST_CASE("generate dispatches on the spec") {
  GenSpec spec;
  spec.model = Model::erdos_renyi;
  spec.n = 30;
  spec.er_edges = 50;
  spec.seed = 3;
  CHECK(generate(spec).edge_count() == 50);
  CHECK(parse_model("ws") == Model::watts_strogatz);
  CHECK_THROWS_AS(parse_model("xx"), std::invalid_argument);
}

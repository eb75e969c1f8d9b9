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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "linklab/features.hpp"
#include "oracles.hpp"

using namespace linklab;

namespace {

Graph permuted(const Graph& g, const std::vector<VertexId>& perm) {
  EdgeList edges;
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return build_graph(g.vertex_count(), std::move(edges));
}

}  // namespace

TEST_CASE("degree coefficient on star, regular, and path graphs") {
  const Graph star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto s = degree_coefficient(star);
  CHECK(s.values[0] == 1.0);
  CHECK(s.values[1] == doctest::Approx(1.0 / 3));

  const Graph k3 = build_graph(3, {{0, 1}, {0, 2}, {1, 2}});
  for (double v : degree_coefficient(k3).values) CHECK(v == 1.0);

  const Graph path = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto p = degree_coefficient(path);
  CHECK(p.values == std::vector<double>{0.5, 1.0, 1.0, 0.5});

  CHECK_THROWS_AS(degree_coefficient(build_graph(3, {})),
                  std::invalid_argument);
}

TEST_CASE("degree coefficient peaks at exactly 1") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 10; ++rep) {
    Graph g = testutil::random_graph(40, 0.1, rng);
    if (g.edge_count() == 0) continue;
    const auto s = degree_coefficient(g);
    CHECK(*std::max_element(s.values.begin(), s.values.end()) == 1.0);
    for (double v : s.values) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
}

TEST_CASE("transitivity on triangle and path") {
  const Graph k3 = build_graph(3, {{0, 1}, {0, 2}, {1, 2}});
  for (double v : transitivity_coefficient(k3).values) CHECK(v == 1.0);

  const Graph path = build_graph(3, {{0, 1}, {1, 2}});
  CHECK(transitivity_coefficient(path).values[1] == 0.0);
}

TEST_CASE("transitivity matches brute-force neighbor-pair counting") {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 5; ++rep) {
    const Graph g = testutil::random_graph(50, 0.15, rng);
    const auto fast = transitivity_coefficient(g).values;
    const auto slow = oracle::transitivity_brute(g);
    for (VertexId u = 0; u < 50; ++u) CHECK(fast[u] == slow[u]);
  }
}

TEST_CASE("transitivity is relabeling-equivariant") {
  std::mt19937_64 rng(29);
  const Graph g = testutil::random_graph(30, 0.2, rng);
  std::vector<VertexId> perm(30);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  const auto base = transitivity_coefficient(g).values;
  const auto moved = transitivity_coefficient(permuted(g, perm)).values;
  for (VertexId u = 0; u < 30; ++u) CHECK(moved[perm[u]] == base[u]);
}

TEST_CASE("authority on a single edge and on regular graphs") {
  const Graph pair = build_graph(2, {{0, 1}});
  const auto s = hits_authority(pair);
  CHECK(s.converged);
  CHECK(s.values[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
  CHECK(s.values[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));

  const Graph cycle =
      build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  for (double v : hits_authority(cycle).values) {
    CHECK(v == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-7));
  }

  CHECK_THROWS_AS(hits_authority(build_graph(2, {})), std::invalid_argument);
}

TEST_CASE("authority on the 4-leaf star matches the dense eigenvector") {
  const Graph star = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const auto s = hits_authority(star, 1e-12, 1000);
  CHECK(s.converged);
  CHECK(s.values[0] == doctest::Approx(2.0 / std::sqrt(8.0)).epsilon(1e-9));
  for (VertexId leaf = 1; leaf <= 4; ++leaf) {
    CHECK(s.values[leaf] ==
          doctest::Approx(1.0 / std::sqrt(8.0)).epsilon(1e-9));
  }
  const auto dense = oracle::principal_eigenvector(star);
  for (VertexId u = 0; u < 5; ++u) {
    CHECK(s.values[u] == doctest::Approx(dense[u]).epsilon(1e-8));
  }
}

TEST_CASE("authority has unit L2 norm and nonnegative entries") {
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 10; ++rep) {
    Graph g = testutil::random_graph(25, 0.2, rng);
    if (g.edge_count() == 0) continue;
    const auto s = hits_authority(g, 1e-10, 5000);
    double norm_sq = 0.0;
    for (double v : s.values) {
      CHECK(v >= 0.0);
      norm_sq += v * v;
    }
    CHECK(std::sqrt(norm_sq) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("authority is relabeling-equivariant") {
  std::mt19937_64 rng(47);
  const Graph g = testutil::random_graph(20, 0.3, rng);
  std::vector<VertexId> perm(20);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  const auto base = hits_authority(g, 1e-12, 20000).values;
  const auto moved = hits_authority(permuted(g, perm), 1e-12, 20000).values;
  for (VertexId u = 0; u < 20; ++u) {
    CHECK(moved[perm[u]] == doctest::Approx(base[u]).epsilon(1e-9));
  }
}

TEST_CASE("authority reports non-convergence through the flag") {
  const Graph star = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const auto s = hits_authority(star, 1e-15, 1);
  CHECK_FALSE(s.converged);
  CHECK(s.values.size() == 5);
}

TEST_CASE("foaf index worked example") {
  // Neighborhoods: 0 -> {1,2}, 4 -> {2,3}, vertex 2 has degree 4.
  const Graph g = build_graph(6,
                              {{0, 1}, {0, 2}, {4, 2}, {4, 3}, {2, 5}, {2, 1}});
  CHECK(g.degree(2) == 4);
  CHECK(foaf_index(g, 0, 4, FoafKind::common_neighbors) == 1.0);
  CHECK(foaf_index(g, 0, 4, FoafKind::jaccard) == doctest::Approx(1.0 / 3));
  CHECK(foaf_index(g, 0, 4, FoafKind::adamic_adar) ==
        doctest::Approx(1.0 / std::log(4.0)));
  CHECK(foaf_index(g, 0, 4, FoafKind::salton) == doctest::Approx(0.5));
  CHECK(foaf_index(g, 0, 4, FoafKind::sorensen) == doctest::Approx(0.5));
}

TEST_CASE("foaf index on identical and disjoint neighborhoods") {
  // 0 and 4 both neighbor exactly {1,2,3}.
  const Graph same = build_graph(5, {{0, 1}, {0, 2}, {0, 3},
                                     {4, 1}, {4, 2}, {4, 3}});
  CHECK(foaf_index(same, 0, 4, FoafKind::jaccard) == 1.0);
  CHECK(foaf_index(same, 0, 4, FoafKind::sorensen) == 1.0);

  const Graph disjoint = build_graph(6, {{0, 1}, {2, 3}, {4, 5}});
  for (FoafKind kind :
       {FoafKind::common_neighbors, FoafKind::jaccard, FoafKind::adamic_adar,
        FoafKind::salton, FoafKind::sorensen}) {
    CHECK(foaf_index(disjoint, 0, 2, kind) == 0.0);
  }
}

TEST_CASE("foaf indices are symmetric and match set arithmetic") {
  std::mt19937_64 rng(53);
  const Graph g = testutil::random_graph(200, 0.05, rng);
  for (int rep = 0; rep < 1000; ++rep) {
    const VertexId u = static_cast<VertexId>(rng() % 200);
    VertexId v = static_cast<VertexId>(rng() % 200);
    if (u == v) v = (v + 1) % 200;

    std::set<VertexId> nu(g.neighbors(u).begin(), g.neighbors(u).end());
    std::set<VertexId> nv(g.neighbors(v).begin(), g.neighbors(v).end());
    std::vector<VertexId> common;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                          std::back_inserter(common));
    const double cn = static_cast<double>(common.size());
    const double du = static_cast<double>(nu.size());
    const double dv = static_cast<double>(nv.size());
    double aa = 0.0;
    for (VertexId w : common) {
      if (g.degree(w) > 1) aa += 1.0 / std::log(static_cast<double>(g.degree(w)));
    }

    CHECK(foaf_index(g, u, v, FoafKind::common_neighbors) == cn);
    CHECK(foaf_index(g, u, v, FoafKind::jaccard) ==
          (du + dv - cn == 0 ? 0.0 : cn / (du + dv - cn)));
    CHECK(foaf_index(g, u, v, FoafKind::adamic_adar) == aa);
    CHECK(foaf_index(g, u, v, FoafKind::salton) ==
          (du * dv == 0 ? 0.0 : cn / std::sqrt(du * dv)));
    CHECK(foaf_index(g, u, v, FoafKind::sorensen) ==
          (du + dv == 0 ? 0.0 : 2 * cn / (du + dv)));

    for (FoafKind kind :
         {FoafKind::common_neighbors, FoafKind::jaccard, FoafKind::adamic_adar,
          FoafKind::salton, FoafKind::sorensen}) {
      CHECK(foaf_index(g, u, v, kind) == foaf_index(g, v, u, kind));
    }
  }
  CHECK_THROWS_AS(foaf_index(g, 3, 3, FoafKind::jaccard),
                  std::invalid_argument);
  CHECK_THROWS_AS(foaf_index(g, 0, 999, FoafKind::jaccard),
                  std::out_of_range);
}

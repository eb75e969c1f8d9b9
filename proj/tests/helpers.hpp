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

#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "linklab/graph.hpp"

namespace testutil {

// Naive Bernoulli edge sampler, independent of the library's generators.
inline linklab::EdgeList random_edges(linklab::VertexId n, double p,
                                      std::mt19937_64& rng) {
  linklab::EdgeList edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (linklab::VertexId u = 0; u < n; ++u) {
    for (linklab::VertexId v = u + 1; v < n; ++v) {
      if (coin(rng) < p) edges.push_back(linklab::Edge{u, v});
    }
  }
  return edges;
}

inline linklab::Graph random_graph(linklab::VertexId n, double p,
                                   std::mt19937_64& rng) {
  return linklab::build_graph(n, random_edges(n, p, rng));
}

// Scratch directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    auto base = std::filesystem::temp_directory_path();
    for (int i = 0;; ++i) {
      auto candidate = base / ("linklab_" + tag + "_" + std::to_string(i));
      std::error_code ec;
      if (std::filesystem::create_directories(candidate, ec)) {
        path_ = candidate;
        break;
      }
    }
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

}  // namespace testutil

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

#include <cstdint>
#include <random>

namespace linklab {

/// All randomized routines draw from a seeded mt19937_64. The raw engine
/// stream is standardized, so identical seeds give identical results on any
/// platform; std::*_distribution adapters are avoided because their output
/// is implementation-defined.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer, used to decorrelate user seeds and stage tags.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline Rng make_rng(std::uint64_t seed) { return Rng(splitmix64(seed)); }

/// Deterministic sub-seed for stage `tag` of a run seeded with `base`.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag) {
  return splitmix64(base + 0x9e3779b97f4a7c15ull * (tag + 1));
}

/// Uniform draw from [0, bound), bound >= 1. Threshold rejection keeps the
/// draw unbiased.
inline std::uint64_t bounded(Rng& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

/// Uniform double in [0, 1) with 53 random bits.
inline double unit_real(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace linklab

// Copyright 2026 The qsd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSD_RNG_HPP
#define QSD_RNG_HPP

#include <cstdint>
#include <random>

namespace qsd {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic seed fan-out: every stage of a run draws its seed from the
// master seed, a fixed stream id and a per-task index. Parallel tasks get
// independent streams without sharing generator state.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t index = 0) {
  return splitmix64(splitmix64(master ^ (stream * 0xd1342543de82ef95ULL)) + index);
}

// Stream ids used by the pipeline (kept stable for reproducibility).
namespace seed_stream {
constexpr std::uint64_t kOptimizer = 1;
constexpr std::uint64_t kFinalSampling = 2;
constexpr std::uint64_t kRecovery = 3;
constexpr std::uint64_t kLanczos = 4;
}  // namespace seed_stream

}  // namespace qsd

#endif  // QSD_RNG_HPP

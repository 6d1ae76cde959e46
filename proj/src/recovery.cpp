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

#include "qsd/recovery.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "qsd/rng.hpp"
#include "qsd/subspace.hpp"

namespace qsd {

bool SectorSpec::contains(Configuration z) const {
  return std::popcount(z.bits & up_mask()) == n_up &&
         std::popcount(z.bits & down_mask()) == n_down;
}

std::uint64_t SectorSpec::dimension() const {
  auto binom = [](int n, int k) {
    if (k < 0 || k > n) return std::uint64_t(0);
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
  };
  return binom(n_spatial, n_up) * binom(n_spatial, n_down);
}

std::pair<SampleSet, SampleSet> post_select(const SampleSet& samples,
                                            const SectorSpec& sector) {
  SampleSet s_n, s_x;
  for (const auto& [z, count] : samples.counts) {
    (sector.contains(z) ? s_n : s_x).add(z, count);
  }
  return {std::move(s_n), std::move(s_x)};
}

double flip_weight(double y, const RecoveryConfig& cfg) {
  if (y < 0.0 || y > 1.0) throw std::invalid_argument("discrepancy must be in [0, 1]");
  if (y <= cfg.h) return cfg.delta * y / cfg.h;
  return cfg.delta + (1.0 - cfg.delta) * (y - cfg.h) / (1.0 - cfg.h);
}

SampleSet RecoveryResult::combined() const {
  SampleSet all = kept;
  for (const auto& [z, count] : recovered.counts) all.add(z, count);
  return all;
}

std::vector<double> average_occupations(const SampleSet& s_n, const PauliSum& h,
                                        const SectorSpec& sector, int batches, Rng& rng) {
  std::vector<Configuration> unique_configs;
  unique_configs.reserve(s_n.counts.size());
  for (const auto& [z, count] : s_n.counts) unique_configs.push_back(z);
  std::shuffle(unique_configs.begin(), unique_configs.end(), rng);

  const int n_qubits = sector.n_qubits();
  const int k = std::max(1, std::min<int>(batches, static_cast<int>(unique_configs.size())));
  std::vector<double> occ(n_qubits, 0.0);
  for (int b = 0; b < k; ++b) {
    std::vector<Configuration> part;
    for (std::size_t i = b; i < unique_configs.size(); i += k) part.push_back(unique_configs[i]);
    const SubspaceBasis basis = SubspaceBasis::from_configurations(std::move(part));
    const SubspaceResult gs = ground_state(project(h, basis));
    for (std::size_t a = 0; a < basis.size(); ++a) {
      const double w = gs.coefficients[a] * gs.coefficients[a];
      const std::uint32_t bits = basis.configurations[a].bits;
      for (int q = 0; q < n_qubits; ++q)
        if (bits >> q & 1u) occ[q] += w;
    }
  }
  for (double& v : occ) v /= k;
  return occ;
}

namespace {

// Flips bits of one spin block until its population matches the target.
// Candidates are drawn with probability proportional to the flip weight of
// their occupation discrepancy, which is the sample-until-accepted procedure
// conditioned on eventual acceptance; when every candidate has zero weight
// the draw falls back to uniform so a repair always terminates.
std::uint32_t repair_block(std::uint32_t bits, std::uint32_t block_mask, int target,
                           const std::vector<double>& occ, const RecoveryConfig& cfg,
                           Rng& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  int population = std::popcount(bits & block_mask);
  while (population != target) {
    const bool surplus = population > target;
    std::vector<int> candidates;
    std::vector<double> weights;
    double total = 0.0;
    for (int q = 0; q < 32; ++q) {
      if (!(block_mask >> q & 1u)) continue;
      const bool occupied = bits >> q & 1u;
      if (occupied != surplus) continue;  // surplus flips occupied, deficit unoccupied
      const double x = occupied ? 1.0 : 0.0;
      const double w = flip_weight(std::clamp(std::abs(x - occ[q]), 0.0, 1.0), cfg);
      candidates.push_back(q);
      weights.push_back(w);
      total += w;
    }
    int chosen;
    if (total <= 0.0) {
      chosen = candidates[std::uniform_int_distribution<std::size_t>(
          0, candidates.size() - 1)(rng)];
    } else {
      double u = uni(rng) * total;
      std::size_t idx = 0;
      while (idx + 1 < weights.size() && u >= weights[idx]) u -= weights[idx++];
      chosen = candidates[idx];
    }
    bits ^= 1u << chosen;
    population += surplus ? -1 : 1;
  }
  return bits;
}

}  // namespace

RecoveryResult sccr_recover(const SampleSet& s_n, const SampleSet& s_x, const PauliSum& h,
                            const SectorSpec& sector, const RecoveryConfig& cfg,
                            std::uint64_t seed) {
  if (s_n.counts.empty()) throw std::invalid_argument("SCCR needs a nonempty correct set");
  for (const auto& [z, count] : s_n.counts)
    if (!sector.contains(z)) throw std::invalid_argument("S_N contains an out-of-sector string");

  RecoveryResult result;
  result.kept = s_n;

  SampleSet working = s_n;
  SampleSet faulty = s_x;
  Rng rng(seed);

  while (!faulty.counts.empty() && result.passes < cfg.max_passes) {
    ++result.passes;
    const std::vector<double> occ =
        average_occupations(working, h, sector, cfg.batches, rng);

    SampleSet still_faulty;
    for (const auto& [z, count] : faulty.counts) {
      std::uint32_t bits = z.bits;
      bits = repair_block(bits, sector.up_mask(), sector.n_up, occ, cfg, rng);
      bits = repair_block(bits, sector.down_mask(), sector.n_down, occ, cfg, rng);
      const Configuration fixed{bits};
      if (sector.contains(fixed)) {
        result.recovered.add(fixed, count);
        working.add(fixed, count);
      } else {
        still_faulty.add(z, count);
      }
    }
    faulty = std::move(still_faulty);
  }
  result.unresolved = faulty.shots;
  return result;
}

BestRecovery recover_best(const SampleSet& s_n, const SampleSet& s_x, const PauliSum& h,
                          const SectorSpec& sector, const RecoveryConfig& cfg,
                          std::uint64_t seed, int threads) {
  const int reps = std::max(1, cfg.repetitions);
  std::vector<RecoveryResult> results(reps);
  std::vector<double> energies(reps);

  auto run_range = [&](int begin, int end) {
    for (int r = begin; r < end; ++r) {
      results[r] = sccr_recover(s_n, s_x, h, sector, cfg,
                                derive_seed(seed, seed_stream::kRecovery, r));
      const SampleSet combined = results[r].combined();
      std::vector<Configuration> configs;
      configs.reserve(combined.counts.size());
      for (const auto& [z, count] : combined.counts) configs.push_back(z);
      const SubspaceBasis basis = SubspaceBasis::from_configurations(std::move(configs));
      energies[r] = ground_state(project(h, basis)).energy;
    }
  };

  const int workers = std::max(1, std::min(threads, reps));
  if (workers == 1) {
    run_range(0, reps);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (reps + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const int begin = w * chunk;
      const int end = std::min(reps, begin + chunk);
      if (begin < end) pool.emplace_back(run_range, begin, end);
    }
    for (auto& t : pool) t.join();
  }

  BestRecovery best;
  best.winner = 0;
  for (int r = 1; r < reps; ++r)
    if (energies[r] < energies[best.winner]) best.winner = r;
  best.result = std::move(results[best.winner]);
  best.energy = energies[best.winner];
  best.energies = std::move(energies);
  return best;
}

void write_recovered_text(std::ostream& out, const RecoveryResult& result, int n_qubits) {
  for (const auto& [z, count] : result.kept.counts)
    out << to_bit_string(z, n_qubits) << " " << count << " kept\n";
  for (const auto& [z, count] : result.recovered.counts)
    out << to_bit_string(z, n_qubits) << " " << count << " recovered\n";
}

}  // namespace qsd

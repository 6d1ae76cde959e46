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

#ifndef QSD_RECOVERY_HPP
#define QSD_RECOVERY_HPP

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "qsd/simulator.hpp"

namespace qsd {

/// A particle-number sector: n_up electrons in the up block and n_down in the
/// down block of n_spatial qubits each.
struct SectorSpec {
  int n_spatial = 0;
  int n_up = 0;
  int n_down = 0;

  std::uint32_t up_mask() const { return (1u << n_spatial) - 1; }
  std::uint32_t down_mask() const { return up_mask() << n_spatial; }
  int n_qubits() const { return 2 * n_spatial; }
  bool contains(Configuration z) const;
  std::uint64_t dimension() const;  // C(n, n_up) * C(n, n_down)
};

struct RecoveryConfig {
  double h = 0.8;           // breakpoint of the flip-weight function
  double delta = 0.2;       // weight at the breakpoint
  int batches = 10;         // K
  int max_passes = 100;
  int repetitions = 200;    // independent recovery runs
};

/// Splits samples into the in-sector set S_N and the violating set S_X.
/// Counts are preserved; the two sets partition the input.
std::pair<SampleSet, SampleSet> post_select(const SampleSet& samples, const SectorSpec& sector);

/// Piecewise-linear flip weight of the occupation discrepancy y in [0, 1]:
/// delta * y / h below the breakpoint, then rising linearly to 1.
double flip_weight(double y, const RecoveryConfig& cfg);

struct RecoveryResult {
  SampleSet kept;       // originally correct configurations
  SampleSet recovered;  // repaired configurations (counts travel)
  int passes = 0;
  std::uint64_t unresolved = 0;  // counts dropped when max_passes ran out

  SampleSet combined() const;
};

/// Average orbital occupations <n_q> over the ground states of `batches`
/// random disjoint batches of s_n's unique configurations. This is the
/// self-consistency quantity driving the flip weights.
std::vector<double> average_occupations(const SampleSet& s_n, const PauliSum& h,
                                        const SectorSpec& sector, int batches, Rng& rng);

/// Self-consistent configuration recovery. Repeats until S_X is empty (or
/// max_passes): partition S_N's unique configurations into K random batches,
/// diagonalize each batch's projected Hamiltonian, average the ground-state
/// orbital occupations, then repair every configuration in S_X by flipping
/// bits of the surplus (deficit) sector - each flip picks an occupied
/// (unoccupied) bit with probability proportional to the flip weight of its
/// occupation discrepancy - until the sector counts are correct. Repaired
/// configurations join S_N for the next pass.
RecoveryResult sccr_recover(const SampleSet& s_n, const SampleSet& s_x, const PauliSum& h,
                            const SectorSpec& sector, const RecoveryConfig& cfg,
                            std::uint64_t seed);

struct BestRecovery {
  RecoveryResult result;
  double energy = 0.0;          // subspace ground energy of the winning run
  int winner = 0;               // repetition index
  std::vector<double> energies; // one per repetition
};

/// Runs sccr_recover cfg.repetitions times with seeds derived from `seed`
/// and keeps the run whose recovered set yields the lowest subspace ground
/// energy. Repetitions are distributed over `threads` workers; the outcome
/// does not depend on scheduling.
BestRecovery recover_best(const SampleSet& s_n, const SampleSet& s_x, const PauliSum& h,
                          const SectorSpec& sector, const RecoveryConfig& cfg,
                          std::uint64_t seed, int threads = 1);

/// One line per configuration: "bits count origin", origin in {kept,
/// recovered}.
void write_recovered_text(std::ostream& out, const RecoveryResult& result, int n_qubits);

}  // namespace qsd

#endif  // QSD_RECOVERY_HPP

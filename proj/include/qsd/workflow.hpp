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

#ifndef QSD_WORKFLOW_HPP
#define QSD_WORKFLOW_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "qsd/ansatz.hpp"
#include "qsd/fermion.hpp"
#include "qsd/optimizer.hpp"
#include "qsd/recovery.hpp"
#include "qsd/subspace.hpp"
#include "qsd/transpiler.hpp"

namespace qsd {

struct PipelineConfig {
  // Hamiltonian source: an FCIDUMP file or the builtin Hubbard chain.
  std::string fcidump_path;       // takes precedence when nonempty
  std::string fixture = "hubbard";
  int sites = 5;
  double hopping = 1.0;
  double interaction = 4.0;

  // Sector; -1 means "use the FCIDUMP electron counts".
  int n_up = -1;
  int n_down = -1;

  // Spin penalty. s0_squared < 0 selects s(s+1) with s = |n_up - n_down| / 2.
  double penalty_m = 0.01;
  double s0_squared = -1.0;

  int layers = 1;

  std::uint64_t opt_shots = 600;   // shots per cost evaluation
  std::uint64_t opt_updates = 60;  // parameter updates
  std::uint64_t final_shots = 10000;

  NoiseConfig noise{0.1, 0.0};
  RecoveryConfig recovery{};

  std::uint64_t master_seed = 1;
  std::string output_dir;  // empty: no files written
  int threads = 2;
  bool compute_fci = true;
};

struct PipelineReport {
  // configuration echo
  std::string hamiltonian_label;
  int n_qubits = 0;
  SectorSpec sector;
  double penalty_m = 0.0;
  double s0_squared = 0.0;
  std::uint64_t master_seed = 0;

  // optimization
  ParameterVector optimized_parameters;
  std::uint64_t updates = 0;
  std::uint64_t evaluations = 0;
  double final_opt_cost = 0.0;
  std::string trace_file;

  // final sampling and post-selection
  std::uint64_t samples_total = 0;
  std::uint64_t samples_retained = 0;
  double retained_fraction = 0.0;
  double pre_sd_energy = 0.0;
  double pre_sd_std_error = 0.0;

  // recovery and subspace diagonalization
  std::uint64_t recovered_count = 0;
  std::uint64_t unresolved_count = 0;
  int recovery_winner = 0;
  std::size_t sd_dimension = 0;
  double sd_energy = 0.0;
  double energy_variance = 0.0;

  // oracle comparison (absent when the sector is too large)
  std::optional<double> fci_energy;
  std::optional<double> deviation;

  // native-gate cost of the optimized circuit
  GateCounts optimized_counts;
  std::size_t naive_r_count = 0;

  double elapsed_seconds = 0.0;

  std::string to_json(bool include_timing = true) const;
};

/// Full pipeline: build/penalize/encode the Hamiltonian, optimize the ansatz
/// with the diagonal cost, sample the optimized circuit, post-select, run
/// configuration recovery (keeping the lowest-energy repetition), diagonalize
/// the projected Hamiltonian, and assemble the report. When output_dir is
/// set, report.json, trace.csv, samples.txt, recovered.txt and counts.json
/// are written there. Deterministic for a fixed master seed.
PipelineReport run_pipeline(const PipelineConfig& cfg);

/// (gse_ls + corr_ls) - (gse_is + corr_is): the Gibbs free-energy difference
/// given externally computed thermodynamic and solvation corrections.
double gibbs_delta(double gse_ls, double gse_is, double corr_ls, double corr_is);

/// Thrown by run_pipeline with the failing stage's name in the message.
class StageError : public std::runtime_error {
 public:
  StageError(const std::string& stage, const std::string& what)
      : std::runtime_error("stage '" + stage + "': " + what), stage_(stage) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

}  // namespace qsd

#endif  // QSD_WORKFLOW_HPP

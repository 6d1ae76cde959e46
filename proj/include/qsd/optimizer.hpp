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

#ifndef QSD_OPTIMIZER_HPP
#define QSD_OPTIMIZER_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include "qsd/ansatz.hpp"
#include "qsd/recovery.hpp"
#include "qsd/simulator.hpp"

namespace qsd {

/// Seam between the optimizer and whatever executes circuits. The simulator
/// implementation below is the only backend in this codebase; a hardware
/// adapter would implement the same interface.
class CircuitExecutor {
 public:
  virtual ~CircuitExecutor() = default;
  virtual std::size_t parameter_count() const = 0;
  /// Runs the parameterized circuit and measures `shots` times.
  virtual SampleSet sample_shots(const ParameterVector& params, std::uint64_t shots,
                                 std::uint64_t seed) const = 0;
  /// Exact noiseless output distribution (infinite-shot limit).
  virtual std::map<Configuration, double> distribution(const ParameterVector& params) const = 0;
};

class SimulatorExecutor : public CircuitExecutor {
 public:
  SimulatorExecutor(AnsatzTemplate tpl, NoiseConfig noise);

  std::size_t parameter_count() const override;
  SampleSet sample_shots(const ParameterVector& params, std::uint64_t shots,
                         std::uint64_t seed) const override;
  std::map<Configuration, double> distribution(const ParameterVector& params) const override;

  const AnsatzTemplate& ansatz() const { return tpl_; }
  const NoiseConfig& noise() const { return noise_; }

 private:
  AnsatzTemplate tpl_;
  NoiseConfig noise_;
};

struct CostEvaluation {
  double e_z = 0.0;
  std::uint64_t shots_total = 0;
  std::uint64_t shots_retained = 0;
  double retained_fraction = 0.0;
  double std_error = 0.0;
};

/// Thrown when post-selection discards every sample of an evaluation.
class ZeroRetainedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Diagonal-only cost: samples the circuit, discards configurations whose
/// per-block particle numbers violate the sector, and averages <z|H|z> with
/// the retained counts renormalized over the retained total. std_error is
/// sigma / sqrt(N) over the retained per-shot diagonal values.
CostEvaluation evaluate_cost(const CircuitExecutor& executor, const ParameterVector& params,
                             const PauliSum& h, const SectorSpec& sector, std::uint64_t shots,
                             std::uint64_t seed);

/// Infinite-shot limit of evaluate_cost: probabilities restricted to the
/// sector and renormalized. retained_fraction is the in-sector probability
/// mass.
CostEvaluation evaluate_cost_exact(const CircuitExecutor& executor,
                                   const ParameterVector& params, const PauliSum& h,
                                   const SectorSpec& sector);

struct OptimizationTrace {
  struct Entry {
    int parameter_index = 0;
    CostEvaluation cost;             // evaluated at the updated parameters
    ParameterVector parameters;      // snapshot after the update
  };
  std::vector<Entry> entries;
  std::uint64_t updates = 0;       // parameter updates performed
  std::uint64_t evaluations = 0;   // cost evaluations performed (probes + confirmations)
  ParameterVector final_parameters;
  double final_cost = 0.0;

  /// CSV rows: iteration, parameter_index, e_z, std_error, retained_fraction.
  void write_csv(std::ostream& out) const;
};

struct NftOptions {
  bool exact = false;            // noiseless-exact evaluations instead of shots
  std::uint64_t max_updates = 0; // 0: run sweeps * |params| updates
};

/// Sequential per-parameter minimization. Each update evaluates the cost at
/// five equally spaced shifts theta0 + 2 pi k / 5, fits the exact
/// degree-2 trigonometric polynomial a0 + sum_m (a_m cos m theta +
/// b_m sin m theta), moves the parameter to the fit's global minimizer on
/// [0, 2 pi), and confirms with one evaluation at the new point (recorded in
/// the trace). Parameters cycle in the emission order of build_circuit.
/// Zero-retained evaluations are retried with a fresh seed up to 3 times.
OptimizationTrace nft_minimize(const CircuitExecutor& executor, const PauliSum& h,
                               const SectorSpec& sector, const ParameterVector& initial_params,
                               int sweeps, std::uint64_t shots_per_eval, std::uint64_t seed,
                               const NftOptions& options = {});

}  // namespace qsd

#endif  // QSD_OPTIMIZER_HPP

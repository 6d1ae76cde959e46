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

#ifndef QSD_SIMULATOR_HPP
#define QSD_SIMULATOR_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "qsd/encoding.hpp"
#include "qsd/rng.hpp"

namespace qsd {

enum class GateKind { Givens, CZ, R, RZ, Rxx };

/// Gate conventions (angles in radians):
///  - Givens(a, b, angle): identity on the |00>, |11> states of the pair;
///    on the plane spanned by |a occupied> and |b occupied| it acts as
///    [[cos t, sin t], [-sin t, cos t]] with t = angle / 2, rows ordered
///    (a occupied, b occupied).
///  - CZ: diag(1, 1, 1, -1).
///  - R(q, theta, phi) = exp(-i theta/2 (X cos phi + Y sin phi)).
///  - RZ(q, lambda) = diag(1, e^{i lambda}).
///  - Rxx(a, b, angle) = exp(-i angle/2 X(x)X).
struct Gate {
  GateKind kind = GateKind::CZ;
  int q_a = 0;
  int q_b = 0;      // unused for single-qubit gates
  double angle = 0.0;
  double phi = 0.0;  // R only

  static Gate givens(int a, int b, double angle) { return {GateKind::Givens, a, b, angle, 0.0}; }
  static Gate cz(int a, int b) { return {GateKind::CZ, a, b, 0.0, 0.0}; }
  static Gate r(int q, double theta, double phi) { return {GateKind::R, q, -1, theta, phi}; }
  static Gate rz(int q, double lambda) { return {GateKind::RZ, q, -1, lambda, 0.0}; }
  static Gate rxx(int a, int b, double angle) { return {GateKind::Rxx, a, b, angle, 0.0}; }

  bool is_two_qubit() const {
    return kind == GateKind::Givens || kind == GateKind::CZ || kind == GateKind::Rxx;
  }
};

class StateVector {
 public:
  explicit StateVector(int n_qubits);
  static StateVector basis_state(int n_qubits, Configuration z);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::complex<double>& amp(std::size_t i) { return amps_[i]; }
  const std::complex<double>& amp(std::size_t i) const { return amps_[i]; }
  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }

  double norm() const;

 private:
  int n_qubits_;
  std::vector<std::complex<double>> amps_;
};

struct NoiseConfig {
  double readout_flip_p = 0.0;           // per-qubit classical flip at measurement
  double two_qubit_depolarizing_p = 0.0; // per two-qubit gate, at execution time

  bool noiseless() const { return readout_flip_p == 0.0 && two_qubit_depolarizing_p == 0.0; }
};

/// Multiset of measured configurations.
struct SampleSet {
  std::uint64_t shots = 0;
  std::map<Configuration, std::uint64_t> counts;

  void add(Configuration z, std::uint64_t n = 1) {
    counts[z] += n;
    shots += n;
  }
};

void apply_gate(StateVector& state, const Gate& g);

/// Applies gates in order. If depolarizing_p > 0, after every two-qubit gate
/// a uniformly random non-identity two-qubit Pauli error is inserted with
/// that probability (one trajectory).
void run_circuit(StateVector& state, const std::vector<Gate>& gates,
                 double two_qubit_depolarizing_p = 0.0, Rng* rng = nullptr);

/// Draws `shots` configurations from the exact Born distribution of `state`,
/// then applies independent per-qubit readout flips with probability
/// noise.readout_flip_p. Deterministic for a fixed seed. The depolarizing
/// knob is consumed by run_circuit, not here.
SampleSet sample(const StateVector& state, std::uint64_t shots, const NoiseConfig& noise,
                 std::uint64_t seed);

/// Born probabilities of `state`; entries below 1e-16 are omitted.
std::map<Configuration, double> exact_distribution(const StateVector& state);

}  // namespace qsd

#endif  // QSD_SIMULATOR_HPP

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

#ifndef QSD_ANSATZ_HPP
#define QSD_ANSATZ_HPP

#include <iosfwd>
#include <vector>

#include "qsd/simulator.hpp"

namespace qsd {

/// Layered number-preserving circuit over two spin blocks of n_spatial
/// qubits each.
struct AnsatzTemplate {
  int n_spatial = 0;
  int n_up = 0;
  int n_down = 0;
  int layers = 1;

  int n_qubits() const { return 2 * n_spatial; }
};

using ParameterVector = std::vector<double>;

/// L * 2 * C(n, 2) rotation angles per template.
std::size_t parameter_count(const AnsatzTemplate& tpl);

/// Orbital pairs touched by one block per layer, in the documented order:
/// distance-1 pairs (0,1)...(n-2,n-1), then distance-2 pairs (0,2)..., up to
/// (0, n-1). Every pair appears exactly once.
std::vector<std::pair<int, int>> givens_pair_order(int n_spatial);

/// Aufbau determinant: up block bits 0..n_up-1 and down block bits
/// n_spatial..n_spatial+n_down-1 set.
Configuration hf_configuration(const AnsatzTemplate& tpl);

/// Emits, per layer: Givens rotations over the up block in
/// givens_pair_order, the same wiring on the down block with its own
/// parameters, then CZ gates between corresponding qubits (i, i+n).
/// Parameter order matches emission order (layer-major, up block first).
std::vector<Gate> build_circuit(const AnsatzTemplate& tpl, const ParameterVector& params);

/// Prepares C(params) |HF> and returns the state.
StateVector prepare_state(const AnsatzTemplate& tpl, const ParameterVector& params,
                          double two_qubit_depolarizing_p = 0.0, Rng* rng = nullptr);

/// Line-based circuit text: "GIVENS a b angle", "CZ a b", "R q theta phi",
/// "RZ q lambda", "RXX a b angle". The first line is "QUBITS n".
void write_circuit_text(std::ostream& out, int n_qubits, const std::vector<Gate>& gates);
std::pair<int, std::vector<Gate>> parse_circuit_text(std::istream& in);

}  // namespace qsd

#endif  // QSD_ANSATZ_HPP

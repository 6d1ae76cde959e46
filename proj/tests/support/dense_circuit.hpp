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

// Test oracle: dense unitaries of gates and circuits, built entry-by-entry
// from the gate definitions rather than the simulator's in-place sweeps.

#ifndef QSD_TESTS_DENSE_CIRCUIT_HPP
#define QSD_TESTS_DENSE_CIRCUIT_HPP

#include <vector>

#include <Eigen/Dense>

#include "qsd/simulator.hpp"

namespace qsd::testing {

Eigen::MatrixXcd gate_unitary(const Gate& g, int n_qubits);

/// Product of the gate unitaries, first gate applied first.
Eigen::MatrixXcd circuit_unitary(const std::vector<Gate>& gates, int n_qubits);

/// max |U - e^{i alpha} V| over entries, with alpha chosen to align the
/// global phase.
double phase_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v);

}  // namespace qsd::testing

#endif  // QSD_TESTS_DENSE_CIRCUIT_HPP

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

#ifndef QSD_TRANSPILER_HPP
#define QSD_TRANSPILER_HPP

#include <cstddef>
#include <vector>

#include "qsd/simulator.hpp"

namespace qsd {

/// Circuit over the trapped-ion native set: R(theta, phi), virtual RZ and the
/// fixed-angle entangler RXX(-pi/2).
struct NativeCircuit {
  int n_qubits = 0;
  std::vector<Gate> gates;

  void validate() const;  // throws if a non-native gate is present
};

struct GateCounts {
  std::size_t rxx = 0;
  std::size_t r = 0;
  std::size_t rz = 0;
};

/// Rewrites a Givens/CZ circuit over the native set. Every Givens costs
/// exactly two RXX(-pi/2) plus single-qubit gates, every CZ exactly one.
/// Native gates pass through; RXX with a free angle is rebuilt from two
/// fixed-angle entanglers. The result equals the input unitary up to a
/// global phase.
NativeCircuit decompose_to_native(int n_qubits, const std::vector<Gate>& gates);

struct OptimizeOptions {
  bool prune = true;
  double prune_threshold = 1e-3;  // |theta| below this deletes an R gate
};

/// Gate-count reduction with three rewrites iterated to a fixed point:
/// adjacent single-qubit gates merge into a canonical R-then-RZ pair via
/// exact 2x2 composition, X-axis rotations (phi = 0 mod pi) commute left
/// through RXX, and, when pruning is on, R gates with |theta| below the
/// threshold are discarded. RXX gates are never touched. Idempotent.
NativeCircuit optimize_native(const NativeCircuit& nc, const OptimizeOptions& options = {});

GateCounts gate_counts(const NativeCircuit& nc);

}  // namespace qsd

#endif  // QSD_TRANSPILER_HPP

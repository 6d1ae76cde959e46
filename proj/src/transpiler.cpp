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

#include "qsd/transpiler.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace qsd {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kMs = -kPi / 2;  // the fixed entangler angle

bool is_ms_angle(double angle) { return std::abs(angle - kMs) < 1e-12; }

// Angle folded into (-pi, pi].
double fold_angle(double a) {
  a = std::remainder(a, 2 * kPi);
  if (a <= -kPi) a += 2 * kPi;
  return a;
}

bool x_axis(const Gate& g) {
  return g.kind == GateKind::R && std::abs(std::sin(g.phi)) < 1e-9;
}

// 2x2 matrix of a single-qubit gate.
std::array<cd, 4> matrix_1q(const Gate& g) {
  if (g.kind == GateKind::RZ) return {cd(1, 0), cd(0, 0), cd(0, 0), std::exp(cd(0, g.angle))};
  const double c = std::cos(g.angle / 2);
  const double s = std::sin(g.angle / 2);
  return {cd(c, 0), cd(0, -s) * std::exp(cd(0, -g.phi)),
          cd(0, -s) * std::exp(cd(0, g.phi)), cd(c, 0)};
}

std::array<cd, 4> matmul(const std::array<cd, 4>& a, const std::array<cd, 4>& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

// Re-expresses a single-qubit unitary, up to global phase, as at most one R
// followed (in time) by one RZ. Gates that reduce to the identity are
// dropped.
std::vector<Gate> decompose_1q(int qubit, const std::array<cd, 4>& u) {
  const double c_abs = std::abs(u[0]);
  const double s_abs = std::abs(u[1]);
  const double theta = 2.0 * std::atan2(s_abs, c_abs);  // in [0, pi]
  std::vector<Gate> out;

  if (s_abs < 1e-12) {  // diagonal: pure RZ up to phase
    const double lambda = fold_angle(std::arg(u[3]) - std::arg(u[0]));
    if (std::abs(lambda) > 1e-12) out.push_back(Gate::rz(qubit, lambda));
    return out;
  }
  if (c_abs < 1e-12) {  // theta = pi: a single equatorial R suffices
    // u = alpha * [[0, -i e^{-i phi}], [-i e^{i phi}, 0]], alpha^2 = -u01*u10
    const cd alpha = std::sqrt(-u[1] * u[2]);
    const double phi = std::arg(cd(0, 1) * u[2] / alpha);
    out.push_back(Gate::r(qubit, kPi, fold_angle(phi)));
    return out;
  }
  const cd alpha = u[0] / c_abs;  // global phase
  const double phi = -std::arg(cd(0, 1) * u[1] / alpha);
  const double lambda = fold_angle(std::arg(u[3] / alpha));
  out.push_back(Gate::r(qubit, theta, fold_angle(phi)));
  if (std::abs(lambda) > 1e-12) out.push_back(Gate::rz(qubit, lambda));
  return out;
}

void emit_givens(std::vector<Gate>& out, int a, int b, double angle) {
  out.push_back(Gate::r(a, kPi, 0.0));
  out.push_back(Gate::r(b, kPi, 0.0));
  out.push_back(Gate::rxx(a, b, kMs));
  out.push_back(Gate::rz(a, angle / 2));
  out.push_back(Gate::rz(b, -angle / 2));
  out.push_back(Gate::rxx(a, b, kMs));
}

void emit_cz(std::vector<Gate>& out, int a, int b) {
  out.push_back(Gate::r(a, kPi / 2, kPi / 2));
  out.push_back(Gate::r(b, kPi / 2, kPi / 2));
  out.push_back(Gate::rxx(a, b, kMs));
  out.push_back(Gate::r(a, kPi / 2, -kPi / 2));
  out.push_back(Gate::r(b, kPi / 2, -kPi / 2));
  out.push_back(Gate::rz(a, kPi / 2));
  out.push_back(Gate::rz(b, kPi / 2));
}

void emit_rxx(std::vector<Gate>& out, int a, int b, double angle) {
  if (is_ms_angle(angle)) {
    out.push_back(Gate::rxx(a, b, kMs));
    return;
  }
  out.push_back(Gate::rz(a, kPi / 2));
  out.push_back(Gate::r(a, kPi, 0.0));
  out.push_back(Gate::r(b, kPi, 0.0));
  out.push_back(Gate::rxx(a, b, kMs));
  out.push_back(Gate::rz(a, angle));
  out.push_back(Gate::rxx(a, b, kMs));
  out.push_back(Gate::rz(a, -kPi / 2));
}

bool touches(const Gate& g, int q) {
  return g.q_a == q || (g.is_two_qubit() && g.q_b == q);
}

}  // namespace

void NativeCircuit::validate() const {
  for (const Gate& g : gates) {
    switch (g.kind) {
      case GateKind::R:
      case GateKind::RZ:
        break;
      case GateKind::Rxx:
        if (!is_ms_angle(g.angle))
          throw std::invalid_argument("native RXX must have angle -pi/2");
        break;
      default:
        throw std::invalid_argument("non-native gate in NativeCircuit");
    }
  }
}

NativeCircuit decompose_to_native(int n_qubits, const std::vector<Gate>& gates) {
  NativeCircuit nc;
  nc.n_qubits = n_qubits;
  for (const Gate& g : gates) {
    switch (g.kind) {
      case GateKind::Givens: emit_givens(nc.gates, g.q_a, g.q_b, g.angle); break;
      case GateKind::CZ: emit_cz(nc.gates, g.q_a, g.q_b); break;
      case GateKind::R: nc.gates.push_back(g); break;
      case GateKind::RZ: nc.gates.push_back(g); break;
      case GateKind::Rxx: emit_rxx(nc.gates, g.q_a, g.q_b, g.angle); break;
    }
  }
  nc.validate();
  return nc;
}

NativeCircuit optimize_native(const NativeCircuit& nc, const OptimizeOptions& options) {
  nc.validate();
  std::vector<Gate> gates = nc.gates;

  // Applies one rewrite per scan; every rewrite strictly decreases
  // (gate count, sum of R-gate positions), so the loop terminates.
  bool changed = true;
  while (changed) {
    changed = false;

    // X-axis rotations drift left through entanglers.
    for (std::size_t i = 0; i < gates.size() && !changed; ++i) {
      if (!x_axis(gates[i])) continue;
      const int q = gates[i].q_a;
      for (std::size_t j = i; j-- > 0;) {
        if (!touches(gates[j], q)) continue;
        if (gates[j].kind == GateKind::Rxx) {
          const Gate g = gates[i];
          gates.erase(gates.begin() + i);
          gates.insert(gates.begin() + j, g);
          changed = true;
        }
        break;
      }
    }
    if (changed) continue;

    // Merge single-qubit gates adjacent in their qubit's timeline. Pairs
    // already in canonical order (R before RZ) are left alone.
    for (std::size_t i = 0; i < gates.size() && !changed; ++i) {
      const Gate& first = gates[i];
      if (first.is_two_qubit()) continue;
      const int q = first.q_a;
      for (std::size_t j = i + 1; j < gates.size(); ++j) {
        if (!touches(gates[j], q)) continue;
        if (gates[j].is_two_qubit()) break;
        const Gate& second = gates[j];
        if (first.kind == GateKind::R && second.kind == GateKind::RZ) break;  // canonical
        const auto merged = decompose_1q(q, matmul(matrix_1q(second), matrix_1q(first)));
        gates.erase(gates.begin() + j);
        gates.erase(gates.begin() + i);
        gates.insert(gates.begin() + i, merged.begin(), merged.end());
        changed = true;
        break;
      }
    }
    if (changed) continue;

    // Identity cleanup (exact up to global phase) and optional pruning.
    for (std::size_t i = 0; i < gates.size() && !changed; ++i) {
      const Gate& g = gates[i];
      bool remove = false;
      if (g.kind == GateKind::R) {
        const double folded = std::abs(std::remainder(g.angle, 2 * kPi));
        remove = folded < 1e-12 || (options.prune && std::abs(g.angle) < options.prune_threshold);
      } else if (g.kind == GateKind::RZ) {
        remove = std::abs(std::remainder(g.angle, 2 * kPi)) < 1e-12;
      }
      if (remove) {
        gates.erase(gates.begin() + i);
        changed = true;
      }
    }
  }

  NativeCircuit out;
  out.n_qubits = nc.n_qubits;
  out.gates = std::move(gates);
  return out;
}

GateCounts gate_counts(const NativeCircuit& nc) {
  GateCounts counts;
  for (const Gate& g : nc.gates) {
    switch (g.kind) {
      case GateKind::Rxx: ++counts.rxx; break;
      case GateKind::R: ++counts.r; break;
      case GateKind::RZ: ++counts.rz; break;
      default: throw std::invalid_argument("non-native gate in NativeCircuit");
    }
  }
  return counts;
}

}  // namespace qsd

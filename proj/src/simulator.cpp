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

#include "qsd/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsd {

namespace {

using cd = std::complex<double>;

void check_qubit(int q, int n) {
  if (q < 0 || q >= n) throw std::invalid_argument("qubit index out of range");
}

// Single-qubit Pauli by code (1 = X, 2 = Y, 3 = Z), used for error insertion.
void apply_single_pauli(StateVector& state, int q, int code) {
  const std::size_t bit = std::size_t(1) << q;
  const std::size_t dim = state.dim();
  switch (code) {
    case 1:
      for (std::size_t i = 0; i < dim; ++i)
        if (!(i & bit)) std::swap(state.amp(i), state.amp(i | bit));
      break;
    case 2:
      for (std::size_t i = 0; i < dim; ++i)
        if (!(i & bit)) {
          const cd lo = state.amp(i);
          const cd hi = state.amp(i | bit);
          state.amp(i) = cd(0, -1) * hi;
          state.amp(i | bit) = cd(0, 1) * lo;
        }
      break;
    case 3:
      for (std::size_t i = 0; i < dim; ++i)
        if (i & bit) state.amp(i) = -state.amp(i);
      break;
    default:
      break;
  }
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 26) throw std::invalid_argument("qubit count out of range");
  amps_.assign(std::size_t(1) << n_qubits, cd(0, 0));
  amps_[0] = cd(1, 0);
}

StateVector StateVector::basis_state(int n_qubits, Configuration z) {
  StateVector s(n_qubits);
  s.amps_[0] = cd(0, 0);
  if (z.bits >= s.dim()) throw std::invalid_argument("configuration exceeds qubit count");
  s.amps_[z.bits] = cd(1, 0);
  return s;
}

double StateVector::norm() const {
  double n2 = 0.0;
  for (const cd& a : amps_) n2 += std::norm(a);
  return std::sqrt(n2);
}

void apply_gate(StateVector& state, const Gate& g) {
  const int n = state.n_qubits();
  const std::size_t dim = state.dim();
  switch (g.kind) {
    case GateKind::Givens: {
      check_qubit(g.q_a, n);
      check_qubit(g.q_b, n);
      if (g.q_a == g.q_b) throw std::invalid_argument("Givens needs distinct qubits");
      const std::size_t ba = std::size_t(1) << g.q_a;
      const std::size_t bb = std::size_t(1) << g.q_b;
      const double c = std::cos(g.angle / 2);
      const double s = std::sin(g.angle / 2);
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & ba) && !(i & bb)) {  // a occupied, b empty
          const std::size_t j = (i ^ ba) | bb;
          const cd va = state.amp(i);
          const cd vb = state.amp(j);
          state.amp(i) = c * va + s * vb;
          state.amp(j) = -s * va + c * vb;
        }
      }
      break;
    }
    case GateKind::CZ: {
      check_qubit(g.q_a, n);
      check_qubit(g.q_b, n);
      const std::size_t mask = (std::size_t(1) << g.q_a) | (std::size_t(1) << g.q_b);
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & mask) == mask) state.amp(i) = -state.amp(i);
      break;
    }
    case GateKind::R: {
      check_qubit(g.q_a, n);
      const std::size_t bit = std::size_t(1) << g.q_a;
      const double c = std::cos(g.angle / 2);
      const double s = std::sin(g.angle / 2);
      const cd off_lo = cd(0, -s) * std::exp(cd(0, -g.phi));
      const cd off_hi = cd(0, -s) * std::exp(cd(0, g.phi));
      for (std::size_t i = 0; i < dim; ++i) {
        if (!(i & bit)) {
          const cd lo = state.amp(i);
          const cd hi = state.amp(i | bit);
          state.amp(i) = c * lo + off_lo * hi;
          state.amp(i | bit) = off_hi * lo + c * hi;
        }
      }
      break;
    }
    case GateKind::RZ: {
      check_qubit(g.q_a, n);
      const std::size_t bit = std::size_t(1) << g.q_a;
      const cd phase = std::exp(cd(0, g.angle));
      for (std::size_t i = 0; i < dim; ++i)
        if (i & bit) state.amp(i) *= phase;
      break;
    }
    case GateKind::Rxx: {
      check_qubit(g.q_a, n);
      check_qubit(g.q_b, n);
      if (g.q_a == g.q_b) throw std::invalid_argument("Rxx needs distinct qubits");
      const std::size_t mask = (std::size_t(1) << g.q_a) | (std::size_t(1) << g.q_b);
      const double c = std::cos(g.angle / 2);
      const cd off = cd(0, -std::sin(g.angle / 2));
      for (std::size_t i = 0; i < dim; ++i) {
        const std::size_t j = i ^ mask;
        if (i < j) {
          const cd vi = state.amp(i);
          const cd vj = state.amp(j);
          state.amp(i) = c * vi + off * vj;
          state.amp(j) = off * vi + c * vj;
        }
      }
      break;
    }
  }
}

void run_circuit(StateVector& state, const std::vector<Gate>& gates,
                 double two_qubit_depolarizing_p, Rng* rng) {
  if (two_qubit_depolarizing_p > 0.0 && rng == nullptr)
    throw std::invalid_argument("depolarizing noise needs an RNG");
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::uniform_int_distribution<int> pauli15(1, 15);
  for (const Gate& g : gates) {
    apply_gate(state, g);
    if (two_qubit_depolarizing_p > 0.0 && g.is_two_qubit()) {
      if (uni(*rng) < two_qubit_depolarizing_p) {
        const int k = pauli15(*rng);  // non-identity two-qubit Pauli
        apply_single_pauli(state, g.q_a, k & 3);
        apply_single_pauli(state, g.q_b, (k >> 2) & 3);
      }
    }
  }
}

SampleSet sample(const StateVector& state, std::uint64_t shots, const NoiseConfig& noise,
                 std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  // Cumulative distribution over the nonzero support, in basis order.
  std::vector<std::pair<double, std::uint32_t>> cdf;
  double acc = 0.0;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const double p = std::norm(state.amp(i));
    if (p > 0.0) {
      acc += p;
      cdf.emplace_back(acc, static_cast<std::uint32_t>(i));
    }
  }
  if (cdf.empty()) throw std::invalid_argument("state has no support");
  const double total = acc;

  Rng rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const int n = state.n_qubits();
  SampleSet out;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = uni(rng) * total;
    auto it = std::lower_bound(cdf.begin(), cdf.end(), u,
                               [](const auto& e, double v) { return e.first < v; });
    if (it == cdf.end()) --it;
    std::uint32_t bits = it->second;
    if (noise.readout_flip_p > 0.0) {
      for (int q = 0; q < n; ++q)
        if (uni(rng) < noise.readout_flip_p) bits ^= 1u << q;
    }
    out.add(Configuration{bits});
  }
  return out;
}

std::map<Configuration, double> exact_distribution(const StateVector& state) {
  std::map<Configuration, double> dist;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const double p = std::norm(state.amp(i));
    if (p >= 1e-16) dist[Configuration{static_cast<std::uint32_t>(i)}] = p;
  }
  return dist;
}

}  // namespace qsd

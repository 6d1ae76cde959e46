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

#include "support/dense_circuit.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace qsd::testing {

namespace {

using cd = std::complex<double>;

Eigen::Matrix2cd matrix_1q(const Gate& g) {
  Eigen::Matrix2cd m;
  if (g.kind == GateKind::RZ) {
    m << 1, 0, 0, std::exp(cd(0, g.angle));
    return m;
  }
  const double c = std::cos(g.angle / 2);
  const double s = std::sin(g.angle / 2);
  m << cd(c, 0), cd(0, -s) * std::exp(cd(0, -g.phi)),
       cd(0, -s) * std::exp(cd(0, g.phi)), cd(c, 0);
  return m;
}

// 4x4 matrix in the basis index (bit_b << 1) | bit_a.
Eigen::Matrix4cd matrix_2q(const Gate& g) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
  switch (g.kind) {
    case GateKind::Givens: {
      const double c = std::cos(g.angle / 2);
      const double s = std::sin(g.angle / 2);
      m(1, 1) = c;
      m(1, 2) = s;
      m(2, 1) = -s;
      m(2, 2) = c;
      break;
    }
    case GateKind::CZ:
      m(3, 3) = -1;
      break;
    case GateKind::Rxx: {
      const double c = std::cos(g.angle / 2);
      const cd off(0, -std::sin(g.angle / 2));
      m.setZero();
      for (int i = 0; i < 4; ++i) {
        m(i, i) = c;
        m(3 - i, i) = off;
      }
      break;
    }
    default:
      throw std::invalid_argument("not a two-qubit gate");
  }
  return m;
}

}  // namespace

Eigen::MatrixXcd gate_unitary(const Gate& g, int n_qubits) {
  const std::uint32_t dim = 1u << n_qubits;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
  if (g.is_two_qubit()) {
    const Eigen::Matrix4cd m = matrix_2q(g);
    const std::uint32_t ba = 1u << g.q_a;
    const std::uint32_t bb = 1u << g.q_b;
    for (std::uint32_t c = 0; c < dim; ++c) {
      const int cc = ((c & bb) ? 2 : 0) | ((c & ba) ? 1 : 0);
      const std::uint32_t rest = c & ~(ba | bb);
      for (int rr = 0; rr < 4; ++rr) {
        const cd v = m(rr, cc);
        if (v == cd(0, 0)) continue;
        const std::uint32_t r = rest | ((rr & 1) ? ba : 0) | ((rr & 2) ? bb : 0);
        u(r, c) = v;
      }
    }
  } else {
    const Eigen::Matrix2cd m = matrix_1q(g);
    const std::uint32_t bq = 1u << g.q_a;
    for (std::uint32_t c = 0; c < dim; ++c) {
      const int cc = (c & bq) ? 1 : 0;
      const std::uint32_t rest = c & ~bq;
      for (int rr = 0; rr < 2; ++rr) {
        const cd v = m(rr, cc);
        if (v == cd(0, 0)) continue;
        u(rest | (rr ? bq : 0), c) = v;
      }
    }
  }
  return u;
}

Eigen::MatrixXcd circuit_unitary(const std::vector<Gate>& gates, int n_qubits) {
  const std::uint32_t dim = 1u << n_qubits;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (const Gate& g : gates) u = gate_unitary(g, n_qubits) * u;
  return u;
}

double phase_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
  const cd overlap = (v.adjoint() * u).trace();
  const cd phase = std::abs(overlap) > 1e-14 ? overlap / std::abs(overlap) : cd(1, 0);
  return (u - phase * v).cwiseAbs().maxCoeff();
}

}  // namespace qsd::testing

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

#include "qsd/ansatz.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qsd {

namespace {

void validate(const AnsatzTemplate& tpl) {
  if (tpl.n_spatial < 1) throw std::invalid_argument("template needs n_spatial >= 1");
  if (tpl.layers < 1) throw std::invalid_argument("template needs at least one layer");
  if (tpl.n_up < 0 || tpl.n_up > tpl.n_spatial || tpl.n_down < 0 || tpl.n_down > tpl.n_spatial)
    throw std::invalid_argument("electron counts exceed orbital count");
}

}  // namespace

std::size_t parameter_count(const AnsatzTemplate& tpl) {
  validate(tpl);
  const std::size_t pairs = std::size_t(tpl.n_spatial) * (tpl.n_spatial - 1) / 2;
  return std::size_t(tpl.layers) * 2 * pairs;
}

std::vector<std::pair<int, int>> givens_pair_order(int n_spatial) {
  std::vector<std::pair<int, int>> pairs;
  for (int d = 1; d < n_spatial; ++d)
    for (int i = 0; i + d < n_spatial; ++i) pairs.emplace_back(i, i + d);
  return pairs;
}

Configuration hf_configuration(const AnsatzTemplate& tpl) {
  validate(tpl);
  Configuration z;
  for (int i = 0; i < tpl.n_up; ++i) z.bits |= 1u << i;
  for (int i = 0; i < tpl.n_down; ++i) z.bits |= 1u << (tpl.n_spatial + i);
  return z;
}

std::vector<Gate> build_circuit(const AnsatzTemplate& tpl, const ParameterVector& params) {
  if (params.size() != parameter_count(tpl))
    throw std::invalid_argument("parameter vector length does not match template");
  const int n = tpl.n_spatial;
  const auto pairs = givens_pair_order(n);
  std::vector<Gate> gates;
  gates.reserve(tpl.layers * (2 * pairs.size() + n));
  std::size_t k = 0;
  for (int layer = 0; layer < tpl.layers; ++layer) {
    for (const auto& [a, b] : pairs) gates.push_back(Gate::givens(a, b, params[k++]));
    for (const auto& [a, b] : pairs) gates.push_back(Gate::givens(n + a, n + b, params[k++]));
    for (int i = 0; i < n; ++i) gates.push_back(Gate::cz(i, n + i));
  }
  return gates;
}

StateVector prepare_state(const AnsatzTemplate& tpl, const ParameterVector& params,
                          double two_qubit_depolarizing_p, Rng* rng) {
  StateVector state = StateVector::basis_state(tpl.n_qubits(), hf_configuration(tpl));
  run_circuit(state, build_circuit(tpl, params), two_qubit_depolarizing_p, rng);
  return state;
}

void write_circuit_text(std::ostream& out, int n_qubits, const std::vector<Gate>& gates) {
  out << "QUBITS " << n_qubits << "\n";
  out.precision(17);
  for (const Gate& g : gates) {
    switch (g.kind) {
      case GateKind::Givens: out << "GIVENS " << g.q_a << " " << g.q_b << " " << g.angle << "\n"; break;
      case GateKind::CZ: out << "CZ " << g.q_a << " " << g.q_b << "\n"; break;
      case GateKind::R: out << "R " << g.q_a << " " << g.angle << " " << g.phi << "\n"; break;
      case GateKind::RZ: out << "RZ " << g.q_a << " " << g.angle << "\n"; break;
      case GateKind::Rxx: out << "RXX " << g.q_a << " " << g.q_b << " " << g.angle << "\n"; break;
    }
  }
}

std::pair<int, std::vector<Gate>> parse_circuit_text(std::istream& in) {
  int n_qubits = 0;
  std::vector<Gate> gates;
  std::string line;
  int line_no = 0;
  auto fail = [&line_no](const std::string& what) {
    std::ostringstream oss;
    oss << "circuit parse error at line " << line_no << ": " << what;
    throw std::runtime_error(oss.str());
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream iss(line);
    std::string tag;
    if (!(iss >> tag) || tag[0] == '#') continue;
    if (tag == "QUBITS") {
      if (!(iss >> n_qubits) || n_qubits < 1) fail("bad qubit count");
    } else if (tag == "GIVENS") {
      int a, b;
      double angle;
      if (!(iss >> a >> b >> angle)) fail("GIVENS needs two qubits and an angle");
      gates.push_back(Gate::givens(a, b, angle));
    } else if (tag == "CZ") {
      int a, b;
      if (!(iss >> a >> b)) fail("CZ needs two qubits");
      gates.push_back(Gate::cz(a, b));
    } else if (tag == "R") {
      int q;
      double theta, phi;
      if (!(iss >> q >> theta >> phi)) fail("R needs qubit, theta, phi");
      gates.push_back(Gate::r(q, theta, phi));
    } else if (tag == "RZ") {
      int q;
      double lambda;
      if (!(iss >> q >> lambda)) fail("RZ needs qubit and angle");
      gates.push_back(Gate::rz(q, lambda));
    } else if (tag == "RXX") {
      int a, b;
      double angle;
      if (!(iss >> a >> b >> angle)) fail("RXX needs two qubits and an angle");
      gates.push_back(Gate::rxx(a, b, angle));
    } else {
      fail("unknown gate '" + tag + "'");
    }
  }
  if (n_qubits == 0) {
    for (const Gate& g : gates) n_qubits = std::max({n_qubits, g.q_a + 1, g.q_b + 1});
  }
  return {n_qubits, gates};
}

}  // namespace qsd

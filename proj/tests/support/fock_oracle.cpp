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

#include "support/fock_oracle.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qsd::testing {

namespace {

// Applies the ladder string (rightmost operator first) to determinant
// `bits`. Returns false when the string annihilates it.
bool apply_string(const std::vector<fermion::LadderOp>& ops, std::uint32_t& bits,
                  int& sign) {
  sign = 1;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    const std::uint32_t bit = 1u << it->orbital;
    const bool occupied = bits & bit;
    if (it->create == occupied) return false;
    if (std::popcount(bits & (bit - 1)) & 1) sign = -sign;
    bits ^= bit;
  }
  return true;
}

}  // namespace

Eigen::SparseMatrix<double> fock_matrix(const fermion::FermionOperator& op, int n_modes) {
  if (n_modes < 1 || n_modes > 24) throw std::invalid_argument("mode count out of range");
  const std::uint32_t dim = 1u << n_modes;
  std::vector<Eigen::Triplet<double>> triplets;
  for (const auto& [key, coeff] : op.terms()) {
    const auto ops = fermion::FermionOperator::decode_key(key);
    for (std::uint32_t col = 0; col < dim; ++col) {
      std::uint32_t row = col;
      int sign = 1;
      if (apply_string(ops, row, sign)) triplets.emplace_back(row, col, sign * coeff);
    }
  }
  Eigen::SparseMatrix<double> m(dim, dim);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

Eigen::MatrixXd fock_dense(const fermion::FermionOperator& op, int n_modes) {
  if (n_modes > 12) throw std::invalid_argument("dense Fock matrix limited to 12 modes");
  return Eigen::MatrixXd(fock_matrix(op, n_modes));
}

}  // namespace qsd::testing

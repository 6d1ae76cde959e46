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

// Test oracle: builds operator matrices directly from ladder-operator action
// on occupation-number determinants, with explicit fermionic signs. This path
// never touches the Jordan-Wigner encoding, so it can certify it.

#ifndef QSD_TESTS_FOCK_ORACLE_HPP
#define QSD_TESTS_FOCK_ORACLE_HPP

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "qsd/fermion.hpp"

namespace qsd::testing {

/// Sparse Fock-space matrix of `op` over all 2^n_modes determinants. Bit q of
/// the basis index is the occupation of spin-orbital q; the sign of c_q /
/// c+_q counts occupied modes below q.
Eigen::SparseMatrix<double> fock_matrix(const fermion::FermionOperator& op, int n_modes);

/// Dense variant for small mode counts.
Eigen::MatrixXd fock_dense(const fermion::FermionOperator& op, int n_modes);

}  // namespace qsd::testing

#endif  // QSD_TESTS_FOCK_ORACLE_HPP

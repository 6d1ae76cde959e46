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

#include "qsd/fermion.hpp"

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <sstream>

#include "qsd/encoding.hpp"
#include "qsd/subspace.hpp"
#include "support/fock_oracle.hpp"

namespace qsd {
namespace {

using fermion::FermionOperator;
using fermion::LadderOp;
using testing::fock_dense;

TEST(FermionOperator, NormalOrderingCombinesEqualOperators) {
  // c_0 c+_0 = 1 - c+_0 c_0
  FermionOperator lhs;
  lhs.add_term(1.0, {{0, false}, {0, true}});
  FermionOperator rhs = FermionOperator::identity(1.0);
  rhs.add_term(-1.0, {{0, true}, {0, false}});
  EXPECT_EQ(lhs, rhs);

  // c+_1 c+_0 = -c+_0 c+_1, and c+_q c+_q = 0
  FermionOperator a, b;
  a.add_term(1.0, {{1, true}, {0, true}});
  b.add_term(-1.0, {{0, true}, {1, true}});
  EXPECT_EQ(a, b);
  FermionOperator zero;
  zero.add_term(2.5, {{3, true}, {3, true}});
  EXPECT_EQ(zero.term_count(), 0u);
}

TEST(FermionOperator, ProductMatchesFockOracle) {
  FermionOperator a, b;
  a.add_term(0.7, {{0, true}, {1, false}});
  a.add_term(-0.2, {{2, true}, {2, false}});
  b.add_term(1.3, {{1, true}, {0, false}});
  b.add_term(0.5, {{2, true}, {0, false}});
  const FermionOperator prod = a * b;
  const Eigen::MatrixXd expected = fock_dense(a, 3) * fock_dense(b, 3);
  EXPECT_LT((fock_dense(prod, 3) - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(ParseFcidump, MapsHeaderAndIntegralFields) {
  std::istringstream in(
      "&FCI NORB=1,NELEC=2,MS2=0,\n&END\n"
      "0.5 1 1 0 0\n"
      "-1.0 0 0 0 0\n");
  const auto h = fermion::parse_fcidump(in);
  EXPECT_EQ(h.n_spatial, 1);
  EXPECT_EQ(h.n_up, 1);
  EXPECT_EQ(h.n_down, 1);
  EXPECT_DOUBLE_EQ(h.t1(0, 0), 0.5);
  EXPECT_DOUBLE_EQ(h.core_energy, -1.0);
}

TEST(ParseFcidump, RejectsNonIntegerSpinCounts) {
  std::istringstream in("&FCI NORB=1,NELEC=2,MS2=1,\n&END\n");
  try {
    fermion::parse_fcidump(in);
    FAIL() << "expected parse error";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("line"), std::string::npos);
  }
}

TEST(ParseFcidump, NamesLineOfBadData) {
  std::istringstream bad_value(
      "&FCI NORB=2,NELEC=2,MS2=0,\n&END\n"
      "0.5 1 1 0 0\n"
      "oops 1 2 0 0\n");
  try {
    fermion::parse_fcidump(bad_value);
    FAIL() << "expected parse error";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
  }

  std::istringstream bad_index(
      "&FCI NORB=2,NELEC=2,MS2=0,\n&END\n"
      "0.5 3 1 0 0\n");
  EXPECT_THROW(fermion::parse_fcidump(bad_index), std::runtime_error);
}

TEST(ParseFcidump, H2FixtureReproducesReferenceEnergies) {
  const auto h = fermion::parse_fcidump_file(std::string(QSD_DATA_DIR) +
                                             "/h2_sto3g_0p735.fcidump");
  EXPECT_EQ(h.n_spatial, 2);
  EXPECT_EQ(h.n_up, 1);
  EXPECT_EQ(h.n_down, 1);
  h.validate();

  const PauliSum hq = jordan_wigner(h.to_operator(), 4);
  const auto fci = fci_ground_state(hq, SectorSpec{2, 1, 1});
  // Value recorded in data/h2_manifest.json by the generator.
  EXPECT_NEAR(fci.energy, -1.13730602833176, 1e-9);
  EXPECT_NEAR(fci.energy, -1.1373, 5e-4);

  // HF determinant (up in orbital 0, down in orbital 0) recovers E_HF.
  EXPECT_NEAR(hq.diagonal_expectation(Configuration{0b0101}), -1.1169989926947228, 1e-9);
}

TEST(SpinSquared, SingleOrbitalEigenvalues) {
  const auto s2 = fermion::build_spin_squared(1);
  const Eigen::MatrixXd m = fock_dense(s2, 2);
  // determinants: |0>, |up>, |down>, |up down>
  EXPECT_NEAR(m(1, 1), 0.75, 1e-12);  // single electron: s(s+1) = 3/4
  EXPECT_NEAR(m(2, 2), 0.75, 1e-12);
  EXPECT_NEAR(m(3, 3), 0.0, 1e-12);  // closed shell
  EXPECT_NEAR(m(0, 0), 0.0, 1e-12);
}

TEST(SpinSquared, TwoOrbitalSpectrumByBruteForce) {
  const auto s2 = fermion::build_spin_squared(2);
  const PauliSum s2q = jordan_wigner(s2, 4);
  const Eigen::MatrixXd dense = dense_matrix(s2q);
  EXPECT_LT((dense - fock_dense(s2, 4)).cwiseAbs().maxCoeff(), 1e-12);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense);
  std::vector<double> eigs(solver.eigenvalues().data(), solver.eigenvalues().data() + 16);
  std::sort(eigs.begin(), eigs.end());
  // Fock space of 2 orbitals: five singlets (S^2 = 0), eight doublets (3/4),
  // three triplet components (2).
  std::vector<double> expected;
  expected.insert(expected.end(), 5, 0.0);
  expected.insert(expected.end(), 8, 0.75);
  expected.insert(expected.end(), 3, 2.0);
  ASSERT_EQ(eigs.size(), expected.size());
  for (std::size_t i = 0; i < eigs.size(); ++i) EXPECT_NEAR(eigs[i], expected[i], 1e-10);

  // The (1 up, 1 down) sector carries eigenvalues {0, 0, 0, 2}.
  const auto basis = sector_basis(SectorSpec{2, 1, 1});
  const auto block = project(s2q, basis);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sector_solver(block.dense());
  EXPECT_NEAR(sector_solver.eigenvalues()(0), 0.0, 1e-10);
  EXPECT_NEAR(sector_solver.eigenvalues()(1), 0.0, 1e-10);
  EXPECT_NEAR(sector_solver.eigenvalues()(2), 0.0, 1e-10);
  EXPECT_NEAR(sector_solver.eigenvalues()(3), 2.0, 1e-10);
}

TEST(Penalize, ZeroStrengthReturnsInputUnchanged) {
  const auto ham = fermion::make_hubbard_chain(2, 1.0, 4.0, 1, 1);
  const auto h_el = ham.to_operator();
  const auto s2 = fermion::build_spin_squared(2);
  EXPECT_EQ(fermion::penalize(h_el, s2, {0.0, 0.75}), h_el);
}

TEST(Penalize, OnTargetSpinIsUnpenalized) {
  // H_el = 0, s0^2 = 3/4: the single-electron determinants stay at zero.
  const auto s2 = fermion::build_spin_squared(1);
  const auto penalized = fermion::penalize(FermionOperator{}, s2, {0.01, 0.75});
  const Eigen::MatrixXd m = fock_dense(penalized, 2);
  EXPECT_NEAR(m(1, 1), 0.0, 1e-12);
  EXPECT_NEAR(m(2, 2), 0.0, 1e-12);
  // the closed-shell singlet (S^2 = 0) pays 0.01 * (3/4)^2
  EXPECT_NEAR(m(3, 3), 0.01 * 0.5625, 1e-12);
}

TEST(Penalize, TripletsAcquireTheSquaredGap) {
  // 2 orbitals, H_el = 0, s0^2 = 0, M = 0.01: triplets sit at 0.01 * 4.
  const auto s2 = fermion::build_spin_squared(2);
  const auto penalized = fermion::penalize(FermionOperator{}, s2, {0.01, 0.0});
  const PauliSum pq = jordan_wigner(penalized, 4);
  const auto block = project(pq, sector_basis(SectorSpec{2, 1, 1}));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block.dense());
  EXPECT_NEAR(solver.eigenvalues()(0), 0.0, 1e-12);
  EXPECT_NEAR(solver.eigenvalues()(3), 0.04, 1e-12);
}

TEST(Hubbard, ClosedFormGroundEnergies) {
  EXPECT_THROW(fermion::make_hubbard_chain(1, 1.0, 1.0, 0, 0), std::invalid_argument);

  const auto free_chain = fermion::make_hubbard_chain(2, 1.0, 0.0, 1, 1);
  const auto h_free = jordan_wigner(free_chain.to_operator(), 4);
  EXPECT_NEAR(fci_ground_state(h_free, SectorSpec{2, 1, 1}).energy, -2.0, 1e-10);

  const auto atomic = fermion::make_hubbard_chain(2, 0.0, 4.0, 1, 1);
  const auto h_atomic = jordan_wigner(atomic.to_operator(), 4);
  EXPECT_NEAR(fci_ground_state(h_atomic, SectorSpec{2, 1, 1}).energy, 0.0, 1e-10);
}

TEST(Hubbard, TenQubitFixtureGroundEnergy) {
  // Frozen from an independent determinant-basis diagonalization.
  const auto ham = fermion::make_hubbard_chain(5, 1.0, 4.0, 3, 2);
  const auto h = jordan_wigner(ham.to_operator(), 10);
  EXPECT_NEAR(fci_ground_state(h, SectorSpec{5, 3, 2}).energy, -2.417473004814, 1e-9);
}

TEST(FermionInvariants, HermiticityAndSymmetryCommutators) {
  const auto ham = fermion::make_hubbard_chain(3, 1.0, 4.0, 2, 1);
  const auto h_el = ham.to_operator();
  const auto s2 = fermion::build_spin_squared(3);
  const auto penalized = fermion::penalize(h_el, s2, {0.01, 0.75});

  const Eigen::MatrixXd h_dense = dense_matrix(jordan_wigner(penalized, 6));
  EXPECT_LT((h_dense - h_dense.transpose()).cwiseAbs().maxCoeff(), 1e-12);

  const Eigen::MatrixXd hel_dense = dense_matrix(jordan_wigner(h_el, 6));
  const Eigen::MatrixXd s2_dense = dense_matrix(jordan_wigner(s2, 6));
  EXPECT_LT((hel_dense * s2_dense - s2_dense * hel_dense).cwiseAbs().maxCoeff(), 1e-10);

  for (const bool spin_down : {false, true}) {
    const auto n_op = fermion::build_number_operator(3, spin_down);
    const Eigen::MatrixXd n_dense = dense_matrix(jordan_wigner(n_op, 6));
    EXPECT_LT((hel_dense * n_dense - n_dense * hel_dense).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(FermionInvariants, PenaltyPreservesTargetSector) {
  // Every penalized eigenvector with on-target <S^2> is an H_el eigenvector
  // with the same eigenvalue.
  const auto ham = fermion::make_hubbard_chain(2, 1.0, 4.0, 1, 1);
  const auto h_el = ham.to_operator();
  const auto s2 = fermion::build_spin_squared(2);
  const double s0sq = 0.0;
  const auto penalized = fermion::penalize(h_el, s2, {0.25, s0sq});

  const Eigen::MatrixXd hp = dense_matrix(jordan_wigner(penalized, 4));
  const Eigen::MatrixXd hel = dense_matrix(jordan_wigner(h_el, 4));
  const Eigen::MatrixXd s2d = dense_matrix(jordan_wigner(s2, 4));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hp);
  int checked = 0;
  for (int i = 0; i < hp.rows(); ++i) {
    const Eigen::VectorXd v = solver.eigenvectors().col(i);
    const double s2_exp = v.dot(s2d * v);
    if (std::abs(s2_exp - s0sq) > 1e-8) continue;
    const double e = solver.eigenvalues()(i);
    EXPECT_LT((hel * v - e * v).norm(), 1e-8);
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

}  // namespace
}  // namespace qsd

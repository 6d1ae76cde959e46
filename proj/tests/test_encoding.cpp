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

#include "qsd/encoding.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <random>
#include <sstream>

#include "qsd/fermion.hpp"
#include "support/fock_oracle.hpp"

namespace qsd {
namespace {

using fermion::FermionOperator;

PauliSum h2_penalized() {
  const auto ham = fermion::parse_fcidump_file(std::string(QSD_DATA_DIR) +
                                               "/h2_sto3g_0p735.fcidump");
  const auto penalized =
      fermion::penalize(ham.to_operator(), fermion::build_spin_squared(2), {0.01, 0.0});
  return jordan_wigner(penalized, 4);
}

TEST(JordanWigner, NumberOperatorImage) {
  FermionOperator n0;
  n0.add_term(1.0, {{0, true}, {0, false}});
  const PauliSum p = jordan_wigner(n0, 2);
  EXPECT_NEAR(p.identity_offset(), 0.5, 1e-15);
  ASSERT_EQ(p.term_count(), 1u);
  const auto& [word, coeff] = *p.terms().begin();
  EXPECT_EQ(word.x_mask, 0u);
  EXPECT_EQ(word.z_mask, 1u);
  EXPECT_NEAR(coeff, -0.5, 1e-15);
}

TEST(JordanWigner, HoppingTermImage) {
  FermionOperator hop;
  hop.add_term(1.0, {{0, true}, {1, false}});
  hop.add_term(1.0, {{1, true}, {0, false}});
  const PauliSum p = jordan_wigner(hop, 2);
  // 0.5 (X0 X1 + Y0 Y1)
  EXPECT_NEAR(p.identity_offset(), 0.0, 1e-15);
  ASSERT_EQ(p.term_count(), 2u);
  EXPECT_NEAR(p.terms().at(PauliString{3, 0}), 0.5, 1e-15);
  EXPECT_NEAR(p.terms().at(PauliString{3, 3}), 0.5, 1e-15);
}

TEST(JordanWigner, DenseImageMatchesFockOracle) {
  const auto ham = fermion::parse_fcidump_file(std::string(QSD_DATA_DIR) +
                                               "/h2_sto3g_0p735.fcidump");
  const auto h_el = ham.to_operator();
  const Eigen::MatrixXd jw = dense_matrix(jordan_wigner(h_el, 4));
  const Eigen::MatrixXd fock = testing::fock_dense(h_el, 4);
  EXPECT_LT((jw - fock).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(JordanWigner, RejectsIndicesBeyondRegister) {
  FermionOperator op;
  op.add_term(1.0, {{5, true}, {5, false}});
  EXPECT_THROW(jordan_wigner(op, 4), std::invalid_argument);
}

TEST(DiagonalExpectation, SingleZTerms) {
  PauliSum z0(2);
  z0.add_term({0, 1}, 1.0);
  EXPECT_DOUBLE_EQ(z0.diagonal_expectation(Configuration{0}), 1.0);
  EXPECT_DOUBLE_EQ(z0.diagonal_expectation(Configuration{1}), -1.0);

  PauliSum zz(2);
  zz.add_term({0, 3}, 0.5);
  EXPECT_DOUBLE_EQ(zz.diagonal_expectation(Configuration{0b01}), -0.5);
}

TEST(DiagonalExpectation, MatchesDenseOracleOnFixture) {
  const PauliSum h = h2_penalized();
  const Eigen::MatrixXd dense = dense_matrix(h);
  const Configuration hf{0b0101};
  EXPECT_NEAR(h.diagonal_expectation(hf), dense(hf.bits, hf.bits), 1e-10);
}

TEST(MatrixElement, SingleBitFlip) {
  PauliSum x0(1);
  x0.add_term({1, 0}, 1.0);
  EXPECT_DOUBLE_EQ(x0.matrix_element(Configuration{1}, Configuration{0}), 1.0);
}

TEST(MatrixElement, RandomPairsAgainstDenseOracle) {
  const PauliSum h = h2_penalized();
  const Eigen::MatrixXd dense = dense_matrix(h);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint32_t> pick(0, 15);
  for (int trial = 0; trial < 100; ++trial) {
    const Configuration r{pick(rng)};
    const Configuration c{pick(rng)};
    EXPECT_NEAR(h.matrix_element(r, c), dense(r.bits, c.bits), 1e-12);
  }
}

TEST(MatrixElement, DiagonalPathConsistency) {
  const PauliSum h = h2_penalized();
  for (std::uint32_t z = 0; z < 16; ++z) {
    const Configuration cfg{z};
    EXPECT_DOUBLE_EQ(h.matrix_element(cfg, cfg), h.diagonal_expectation(cfg));
  }
}

TEST(DenseMatrix, SmallClosedForms) {
  PauliSum z0(1);
  z0.add_term({0, 1}, 1.0);
  const Eigen::MatrixXd m = dense_matrix(z0);
  EXPECT_NEAR(m(0, 0), 1.0, 1e-15);
  EXPECT_NEAR(m(1, 1), -1.0, 1e-15);
  EXPECT_NEAR(m.cwiseAbs().sum(), 2.0, 1e-15);

  PauliSum offset(2);
  offset.set_identity_offset(2.5);
  EXPECT_LT((dense_matrix(offset) - 2.5 * Eigen::MatrixXd::Identity(4, 4))
                .cwiseAbs()
                .maxCoeff(),
            1e-15);

  PauliSum big(15);
  EXPECT_THROW(dense_matrix(big), std::invalid_argument);
}

TEST(PauliSumInvariants, SingleTargetPerWord) {
  // A Pauli word maps each basis state to exactly one basis state.
  // X on qubit 0, Y on qubits 1 and 2 (even Y count, as in real operators).
  PauliSum word(3);
  word.add_term({0b111, 0b110}, 1.0);
  const Eigen::MatrixXd m = dense_matrix(word);
  for (int c = 0; c < 8; ++c) {
    int nonzeros = 0;
    for (int r = 0; r < 8; ++r)
      if (std::abs(m(r, c)) > 0.0) ++nonzeros;
    EXPECT_EQ(nonzeros, 1);
  }
}

TEST(PauliSumInvariants, SectorBlocksAreExactlyZero) {
  const auto ham = fermion::make_hubbard_chain(2, 1.0, 4.0, 1, 1);
  const PauliSum h = jordan_wigner(ham.to_operator(), 4);
  // (1,1)-sector string vs (2,0)-sector string: no term connects them.
  EXPECT_EQ(h.matrix_element(Configuration{0b0101}, Configuration{0b0011}), 0.0);
  EXPECT_EQ(h.matrix_element(Configuration{0b0110}, Configuration{0b1011}), 0.0);
}

TEST(PauliSumInvariants, LinearityOfMatrixElements) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_int_distribution<std::uint32_t> mask(0, 15);
  // even-Y words only, as produced by real Hermitian operators
  auto random_even_y_word = [&]() {
    for (;;) {
      const std::uint32_t x = mask(rng), z = mask(rng);
      if ((std::popcount(x & z) & 1) == 0) return PauliString{x, z};
    }
  };
  PauliSum h1(4), h2(4);
  for (int t = 0; t < 10; ++t) {
    h1.add_term(random_even_y_word(), coeff(rng));
    h2.add_term(random_even_y_word(), coeff(rng));
  }
  const double a = 0.37, b = -1.21;
  PauliSum combo(4);
  combo += h1;
  combo *= a;
  PauliSum h2b = h2;
  h2b *= b;
  combo += h2b;
  std::uniform_int_distribution<std::uint32_t> pick(0, 15);
  for (int t = 0; t < 50; ++t) {
    const Configuration r{pick(rng)}, c{pick(rng)};
    EXPECT_NEAR(combo.matrix_element(r, c),
                a * h1.matrix_element(r, c) + b * h2.matrix_element(r, c), 1e-12);
  }
}

TEST(PauliSum, DumpFormat) {
  PauliSum h(5);
  h.add_term({0, 0b10000}, -0.5);
  std::ostringstream out;
  h.dump(out);
  EXPECT_EQ(out.str(), "-0.5 ZIIII\n");
}

TEST(Configuration, BitStringRoundTrip) {
  const Configuration z{0b01101};
  EXPECT_EQ(to_bit_string(z, 5), "01101");
  EXPECT_EQ(configuration_from_string("01101"), z);
  EXPECT_THROW(configuration_from_string("01x01"), std::invalid_argument);
}

}  // namespace
}  // namespace qsd

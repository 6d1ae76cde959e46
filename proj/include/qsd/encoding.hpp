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

#ifndef QSD_ENCODING_HPP
#define QSD_ENCODING_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "qsd/fermion.hpp"

namespace qsd {

/// An N-bit occupation string. Bit q (little-endian) is the occupation of
/// spin-orbital q in blocked ordering: qubits 0..n-1 are the spin-up block,
/// n..2n-1 the spin-down block.
struct Configuration {
  std::uint32_t bits = 0;
  auto operator<=>(const Configuration&) const = default;
};

// Bitstring rendering with qubit N-1 leftmost ("1100" has qubits 2,3 set).
std::string to_bit_string(Configuration z, int n_qubits);
Configuration configuration_from_string(const std::string& s);

/// One Pauli word keyed by its X and Z supports. A qubit present in both
/// masks carries Y. The word itself (tensor product of I, X, Y, Z) is
/// Hermitian, so Hermitian operators expand over words with real
/// coefficients.
struct PauliString {
  std::uint32_t x_mask = 0;
  std::uint32_t z_mask = 0;
  auto operator<=>(const PauliString&) const = default;
};

/// Real-coefficient sum of Pauli words plus an identity offset.
///
/// Intended for real symmetric operators (Jordan-Wigner images of Hermitian
/// fermionic operators with real amplitudes): their expansions carry only
/// words with an even number of Y factors, which makes every matrix element
/// real. Terms with |coefficient| < 1e-14 are dropped.
class PauliSum {
 public:
  explicit PauliSum(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  double identity_offset() const { return identity_; }
  void set_identity_offset(double v) { identity_ = v; }

  void add_term(PauliString p, double coeff);
  std::size_t term_count() const { return terms_.size(); }
  const std::map<PauliString, double>& terms() const { return terms_; }

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator*=(double scale);

  /// <z|H|z>: identity offset plus the diagonal (x_mask = 0) words evaluated
  /// as coeff * (-1)^popcount(z & z_mask). O(#diagonal terms).
  double diagonal_expectation(Configuration z) const;

  /// <row|H|col>. Each Pauli word maps |col> to a single basis state
  /// (col XOR x_mask), so only the words keyed by x_mask = row XOR col
  /// contribute. Exact for even-Y words; odd-Y words (absent from real
  /// symmetric operators) have purely imaginary elements and contribute 0.
  double matrix_element(Configuration row, Configuration col) const;

  /// Textual dump, one line per term: "coefficient label" where label lists
  /// qubit N-1 leftmost (e.g. "-0.5 ZIIII"). The identity offset is emitted
  /// with an all-I label.
  void dump(std::ostream& out) const;

  // Distinct x_masks with their (z_mask, effective coefficient) groups; the
  // effective coefficient folds the i^{#Y} phase of the word. Used by the
  // projection and variance routines.
  struct XGroup {
    std::uint32_t x_mask;
    std::vector<std::pair<std::uint32_t, double>> entries;
  };
  const std::vector<XGroup>& x_groups() const;

 private:
  int n_qubits_;
  double identity_ = 0.0;
  std::map<PauliString, double> terms_;
  mutable std::vector<XGroup> x_groups_;
  mutable bool x_groups_valid_ = false;
};

/// Standard Jordan-Wigner image of a fermionic operator:
/// c+_q -> (X_q - i Y_q)/2 (x) Z_{q-1} ... Z_0. Like words are combined; the
/// input must be Hermitian (residual imaginary parts above 1e-10 throw).
PauliSum jordan_wigner(const fermion::FermionOperator& op, int n_qubits);

/// Full 2^N x 2^N matrix with entry (r, c) = matrix_element(h, r, c).
/// Refuses n_qubits > 14.
Eigen::MatrixXd dense_matrix(const PauliSum& h);

inline double diagonal_expectation(const PauliSum& h, Configuration z) {
  return h.diagonal_expectation(z);
}
inline double matrix_element(const PauliSum& h, Configuration row, Configuration col) {
  return h.matrix_element(row, col);
}

}  // namespace qsd

#endif  // QSD_ENCODING_HPP

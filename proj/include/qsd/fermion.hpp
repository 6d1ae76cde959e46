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

#ifndef QSD_FERMION_HPP
#define QSD_FERMION_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace qsd::fermion {

// A single creation/annihilation operator acting on a spin-orbital.
// Spin-orbitals use blocked ordering: spatial orbital i with spin up maps to
// index i, spin down to index i + n_spatial.
struct LadderOp {
  std::uint8_t orbital = 0;
  bool create = false;
};

/// Weighted sum of normal-ordered ladder-operator strings.
///
/// Terms are kept in a canonical normal-ordered form at all times: creation
/// operators first in ascending orbital order, then annihilation operators in
/// descending orbital order. add_term() accepts an arbitrary string and
/// rewrites it via the fermionic anticommutation relations, so two operators
/// that are equal as operators compare equal term-by-term.
class FermionOperator {
 public:
  FermionOperator() = default;

  static FermionOperator identity(double coeff);

  // Adds coeff * (product of ops, leftmost applied last) to this operator.
  void add_term(double coeff, const std::vector<LadderOp>& ops);

  FermionOperator& operator+=(const FermionOperator& other);
  FermionOperator& operator*=(double scale);
  friend FermionOperator operator+(FermionOperator a, const FermionOperator& b) {
    a += b;
    return a;
  }
  friend FermionOperator operator*(double s, FermionOperator a) {
    a *= s;
    return a;
  }
  // Operator product, normal-ordered and combined.
  friend FermionOperator operator*(const FermionOperator& a, const FermionOperator& b);

  bool operator==(const FermionOperator& other) const;

  std::size_t term_count() const { return terms_.size(); }
  double max_orbital() const;  // largest orbital index present, -1 if none

  // Removes terms with |coefficient| below tol.
  void prune(double tol = 1e-12);

  // Terms in canonical order. Each key decodes to a normal-ordered ladder
  // string via decode_key().
  const std::map<std::string, double>& terms() const { return terms_; }
  static std::vector<LadderOp> decode_key(const std::string& key);

 private:
  // Key: one byte per ladder op, (orbital << 1) | create, in canonical order.
  std::map<std::string, double> terms_;
  void accumulate(double coeff, std::vector<LadderOp> ops);
};

/// Active-space Hamiltonian data: integrals in the molecular-orbital basis.
///
/// one_body holds t_ij (symmetric). two_body holds the two-electron integrals
/// in chemists' notation (ij|kl) with the 8-fold permutational symmetry of
/// real orbitals. The assembly into a FermionOperator is done by
/// to_operator().
struct FermionHamiltonian {
  int n_spatial = 0;
  int n_up = 0;
  int n_down = 0;
  double core_energy = 0.0;
  std::vector<double> one_body;  // n_spatial^2, row-major
  std::vector<double> two_body;  // n_spatial^4, chemists' (ij|kl)

  FermionHamiltonian() = default;
  FermionHamiltonian(int n_spatial, int n_up, int n_down);

  double& t1(int i, int j);
  double t1(int i, int j) const;
  double& t2(int i, int j, int k, int l);  // chemists' (ij|kl)
  double t2(int i, int j, int k, int l) const;

  // Checks t_ij = t_ji and the 8-fold (ij|kl) symmetry to tol.
  void validate(double tol = 1e-12) const;

  // Second-quantized operator
  //   E_core + sum_{ij,s} t_ij c+_{is} c_{js}
  //          + 1/2 sum_{ijkl,st} (ij|kl) c+_{is} c+_{kt} c_{lt} c_{js}.
  // The (ij|kl) chemists' integral pairs index i with j and k with l on the
  // same electron; the resulting operator order above is the standard
  // physicists' string with the corresponding index permutation.
  FermionOperator to_operator() const;
};

struct SpinPenalty {
  double strength = 0.01;  // M > 0
  double s0_squared = 0.0;
};

/// Parses the FCIDUMP text format: a namelist header with NORB, NELEC, MS2
/// followed by "value i j k l" lines (1-based). (0 0 0 0) carries the core
/// energy, (i j 0 0) one-body integrals and everything else two-body
/// integrals in chemists' notation. All symmetry-equivalent slots are filled
/// from each line. Throws std::runtime_error naming the offending line.
FermionHamiltonian parse_fcidump(std::istream& in);
FermionHamiltonian parse_fcidump_file(const std::string& path);

/// Open-boundary Hubbard chain: hopping -t between neighbouring sites and
/// on-site repulsion U, i.e. (ii|ii) = U. Electron counts are chosen by the
/// caller. Throws for sites < 2.
FermionHamiltonian make_hubbard_chain(int sites, double hopping, double interaction,
                                      int n_up, int n_down);

/// Total-spin-squared operator
///   S^2 = sum_{ij} c_{i,up} c+_{j,up} c+_{i,down} c_{j,down}
///       + (n_up - n_down)/2 + (n_up - n_down)^2/4
/// over n_spatial orbitals, with number operators expanded as c+c.
FermionOperator build_spin_squared(int n_spatial);

/// Number operator for one spin sector (spin_down = false selects up).
FermionOperator build_number_operator(int n_spatial, bool spin_down);

/// H_el + M (s0^2 - S^2)^2 with the square expanded at the operator level and
/// like normal-ordered strings combined.
FermionOperator penalize(const FermionOperator& h_el, const FermionOperator& s2,
                         const SpinPenalty& penalty);

}  // namespace qsd::fermion

#endif  // QSD_FERMION_HPP

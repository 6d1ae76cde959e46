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

#ifndef QSD_SUBSPACE_HPP
#define QSD_SUBSPACE_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qsd/encoding.hpp"
#include "qsd/recovery.hpp"

namespace qsd {

/// Ordered list of distinct configurations spanning a subspace.
struct SubspaceBasis {
  std::vector<Configuration> configurations;

  // Builds a sorted, de-duplicated basis.
  static SubspaceBasis from_configurations(std::vector<Configuration> configs);
  std::size_t size() const { return configurations.size(); }
};

struct SubspaceResult {
  double energy = 0.0;
  Eigen::VectorXd coefficients;  // unit norm over the basis
  std::size_t dimension = 0;
};

/// Hamiltonian projected onto a basis. Dense storage up to dimension 2000,
/// sparse row maps above.
class ProjectedMatrix {
 public:
  static constexpr std::size_t kDenseLimit = 2000;

  std::size_t dim() const { return dim_; }
  bool is_dense() const { return dense_.size() > 0; }
  const Eigen::MatrixXd& dense() const { return dense_; }

  Eigen::VectorXd multiply(const Eigen::VectorXd& x) const;
  double frobenius_norm() const;

  friend ProjectedMatrix project(const PauliSum& h, const SubspaceBasis& basis);
  explicit ProjectedMatrix(Eigen::MatrixXd m);

 private:
  ProjectedMatrix() = default;
  std::size_t dim_ = 0;
  Eigen::MatrixXd dense_;
  std::vector<std::vector<std::pair<std::uint32_t, double>>> rows_;  // sparse path
};

/// P H P over the basis span; entry (a, b) = <z_a|H|z_b>.
ProjectedMatrix project(const PauliSum& h, const SubspaceBasis& basis);

/// Lowest eigenpair. Dense matrices use a direct symmetric solver; sparse
/// ones Lanczos with full reorthogonalization and a deterministic start
/// vector. Throws on non-symmetric input (dense) or non-convergence.
SubspaceResult ground_state(const ProjectedMatrix& m, double tol = 1e-10);
SubspaceResult ground_state(const Eigen::MatrixXd& m, double tol = 1e-10);

/// Delta H = sqrt(<H^2> - <H>^2) of the state sum_a coeffs[a] |z_a>. H|psi>
/// is applied term by term over the (bounded) support, so the result is exact
/// up to roundoff; tiny negative variances are clamped to zero.
double energy_variance(const PauliSum& h, const SubspaceBasis& basis,
                       const Eigen::VectorXd& coeffs);

/// All configurations of a particle-number sector, ascending.
SubspaceBasis sector_basis(const SectorSpec& sector);

/// Exact diagonalization over the full sector: the reference oracle for
/// every energy produced by the sampling pipeline. Refuses sector dimensions
/// above 10^6.
SubspaceResult fci_ground_state(const PauliSum& h, const SectorSpec& sector);

}  // namespace qsd

#endif  // QSD_SUBSPACE_HPP

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

#include "qsd/subspace.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include <Eigen/Eigenvalues>

#include "qsd/rng.hpp"

namespace qsd {

SubspaceBasis SubspaceBasis::from_configurations(std::vector<Configuration> configs) {
  std::sort(configs.begin(), configs.end());
  configs.erase(std::unique(configs.begin(), configs.end()), configs.end());
  return SubspaceBasis{std::move(configs)};
}

ProjectedMatrix::ProjectedMatrix(Eigen::MatrixXd m) : dim_(m.rows()), dense_(std::move(m)) {
  if (dense_.rows() != dense_.cols()) throw std::invalid_argument("matrix must be square");
}

Eigen::VectorXd ProjectedMatrix::multiply(const Eigen::VectorXd& x) const {
  if (is_dense()) return dense_ * x;
  Eigen::VectorXd y = Eigen::VectorXd::Zero(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    double acc = 0.0;
    for (const auto& [c, v] : rows_[r]) acc += v * x[c];
    y[r] = acc;
  }
  return y;
}

double ProjectedMatrix::frobenius_norm() const {
  if (is_dense()) return dense_.norm();
  double acc = 0.0;
  for (const auto& row : rows_)
    for (const auto& [c, v] : row) acc += v * v;
  return std::sqrt(acc);
}

ProjectedMatrix project(const PauliSum& h, const SubspaceBasis& basis) {
  if (basis.size() == 0) throw std::invalid_argument("basis must be nonempty");
  const std::size_t dim = basis.size();
  std::unordered_map<std::uint32_t, std::uint32_t> index;
  index.reserve(dim * 2);
  for (std::size_t a = 0; a < dim; ++a) index.emplace(basis.configurations[a].bits, a);

  ProjectedMatrix out;
  out.dim_ = dim;
  const bool dense = dim <= ProjectedMatrix::kDenseLimit;
  if (dense) out.dense_ = Eigen::MatrixXd::Zero(dim, dim);
  else out.rows_.resize(dim);

  // Row construction walks the distinct x_masks of H: each term group maps
  // |z_b> to the single configuration z_b XOR x_mask.
  for (std::size_t b = 0; b < dim; ++b) {
    const Configuration col = basis.configurations[b];
    const double diag = h.diagonal_expectation(col);
    if (dense) out.dense_(b, b) += diag;
    else out.rows_[b].emplace_back(static_cast<std::uint32_t>(b), diag);
    for (const auto& group : h.x_groups()) {
      if (group.x_mask == 0) continue;
      const auto it = index.find(col.bits ^ group.x_mask);
      if (it == index.end()) continue;
      double v = 0.0;
      for (const auto& [z_mask, eff] : group.entries)
        v += (std::popcount(col.bits & z_mask) & 1) ? -eff : eff;
      if (dense) out.dense_(it->second, b) += v;
      else if (v != 0.0) out.rows_[it->second].emplace_back(static_cast<std::uint32_t>(b), v);
    }
  }
  return out;
}

namespace {

SubspaceResult dense_ground_state(const Eigen::MatrixXd& m, double tol) {
  const auto dim = m.rows();
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw std::invalid_argument("ground_state needs a symmetric matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("dense eigensolver failed to converge");
  SubspaceResult res;
  res.energy = solver.eigenvalues()(0);
  res.coefficients = solver.eigenvectors().col(0);
  res.dimension = dim;
  const double resid = (m * res.coefficients - res.energy * res.coefficients).norm();
  if (resid > std::max(tol, 1e-12) * std::max(1.0, m.norm()))
    throw std::runtime_error("dense eigenpair residual above tolerance");
  return res;
}

// Lanczos with full reorthogonalization and a deterministic seeded start.
SubspaceResult lanczos_ground_state(const ProjectedMatrix& m, double tol) {
  const std::size_t dim = m.dim();
  const std::size_t max_iter = std::min<std::size_t>(dim, 400);

  Rng rng(derive_seed(0x51ab5ULL, seed_stream::kLanczos));
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd v = Eigen::VectorXd::NullaryExpr(dim, [&](Eigen::Index) { return gauss(rng); });
  v.normalize();

  std::vector<Eigen::VectorXd> basis_vecs;
  std::vector<double> alpha, beta;
  const double mnorm = std::max(1.0, m.frobenius_norm());

  Eigen::VectorXd w;
  SubspaceResult best;
  for (std::size_t k = 0; k < max_iter; ++k) {
    basis_vecs.push_back(v);
    w = m.multiply(v);
    const double a = v.dot(w);
    alpha.push_back(a);
    w -= a * v;
    if (k > 0) w -= beta.back() * basis_vecs[k - 1];
    // full reorthogonalization, twice for stability
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : basis_vecs) w -= u.dot(w) * u;

    // tridiagonal eigenproblem of the current Krylov space
    const std::size_t kk = alpha.size();
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(kk, kk);
    for (std::size_t i = 0; i < kk; ++i) {
      t(i, i) = alpha[i];
      if (i + 1 < kk) t(i, i + 1) = t(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tsolver(t);
    const Eigen::VectorXd s = tsolver.eigenvectors().col(0);
    const double theta = tsolver.eigenvalues()(0);
    const double b = w.norm();
    const double resid_est = b * std::abs(s(kk - 1));

    if (resid_est <= tol * mnorm || b < 1e-14 * mnorm || kk == dim) {
      Eigen::VectorXd x = Eigen::VectorXd::Zero(dim);
      for (std::size_t i = 0; i < kk; ++i) x += s(i) * basis_vecs[i];
      x.normalize();
      best.energy = theta;
      best.coefficients = x;
      best.dimension = dim;
      const double resid = (m.multiply(x) - theta * x).norm();
      if (resid > 10 * std::max(tol, 1e-12) * mnorm)
        throw std::runtime_error("Lanczos residual above tolerance after " +
                                 std::to_string(kk) + " iterations");
      return best;
    }
    beta.push_back(b);
    v = w / b;
  }
  throw std::runtime_error("Lanczos failed to converge within iteration budget");
}

}  // namespace

SubspaceResult ground_state(const ProjectedMatrix& m, double tol) {
  if (m.dim() == 0) throw std::invalid_argument("empty matrix");
  if (m.is_dense()) return dense_ground_state(m.dense(), tol);
  return lanczos_ground_state(m, tol);
}

SubspaceResult ground_state(const Eigen::MatrixXd& m, double tol) {
  return dense_ground_state(m, tol);
}

double energy_variance(const PauliSum& h, const SubspaceBasis& basis,
                       const Eigen::VectorXd& coeffs) {
  if (static_cast<std::size_t>(coeffs.size()) != basis.size())
    throw std::invalid_argument("coefficient length does not match basis");
  if (std::abs(coeffs.norm() - 1.0) > 1e-8)
    throw std::invalid_argument("coefficients must be unit norm");

  // H|psi> exactly, over the (at most |basis| * #terms) support.
  std::unordered_map<std::uint32_t, double> h_psi;
  h_psi.reserve(basis.size() * (h.x_groups().size() + 1));
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const std::uint32_t z = basis.configurations[a].bits;
    const double c = coeffs[a];
    if (c == 0.0) continue;
    h_psi[z] += c * h.diagonal_expectation(Configuration{z});
    for (const auto& group : h.x_groups()) {
      if (group.x_mask == 0) continue;
      double v = 0.0;
      for (const auto& [z_mask, eff] : group.entries)
        v += (std::popcount(z & z_mask) & 1) ? -eff : eff;
      if (v != 0.0) h_psi[z ^ group.x_mask] += c * v;
    }
  }

  double h2 = 0.0;  // <psi|H^2|psi> = ||H psi||^2
  for (const auto& [z, amp] : h_psi) h2 += amp * amp;
  double h1 = 0.0;  // <psi|H|psi>
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const auto it = h_psi.find(basis.configurations[a].bits);
    if (it != h_psi.end()) h1 += coeffs[a] * it->second;
  }
  const double var = h2 - h1 * h1;
  if (var < -1e-10) throw std::runtime_error("variance accumulated below -1e-10");
  return std::sqrt(std::max(0.0, var));
}

SubspaceBasis sector_basis(const SectorSpec& sector) {
  std::vector<Configuration> configs;
  configs.reserve(sector.dimension());
  // ascending enumeration of each block's combinations
  std::vector<std::uint32_t> ups, downs;
  const std::uint32_t limit = 1u << sector.n_spatial;
  for (std::uint32_t b = 0; b < limit; ++b) {
    if (std::popcount(b) == sector.n_up) ups.push_back(b);
    if (std::popcount(b) == sector.n_down) downs.push_back(b);
  }
  for (std::uint32_t d : downs)
    for (std::uint32_t u : ups)
      configs.push_back(Configuration{(d << sector.n_spatial) | u});
  std::sort(configs.begin(), configs.end());
  return SubspaceBasis{std::move(configs)};
}

SubspaceResult fci_ground_state(const PauliSum& h, const SectorSpec& sector) {
  if (sector.n_qubits() != h.n_qubits())
    throw std::invalid_argument("sector and Hamiltonian qubit counts differ");
  if (sector.dimension() > 1000000ULL)
    throw std::invalid_argument("sector dimension exceeds the 10^6 oracle guard");
  const SubspaceBasis basis = sector_basis(sector);
  return ground_state(project(h, basis));
}

}  // namespace qsd

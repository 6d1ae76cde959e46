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

#include <bit>
#include <cmath>
#include <complex>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

namespace qsd {

namespace {

constexpr double kDropTol = 1e-14;

inline int parity(std::uint32_t v) { return std::popcount(v) & 1; }

// i^k for k mod 4.
inline std::complex<double> i_pow(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// Pauli-word product. With W(x, z) = i^{|x&z|} X^x Z^z (per-qubit X before Z),
//   W1 W2 = i^e W3,  x3 = x1^x2, z3 = z1^z2,
//   e = |x1&z1| + |x2&z2| - |x3&z3| + 2 |z1&x2|  (mod 4).
struct WordProduct {
  PauliString word;
  int phase_exp;  // exponent of i, mod 4
};

inline WordProduct multiply(PauliString a, PauliString b) {
  PauliString out{a.x_mask ^ b.x_mask, a.z_mask ^ b.z_mask};
  int e = std::popcount(a.x_mask & a.z_mask) + std::popcount(b.x_mask & b.z_mask) -
          std::popcount(out.x_mask & out.z_mask) + 2 * std::popcount(a.z_mask & b.x_mask);
  return {out, ((e % 4) + 4) % 4};
}

struct KeyHash {
  std::size_t operator()(std::uint64_t k) const noexcept {
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    return static_cast<std::size_t>(k);
  }
};

inline std::uint64_t pack(PauliString p) {
  return (std::uint64_t(p.x_mask) << 32) | p.z_mask;
}
inline PauliString unpack(std::uint64_t k) {
  return {static_cast<std::uint32_t>(k >> 32), static_cast<std::uint32_t>(k)};
}

using Accumulator = std::unordered_map<std::uint64_t, std::complex<double>, KeyHash>;

}  // namespace

std::string to_bit_string(Configuration z, int n_qubits) {
  std::string s(n_qubits, '0');
  for (int q = 0; q < n_qubits; ++q)
    if (z.bits >> q & 1u) s[n_qubits - 1 - q] = '1';
  return s;
}

Configuration configuration_from_string(const std::string& s) {
  Configuration z;
  const int n = static_cast<int>(s.size());
  for (int i = 0; i < n; ++i) {
    const char c = s[i];
    if (c != '0' && c != '1') throw std::invalid_argument("bitstring must be 0/1");
    if (c == '1') z.bits |= 1u << (n - 1 - i);
  }
  return z;
}

PauliSum::PauliSum(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 32) throw std::invalid_argument("n_qubits out of range");
}

void PauliSum::add_term(PauliString p, double coeff) {
  const std::uint32_t mask = n_qubits_ == 32 ? 0xffffffffu : ((1u << n_qubits_) - 1);
  if ((p.x_mask & ~mask) || (p.z_mask & ~mask))
    throw std::invalid_argument("Pauli mask exceeds qubit count");
  x_groups_valid_ = false;
  if (p.x_mask == 0 && p.z_mask == 0) {
    identity_ += coeff;
    return;
  }
  double& slot = terms_[p];
  slot += coeff;
  if (std::abs(slot) < kDropTol) terms_.erase(p);
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.n_qubits_ != n_qubits_) throw std::invalid_argument("qubit count mismatch");
  identity_ += other.identity_;
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

PauliSum& PauliSum::operator*=(double scale) {
  x_groups_valid_ = false;
  identity_ *= scale;
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= scale;
    if (std::abs(it->second) < kDropTol) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

double PauliSum::diagonal_expectation(Configuration z) const {
  double sum = identity_;
  const auto& groups = x_groups();
  // groups are sorted by x_mask; the diagonal group is first when present
  if (!groups.empty() && groups.front().x_mask == 0) {
    for (const auto& [z_mask, coeff] : groups.front().entries)
      sum += parity(z.bits & z_mask) ? -coeff : coeff;
  }
  return sum;
}

double PauliSum::matrix_element(Configuration row, Configuration col) const {
  const std::uint32_t x = row.bits ^ col.bits;
  double sum = (x == 0) ? identity_ : 0.0;
  const auto& groups = x_groups();
  // binary search over sorted groups
  std::size_t lo = 0, hi = groups.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (groups[mid].x_mask < x) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < groups.size() && groups[lo].x_mask == x) {
    for (const auto& [z_mask, eff] : groups[lo].entries)
      sum += parity(col.bits & z_mask) ? -eff : eff;
  }
  return sum;
}

const std::vector<PauliSum::XGroup>& PauliSum::x_groups() const {
  if (!x_groups_valid_) {
    x_groups_.clear();
    for (const auto& [p, coeff] : terms_) {
      const int ny = std::popcount(p.x_mask & p.z_mask);
      // i^{ny}: even-Y words give a real sign; odd-Y words are purely
      // imaginary and cannot appear in a real symmetric operator.
      if (ny & 1) continue;
      const double eff = (ny & 2) ? -coeff : coeff;
      if (x_groups_.empty() || x_groups_.back().x_mask != p.x_mask)
        x_groups_.push_back({p.x_mask, {}});
      x_groups_.back().entries.emplace_back(p.z_mask, eff);
    }
    x_groups_valid_ = true;
  }
  return x_groups_;
}

void PauliSum::dump(std::ostream& out) const {
  auto label = [this](PauliString p) {
    std::string s(n_qubits_, 'I');
    for (int q = 0; q < n_qubits_; ++q) {
      const bool x = p.x_mask >> q & 1u;
      const bool z = p.z_mask >> q & 1u;
      if (x && z) {
        s[n_qubits_ - 1 - q] = 'Y';
      } else if (x) {
        s[n_qubits_ - 1 - q] = 'X';
      } else if (z) {
        s[n_qubits_ - 1 - q] = 'Z';
      }
    }
    return s;
  };
  if (identity_ != 0.0) out << identity_ << " " << std::string(n_qubits_, 'I') << "\n";
  for (const auto& [p, c] : terms_) out << c << " " << label(p) << "\n";
}

PauliSum jordan_wigner(const fermion::FermionOperator& op, int n_qubits) {
  if (op.max_orbital() >= n_qubits)
    throw std::invalid_argument("operator index exceeds qubit count");

  Accumulator total;
  for (const auto& [key, coeff] : op.terms()) {
    const auto ops = fermion::FermionOperator::decode_key(key);
    Accumulator acc;
    acc.emplace(pack({0, 0}), std::complex<double>(coeff, 0.0));
    for (const auto& ladder : ops) {
      const std::uint32_t bit = 1u << ladder.orbital;
      const std::uint32_t below = bit - 1;
      // c+_q = (X - iY)/2 (x) Z-string; c_q = (X + iY)/2 (x) Z-string.
      const PauliString px{bit, below};
      const PauliString py{bit, below | bit};
      const std::complex<double> wx(0.5, 0.0);
      const std::complex<double> wy = ladder.create ? std::complex<double>(0.0, -0.5)
                                                    : std::complex<double>(0.0, 0.5);
      Accumulator next;
      next.reserve(acc.size() * 2);
      for (const auto& [k, c] : acc) {
        const PauliString w = unpack(k);
        for (const auto& [factor, weight] : {std::pair{px, wx}, std::pair{py, wy}}) {
          const auto prod = multiply(w, factor);
          next[pack(prod.word)] += c * weight * i_pow(prod.phase_exp);
        }
      }
      acc = std::move(next);
    }
    for (const auto& [k, c] : acc) total[k] += c;
  }

  PauliSum sum(n_qubits);
  for (const auto& [k, c] : total) {
    if (std::abs(c) < kDropTol) continue;
    if (std::abs(c.imag()) > 1e-10)
      throw std::invalid_argument("Jordan-Wigner image has complex coefficients; "
                                  "input operator is not Hermitian");
    sum.add_term(unpack(k), c.real());
  }
  return sum;
}

Eigen::MatrixXd dense_matrix(const PauliSum& h) {
  const int n = h.n_qubits();
  if (n > 14) throw std::invalid_argument("dense_matrix limited to 14 qubits");
  const std::uint32_t dim = 1u << n;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (std::uint32_t c = 0; c < dim; ++c) {
    m(c, c) += h.diagonal_expectation(Configuration{c});
    for (const auto& group : h.x_groups()) {
      if (group.x_mask == 0) continue;
      const std::uint32_t r = c ^ group.x_mask;
      double v = 0.0;
      for (const auto& [z_mask, eff] : group.entries)
        v += parity(c & z_mask) ? -eff : eff;
      m(r, c) += v;
    }
  }
  return m;
}

}  // namespace qsd

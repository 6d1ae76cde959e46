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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace qsd::fermion {

namespace {

constexpr double kCombineTol = 1e-14;

char encode_op(const LadderOp& op) {
  return static_cast<char>((op.orbital << 1) | (op.create ? 1 : 0));
}

LadderOp decode_op(char c) {
  auto byte = static_cast<std::uint8_t>(c);
  return LadderOp{static_cast<std::uint8_t>(byte >> 1), (byte & 1) != 0};
}

}  // namespace

FermionOperator FermionOperator::identity(double coeff) {
  FermionOperator op;
  op.add_term(coeff, {});
  return op;
}

std::vector<LadderOp> FermionOperator::decode_key(const std::string& key) {
  std::vector<LadderOp> ops;
  ops.reserve(key.size());
  for (char c : key) ops.push_back(decode_op(c));
  return ops;
}

void FermionOperator::add_term(double coeff, const std::vector<LadderOp>& ops) {
  if (coeff == 0.0) return;
  accumulate(coeff, ops);
}

// Rewrites coeff * ops into normal order with a worklist, applying
//   c_a c+_b = delta_ab - c+_b c_a,
//   c+_a c+_b = -c+_b c+_a   (zero for a == b),
//   c_a c_b  = -c_b c_a      (zero for a == b),
// and accumulates the fully ordered strings into terms_.
void FermionOperator::accumulate(double coeff, std::vector<LadderOp> ops) {
  std::vector<std::pair<double, std::vector<LadderOp>>> work;
  work.emplace_back(coeff, std::move(ops));

  while (!work.empty()) {
    auto [c, str] = std::move(work.back());
    work.pop_back();

    bool rewritten = false;
    for (std::size_t i = 0; i + 1 < str.size(); ++i) {
      const LadderOp a = str[i];
      const LadderOp b = str[i + 1];
      if (!a.create && b.create) {
        // c_a c+_b out of order.
        if (a.orbital == b.orbital) {
          std::vector<LadderOp> contracted(str);
          contracted.erase(contracted.begin() + i, contracted.begin() + i + 2);
          work.emplace_back(c, std::move(contracted));
        }
        std::swap(str[i], str[i + 1]);
        work.emplace_back(-c, std::move(str));
        rewritten = true;
        break;
      }
      if (a.create == b.create) {
        if (a.orbital == b.orbital) {
          rewritten = true;  // c+c+ or cc with equal index vanishes
          break;
        }
        const bool swap_needed = a.create ? (a.orbital > b.orbital)
                                          : (a.orbital < b.orbital);
        if (swap_needed) {
          std::swap(str[i], str[i + 1]);
          work.emplace_back(-c, std::move(str));
          rewritten = true;
          break;
        }
      }
    }
    if (rewritten) continue;

    std::string key;
    key.reserve(str.size());
    for (const LadderOp& op : str) key.push_back(encode_op(op));
    double& slot = terms_[key];
    slot += c;
    if (std::abs(slot) < kCombineTol) terms_.erase(key);
  }
}

FermionOperator& FermionOperator::operator+=(const FermionOperator& other) {
  for (const auto& [key, c] : other.terms_) {
    double& slot = terms_[key];
    slot += c;
    if (std::abs(slot) < kCombineTol) terms_.erase(key);
  }
  return *this;
}

FermionOperator& FermionOperator::operator*=(double scale) {
  if (scale == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scale;
  return *this;
}

FermionOperator operator*(const FermionOperator& a, const FermionOperator& b) {
  FermionOperator result;
  for (const auto& [ka, ca] : a.terms_) {
    const auto ops_a = FermionOperator::decode_key(ka);
    for (const auto& [kb, cb] : b.terms_) {
      auto ops = ops_a;
      for (char c : kb) ops.push_back(decode_op(c));
      result.accumulate(ca * cb, std::move(ops));
    }
  }
  return result;
}

bool FermionOperator::operator==(const FermionOperator& other) const {
  return terms_ == other.terms_;
}

double FermionOperator::max_orbital() const {
  int max_idx = -1;
  for (const auto& [key, c] : terms_) {
    for (char ch : key) max_idx = std::max(max_idx, int(decode_op(ch).orbital));
  }
  return max_idx;
}

void FermionOperator::prune(double tol) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < tol) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

FermionHamiltonian::FermionHamiltonian(int n_spatial_, int n_up_, int n_down_)
    : n_spatial(n_spatial_),
      n_up(n_up_),
      n_down(n_down_),
      one_body(std::size_t(n_spatial_) * n_spatial_, 0.0),
      two_body(std::size_t(n_spatial_) * n_spatial_ * n_spatial_ * n_spatial_, 0.0) {
  if (n_spatial < 1) throw std::invalid_argument("n_spatial must be >= 1");
  if (n_up < 0 || n_down < 0 || n_up + n_down > 2 * n_spatial)
    throw std::invalid_argument("invalid electron counts");
}

double& FermionHamiltonian::t1(int i, int j) { return one_body[std::size_t(i) * n_spatial + j]; }
double FermionHamiltonian::t1(int i, int j) const {
  return one_body[std::size_t(i) * n_spatial + j];
}

double& FermionHamiltonian::t2(int i, int j, int k, int l) {
  const std::size_t n = n_spatial;
  return two_body[((std::size_t(i) * n + j) * n + k) * n + l];
}
double FermionHamiltonian::t2(int i, int j, int k, int l) const {
  const std::size_t n = n_spatial;
  return two_body[((std::size_t(i) * n + j) * n + k) * n + l];
}

void FermionHamiltonian::validate(double tol) const {
  const int n = n_spatial;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (std::abs(t1(i, j) - t1(j, i)) > tol)
        throw std::invalid_argument("one-body tensor not symmetric");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double v = t2(i, j, k, l);
          if (std::abs(v - t2(j, i, k, l)) > tol || std::abs(v - t2(i, j, l, k)) > tol ||
              std::abs(v - t2(k, l, i, j)) > tol)
            throw std::invalid_argument("two-body tensor lacks 8-fold symmetry");
        }
}

FermionOperator FermionHamiltonian::to_operator() const {
  FermionOperator h;
  if (core_energy != 0.0) h.add_term(core_energy, {});

  const auto up = [](int i) { return static_cast<std::uint8_t>(i); };
  const int n = n_spatial;
  const auto dn = [n](int i) { return static_cast<std::uint8_t>(i + n); };

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double t = t1(i, j);
      if (t == 0.0) continue;
      h.add_term(t, {{up(i), true}, {up(j), false}});
      h.add_term(t, {{dn(i), true}, {dn(j), false}});
    }
  }

  // 1/2 sum_{ijkl,st} (ij|kl) c+_{is} c+_{kt} c_{lt} c_{js}
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double v = 0.5 * t2(i, j, k, l);
          if (v == 0.0) continue;
          for (int s = 0; s < 2; ++s)
            for (int t = 0; t < 2; ++t) {
              const auto a = s == 0 ? up(i) : dn(i);
              const auto b = t == 0 ? up(k) : dn(k);
              const auto c = t == 0 ? up(l) : dn(l);
              const auto d = s == 0 ? up(j) : dn(j);
              h.add_term(v, {{a, true}, {b, true}, {c, false}, {d, false}});
            }
        }
  return h;
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  std::ostringstream oss;
  oss << "FCIDUMP parse error at line " << line_no << ": " << what;
  throw std::runtime_error(oss.str());
}

// Extracts an integer field "NAME=value" from the header text.
bool header_int(const std::string& header, const std::string& name, long& out) {
  auto pos = header.find(name);
  while (pos != std::string::npos) {
    // must not be part of a longer identifier
    if (pos == 0 || !std::isalnum(static_cast<unsigned char>(header[pos - 1]))) {
      auto eq = header.find('=', pos + name.size());
      if (eq == std::string::npos) return false;
      char* end = nullptr;
      out = std::strtol(header.c_str() + eq + 1, &end, 10);
      return end != header.c_str() + eq + 1;
    }
    pos = header.find(name, pos + 1);
  }
  return false;
}

void fill_two_body(FermionHamiltonian& h, int i, int j, int k, int l, double v) {
  // 8-fold symmetry of real integrals in chemists' notation.
  h.t2(i, j, k, l) = v;
  h.t2(j, i, k, l) = v;
  h.t2(i, j, l, k) = v;
  h.t2(j, i, l, k) = v;
  h.t2(k, l, i, j) = v;
  h.t2(l, k, i, j) = v;
  h.t2(k, l, j, i) = v;
  h.t2(l, k, j, i) = v;
}

}  // namespace

FermionHamiltonian parse_fcidump(std::istream& in) {
  std::string line;
  int line_no = 0;

  // Header: everything from &FCI until &END or a bare '/'.
  std::string header;
  bool header_done = false;
  while (!header_done && std::getline(in, line)) {
    ++line_no;
    header += line + " ";
    if (line.find("&END") != std::string::npos || line.find("/") != std::string::npos)
      header_done = true;
  }
  if (!header_done) parse_fail(line_no, "header not terminated by &END or /");

  long norb = 0, nelec = 0, ms2 = 0;
  if (!header_int(header, "NORB", norb)) parse_fail(line_no, "missing NORB");
  if (!header_int(header, "NELEC", nelec)) parse_fail(line_no, "missing NELEC");
  if (!header_int(header, "MS2", ms2)) ms2 = 0;
  if (norb < 1 || norb > 127) parse_fail(line_no, "NORB out of range");
  if ((nelec + ms2) % 2 != 0 || (nelec - ms2) % 2 != 0)
    parse_fail(line_no, "NELEC and MS2 give non-integer per-spin electron counts");
  const long n_up = (nelec + ms2) / 2;
  const long n_down = (nelec - ms2) / 2;
  if (n_up < 0 || n_down < 0 || n_up + n_down > 2 * norb)
    parse_fail(line_no, "electron counts out of range");

  FermionHamiltonian h(static_cast<int>(norb), static_cast<int>(n_up),
                       static_cast<int>(n_down));

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream iss(line);
    double value;
    long i, j, k, l;
    if (!(iss >> value)) {
      // skip blank lines
      std::string rest;
      if (!(std::istringstream(line) >> rest)) continue;
      parse_fail(line_no, "non-numeric value field");
    }
    if (!(iss >> i >> j >> k >> l)) parse_fail(line_no, "expected four indices");
    if (i < 0 || j < 0 || k < 0 || l < 0 || i > norb || j > norb || k > norb || l > norb)
      parse_fail(line_no, "orbital index out of range");

    if (i == 0 && j == 0 && k == 0 && l == 0) {
      h.core_energy = value;
    } else if (k == 0 && l == 0) {
      if (i == 0 || j == 0) parse_fail(line_no, "one-body entry with zero index");
      h.t1(int(i - 1), int(j - 1)) = value;
      h.t1(int(j - 1), int(i - 1)) = value;
    } else if (i == 0 || j == 0 || k == 0 || l == 0) {
      parse_fail(line_no, "mixed zero/nonzero indices");
    } else {
      fill_two_body(h, int(i - 1), int(j - 1), int(k - 1), int(l - 1), value);
    }
  }
  return h;
}

FermionHamiltonian parse_fcidump_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open FCIDUMP file: " + path);
  return parse_fcidump(in);
}

FermionHamiltonian make_hubbard_chain(int sites, double hopping, double interaction,
                                      int n_up, int n_down) {
  if (sites < 2) throw std::invalid_argument("Hubbard chain needs at least 2 sites");
  FermionHamiltonian h(sites, n_up, n_down);
  for (int i = 0; i + 1 < sites; ++i) {
    h.t1(i, i + 1) = -hopping;
    h.t1(i + 1, i) = -hopping;
  }
  for (int i = 0; i < sites; ++i) h.t2(i, i, i, i) = interaction;
  return h;
}

FermionOperator build_number_operator(int n_spatial, bool spin_down) {
  FermionOperator n_op;
  for (int i = 0; i < n_spatial; ++i) {
    const auto q = static_cast<std::uint8_t>(spin_down ? i + n_spatial : i);
    n_op.add_term(1.0, {{q, true}, {q, false}});
  }
  return n_op;
}

FermionOperator build_spin_squared(int n_spatial) {
  const int n = n_spatial;
  FermionOperator s2;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto iu = static_cast<std::uint8_t>(i);
      const auto ju = static_cast<std::uint8_t>(j);
      const auto id = static_cast<std::uint8_t>(i + n);
      const auto jd = static_cast<std::uint8_t>(j + n);
      s2.add_term(1.0, {{iu, false}, {ju, true}, {id, true}, {jd, false}});
    }
  }
  FermionOperator sz = build_number_operator(n, false);
  sz += -1.0 * build_number_operator(n, true);
  s2 += 0.5 * sz;
  s2 += 0.25 * (sz * sz);
  return s2;
}

FermionOperator penalize(const FermionOperator& h_el, const FermionOperator& s2,
                         const SpinPenalty& penalty) {
  if (penalty.strength < 0.0) throw std::invalid_argument("penalty strength must be >= 0");
  if (penalty.strength == 0.0) return h_el;
  FermionOperator shifted = FermionOperator::identity(penalty.s0_squared);
  shifted += -1.0 * s2;
  FermionOperator result = h_el;
  result += penalty.strength * (shifted * shifted);
  result.prune();
  return result;
}

}  // namespace qsd::fermion

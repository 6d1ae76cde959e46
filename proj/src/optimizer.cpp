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

#include "qsd/optimizer.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>

#include "qsd/rng.hpp"

namespace qsd {

namespace {

using cd = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Exact interpolation of f(theta) = c0 + sum_{m=1,2} 2 Re(c_m e^{i m theta})
// through five equidistant samples.
struct TrigFit {
  cd c[3];

  static TrigFit from_samples(const double thetas[5], const double values[5]) {
    TrigFit fit;
    for (int m = 0; m < 3; ++m) {
      cd acc(0, 0);
      for (int j = 0; j < 5; ++j) acc += values[j] * std::exp(cd(0, -m * thetas[j]));
      fit.c[m] = acc / 5.0;
    }
    return fit;
  }

  double eval(double theta) const {
    double v = c[0].real();
    for (int m = 1; m < 3; ++m) v += 2.0 * std::real(c[m] * std::exp(cd(0, m * theta)));
    return v;
  }

  // Global minimizer on [0, 2 pi): coarse grid then golden-section.
  double argmin() const {
    constexpr int kGrid = 1024;
    int best = 0;
    double best_val = eval(0.0);
    for (int i = 1; i < kGrid; ++i) {
      const double v = eval(kTwoPi * i / kGrid);
      if (v < best_val) {
        best_val = v;
        best = i;
      }
    }
    double lo = kTwoPi * (best - 1) / kGrid;
    double hi = kTwoPi * (best + 1) / kGrid;
    constexpr double kGolden = 0.618033988749894848;
    double x1 = hi - kGolden * (hi - lo);
    double x2 = lo + kGolden * (hi - lo);
    double f1 = eval(x1), f2 = eval(x2);
    for (int it = 0; it < 80; ++it) {
      if (f1 < f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - kGolden * (hi - lo);
        f1 = eval(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + kGolden * (hi - lo);
        f2 = eval(x2);
      }
    }
    double theta = 0.5 * (lo + hi);
    theta = std::fmod(theta, kTwoPi);
    if (theta < 0) theta += kTwoPi;
    return theta;
  }
};

}  // namespace

SimulatorExecutor::SimulatorExecutor(AnsatzTemplate tpl, NoiseConfig noise)
    : tpl_(tpl), noise_(noise) {}

std::size_t SimulatorExecutor::parameter_count() const { return qsd::parameter_count(tpl_); }

SampleSet SimulatorExecutor::sample_shots(const ParameterVector& params, std::uint64_t shots,
                                          std::uint64_t seed) const {
  if (noise_.two_qubit_depolarizing_p <= 0.0) {
    StateVector state = prepare_state(tpl_, params);
    return sample(state, shots, noise_, seed);
  }
  // Gate errors are per-execution events: every shot is its own trajectory.
  Rng rng(seed);
  SampleSet out;
  for (std::uint64_t s = 0; s < shots; ++s) {
    StateVector state = prepare_state(tpl_, params, noise_.two_qubit_depolarizing_p, &rng);
    SampleSet one = sample(state, 1, noise_, rng());
    for (const auto& [z, count] : one.counts) out.add(z, count);
  }
  return out;
}

std::map<Configuration, double> SimulatorExecutor::distribution(
    const ParameterVector& params) const {
  return exact_distribution(prepare_state(tpl_, params));
}

CostEvaluation evaluate_cost(const CircuitExecutor& executor, const ParameterVector& params,
                             const PauliSum& h, const SectorSpec& sector, std::uint64_t shots,
                             std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  const SampleSet samples = executor.sample_shots(params, shots, seed);
  const auto [s_n, s_x] = post_select(samples, sector);

  CostEvaluation eval;
  eval.shots_total = samples.shots;
  eval.shots_retained = s_n.shots;
  eval.retained_fraction = double(s_n.shots) / double(samples.shots);
  if (s_n.shots == 0)
    throw ZeroRetainedError("post-selection discarded all " + std::to_string(shots) +
                            " samples");

  double mean = 0.0, m2 = 0.0;
  for (const auto& [z, count] : s_n.counts) {
    const double v = h.diagonal_expectation(z);
    mean += double(count) * v;
    m2 += double(count) * v * v;
  }
  mean /= double(s_n.shots);
  m2 /= double(s_n.shots);
  eval.e_z = mean;
  const double var = std::max(0.0, m2 - mean * mean);
  eval.std_error = std::sqrt(var / double(s_n.shots));
  return eval;
}

CostEvaluation evaluate_cost_exact(const CircuitExecutor& executor,
                                   const ParameterVector& params, const PauliSum& h,
                                   const SectorSpec& sector) {
  const auto dist = executor.distribution(params);
  double retained = 0.0, e = 0.0;
  for (const auto& [z, p] : dist) {
    if (!sector.contains(z)) continue;
    retained += p;
    e += p * h.diagonal_expectation(z);
  }
  if (retained <= 0.0) throw ZeroRetainedError("exact distribution has no in-sector mass");
  CostEvaluation eval;
  eval.e_z = e / retained;
  eval.retained_fraction = retained;
  return eval;
}

void OptimizationTrace::write_csv(std::ostream& out) const {
  out << "iteration,parameter_index,e_z,std_error,retained_fraction\n";
  out.precision(17);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Entry& e = entries[i];
    out << i << "," << e.parameter_index << "," << e.cost.e_z << "," << e.cost.std_error
        << "," << e.cost.retained_fraction << "\n";
  }
}

OptimizationTrace nft_minimize(const CircuitExecutor& executor, const PauliSum& h,
                               const SectorSpec& sector, const ParameterVector& initial_params,
                               int sweeps, std::uint64_t shots_per_eval, std::uint64_t seed,
                               const NftOptions& options) {
  if (sweeps < 1) throw std::invalid_argument("sweeps must be >= 1");
  if (initial_params.size() != executor.parameter_count())
    throw std::invalid_argument("parameter vector length does not match executor");

  OptimizationTrace trace;
  ParameterVector params = initial_params;
  const std::size_t n_params = params.size();
  std::uint64_t eval_seed_counter = 0;

  auto evaluate = [&](const ParameterVector& p) -> CostEvaluation {
    if (options.exact) {
      ++trace.evaluations;
      return evaluate_cost_exact(executor, p, h, sector);
    }
    for (int attempt = 0;; ++attempt) {
      const std::uint64_t s = derive_seed(seed, seed_stream::kOptimizer, eval_seed_counter++);
      try {
        CostEvaluation eval = evaluate_cost(executor, p, h, sector, shots_per_eval, s);
        ++trace.evaluations;
        return eval;
      } catch (const ZeroRetainedError&) {
        if (attempt >= 3)
          throw ZeroRetainedError(
              "post-selection discarded all samples in 4 consecutive attempts "
              "(update " + std::to_string(trace.updates) + ")");
      }
    }
  };

  const std::uint64_t total_updates =
      options.max_updates > 0 ? options.max_updates
                              : std::uint64_t(sweeps) * n_params;

  for (std::uint64_t update = 0; update < total_updates; ++update) {
    const int k = static_cast<int>(update % n_params);
    double thetas[5];
    double values[5];
    const double theta0 = params[k];
    for (int j = 0; j < 5; ++j) {
      thetas[j] = theta0 + kTwoPi * j / 5.0;
      params[k] = thetas[j];
      values[j] = evaluate(params).e_z;
    }
    const TrigFit fit = TrigFit::from_samples(thetas, values);
    params[k] = fit.argmin();
    ++trace.updates;

    OptimizationTrace::Entry entry;
    entry.parameter_index = k;
    entry.cost = evaluate(params);
    entry.parameters = params;
    trace.entries.push_back(std::move(entry));
  }

  trace.final_parameters = params;
  trace.final_cost = trace.entries.empty() ? evaluate(params).e_z : trace.entries.back().cost.e_z;
  return trace;
}

}  // namespace qsd

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

#include "qsd/workflow.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qsd/rng.hpp"

namespace qsd {

namespace {

using ordered_json = nlohmann::ordered_json;

template <typename Fn>
auto stage(const std::string& name, Fn&& fn) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

fermion::FermionHamiltonian load_hamiltonian(const PipelineConfig& cfg, std::string& label) {
  if (!cfg.fcidump_path.empty()) {
    label = "fcidump:" + cfg.fcidump_path;
    return fermion::parse_fcidump_file(cfg.fcidump_path);
  }
  if (cfg.fixture == "hubbard") {
    std::ostringstream oss;
    oss << "hubbard(sites=" << cfg.sites << ",t=" << cfg.hopping << ",U=" << cfg.interaction
        << ")";
    label = oss.str();
    const int n_up = cfg.n_up >= 0 ? cfg.n_up : (cfg.sites + 1) / 2;
    const int n_down = cfg.n_down >= 0 ? cfg.n_down : cfg.sites / 2;
    return fermion::make_hubbard_chain(cfg.sites, cfg.hopping, cfg.interaction, n_up, n_down);
  }
  throw std::invalid_argument("unknown fixture '" + cfg.fixture + "'");
}

}  // namespace

double gibbs_delta(double gse_ls, double gse_is, double corr_ls, double corr_is) {
  return (gse_ls + corr_ls) - (gse_is + corr_is);
}

std::string PipelineReport::to_json(bool include_timing) const {
  ordered_json j;
  j["hamiltonian"] = hamiltonian_label;
  j["n_qubits"] = n_qubits;
  j["sector"] = {{"n_spatial", sector.n_spatial},
                 {"n_up", sector.n_up},
                 {"n_down", sector.n_down}};
  j["penalty"] = {{"m", penalty_m}, {"s0_squared", s0_squared}};
  j["seeds"] = {{"master", master_seed}};

  j["optimization"] = {{"updates", updates},
                       {"evaluations", evaluations},
                       {"final_cost", final_opt_cost},
                       {"parameters", optimized_parameters},
                       {"trace_file", trace_file}};

  j["retention"] = {{"samples_total", samples_total},
                    {"samples_retained", samples_retained},
                    {"retained_fraction", retained_fraction}};
  j["pre_sd"] = {{"energy", pre_sd_energy}, {"std_error", pre_sd_std_error}};

  j["recovery"] = {{"recovered_count", recovered_count},
                   {"unresolved_count", unresolved_count},
                   {"winning_repetition", recovery_winner}};

  j["subspace"] = {{"dimension", sd_dimension},
                   {"energy", sd_energy},
                   {"energy_variance", energy_variance}};
  if (fci_energy) {
    j["fci"] = {{"energy", *fci_energy}, {"deviation", *deviation}};
  } else {
    j["fci"] = nullptr;
  }

  j["gate_counts"] = {{"rxx", optimized_counts.rxx},
                      {"r", optimized_counts.r},
                      {"rz", optimized_counts.rz},
                      {"naive_r", naive_r_count}};
  if (include_timing) j["timing"] = {{"elapsed_seconds", elapsed_seconds}};
  return j.dump(2);
}

PipelineReport run_pipeline(const PipelineConfig& cfg) {
  const auto t_start = std::chrono::steady_clock::now();
  PipelineReport report;
  report.master_seed = cfg.master_seed;

  // Hamiltonian assembly and encoding.
  const fermion::FermionHamiltonian ham =
      stage("load-hamiltonian", [&] { return load_hamiltonian(cfg, report.hamiltonian_label); });

  const SectorSpec sector{ham.n_spatial, cfg.n_up >= 0 ? cfg.n_up : ham.n_up,
                          cfg.n_down >= 0 ? cfg.n_down : ham.n_down};
  report.sector = sector;
  report.n_qubits = sector.n_qubits();

  const double sz = 0.5 * (sector.n_up - sector.n_down);
  const double s0sq = cfg.s0_squared >= 0.0 ? cfg.s0_squared : std::abs(sz) * (std::abs(sz) + 1.0);
  report.penalty_m = cfg.penalty_m;
  report.s0_squared = s0sq;

  const PauliSum h = stage("encode-hamiltonian", [&] {
    const fermion::FermionOperator h_el = ham.to_operator();
    const fermion::FermionOperator s2 = fermion::build_spin_squared(ham.n_spatial);
    const fermion::FermionOperator penalized =
        fermion::penalize(h_el, s2, {cfg.penalty_m, s0sq});
    return jordan_wigner(penalized, sector.n_qubits());
  });

  // Ansatz and optimizer.
  const AnsatzTemplate tpl{ham.n_spatial, sector.n_up, sector.n_down, cfg.layers};
  const SimulatorExecutor executor(tpl, cfg.noise);
  const ParameterVector initial(parameter_count(tpl), 0.0);

  const OptimizationTrace trace = stage("optimize", [&] {
    NftOptions options;
    options.max_updates = cfg.opt_updates;
    const int sweeps = std::max<int>(
        1, static_cast<int>((cfg.opt_updates + initial.size() - 1) / initial.size()));
    return nft_minimize(executor, h, sector, initial, sweeps, cfg.opt_shots,
                        derive_seed(cfg.master_seed, seed_stream::kOptimizer), options);
  });
  report.optimized_parameters = trace.final_parameters;
  report.updates = trace.updates;
  report.evaluations = trace.evaluations;
  report.final_opt_cost = trace.final_cost;

  // Final sampling and post-selection.
  const SampleSet samples = stage("final-sampling", [&] {
    return executor.sample_shots(trace.final_parameters, cfg.final_shots,
                                 derive_seed(cfg.master_seed, seed_stream::kFinalSampling));
  });
  const auto [s_n, s_x] = post_select(samples, sector);
  report.samples_total = samples.shots;
  report.samples_retained = s_n.shots;
  report.retained_fraction = double(s_n.shots) / double(samples.shots);
  if (s_n.shots == 0) throw StageError("post-select", "no samples survived post-selection");

  {
    double mean = 0.0, m2 = 0.0;
    for (const auto& [z, count] : s_n.counts) {
      const double v = h.diagonal_expectation(z);
      mean += double(count) * v;
      m2 += double(count) * v * v;
    }
    mean /= double(s_n.shots);
    m2 /= double(s_n.shots);
    report.pre_sd_energy = mean;
    report.pre_sd_std_error = std::sqrt(std::max(0.0, m2 - mean * mean) / double(s_n.shots));
  }

  // Configuration recovery, keeping the lowest-energy repetition.
  const BestRecovery best = stage("recovery", [&] {
    return recover_best(s_n, s_x, h, sector, cfg.recovery,
                        derive_seed(cfg.master_seed, seed_stream::kRecovery), cfg.threads);
  });
  report.recovered_count = best.result.recovered.shots;
  report.unresolved_count = best.result.unresolved;
  report.recovery_winner = best.winner;

  // Subspace diagonalization on the recovered set.
  const SampleSet final_set = best.result.combined();
  std::vector<Configuration> configs;
  configs.reserve(final_set.counts.size());
  for (const auto& [z, count] : final_set.counts) configs.push_back(z);
  const SubspaceBasis basis = SubspaceBasis::from_configurations(std::move(configs));
  const SubspaceResult sd = stage("subspace-diagonalization", [&] {
    return ground_state(project(h, basis));
  });
  report.sd_dimension = sd.dimension;
  report.sd_energy = sd.energy;
  report.energy_variance = stage("energy-variance", [&] {
    return energy_variance(h, basis, sd.coefficients);
  });

  if (cfg.compute_fci && sector.dimension() <= 1000000ULL) {
    const SubspaceResult fci = stage("fci-oracle", [&] { return fci_ground_state(h, sector); });
    report.fci_energy = fci.energy;
    report.deviation = sd.energy - fci.energy;
  }

  // Native-gate cost of the optimized circuit.
  stage("transpile-report", [&] {
    const auto circuit = build_circuit(tpl, trace.final_parameters);
    const NativeCircuit naive = decompose_to_native(tpl.n_qubits(), circuit);
    report.naive_r_count = gate_counts(naive).r;
    report.optimized_counts = gate_counts(optimize_native(naive));
    return 0;
  });

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();

  if (!cfg.output_dir.empty()) {
    stage("write-artifacts", [&] {
      namespace fs = std::filesystem;
      fs::create_directories(cfg.output_dir);
      const fs::path dir(cfg.output_dir);
      report.trace_file = (dir / "trace.csv").string();
      {
        std::ofstream out(dir / "trace.csv");
        trace.write_csv(out);
      }
      {
        std::ofstream out(dir / "samples.txt");
        for (const auto& [z, count] : samples.counts)
          out << to_bit_string(z, report.n_qubits) << " " << count << "\n";
      }
      {
        std::ofstream out(dir / "recovered.txt");
        write_recovered_text(out, best.result, report.n_qubits);
      }
      {
        ordered_json counts = {{"rxx", report.optimized_counts.rxx},
                               {"r", report.optimized_counts.r},
                               {"rz", report.optimized_counts.rz}};
        std::ofstream out(dir / "counts.json");
        out << counts.dump(2) << "\n";
      }
      {
        std::ofstream out(dir / "report.json");
        out << report.to_json() << "\n";
      }
      return 0;
    });
  }
  return report;
}

}  // namespace qsd

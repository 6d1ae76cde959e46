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

// Command-line entry point: `qsd run` drives the full sampling pipeline,
// `transpile` rewrites circuits over the native gate set, `exact` prints the
// sector ground energy, `recover` reruns configuration recovery on a sample
// dump and `report` renders a report.json into a human-readable summary.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qsd/ansatz.hpp"
#include "qsd/rng.hpp"
#include "qsd/transpiler.hpp"
#include "qsd/workflow.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitStage = 2;

struct HamiltonianArgs {
  std::string fcidump;
  std::string fixture = "hubbard";
  int sites = 5;
  double hopping = 1.0;
  double interaction = 4.0;
  int n_up = -1;
  int n_down = -1;

  void attach(CLI::App* app) {
    app->add_option("--fcidump", fcidump, "FCIDUMP integral file");
    app->add_option("--fixture", fixture, "builtin Hamiltonian (hubbard)");
    app->add_option("--sites", sites, "Hubbard chain length");
    app->add_option("--hopping", hopping, "Hubbard hopping t (Ha)");
    app->add_option("--interaction", interaction, "Hubbard on-site U (Ha)");
    app->add_option("--n-up", n_up, "spin-up electron count");
    app->add_option("--n-down", n_down, "spin-down electron count");
  }

  qsd::fermion::FermionHamiltonian load() const {
    if (!fcidump.empty()) return qsd::fermion::parse_fcidump_file(fcidump);
    if (fixture != "hubbard") throw std::runtime_error("unknown fixture '" + fixture + "'");
    const int nu = n_up >= 0 ? n_up : (sites + 1) / 2;
    const int nd = n_down >= 0 ? n_down : sites / 2;
    return qsd::fermion::make_hubbard_chain(sites, hopping, interaction, nu, nd);
  }
};

qsd::PauliSum penalized_qubit_hamiltonian(const qsd::fermion::FermionHamiltonian& ham,
                                          double penalty_m, double s0_squared, int n_up,
                                          int n_down) {
  const auto h_el = ham.to_operator();
  const auto s2 = qsd::fermion::build_spin_squared(ham.n_spatial);
  const double sz = 0.5 * (n_up - n_down);
  const double s0 = s0_squared >= 0.0 ? s0_squared : std::abs(sz) * (std::abs(sz) + 1.0);
  const auto penalized = qsd::fermion::penalize(h_el, s2, {penalty_m, s0});
  return qsd::jordan_wigner(penalized, 2 * ham.n_spatial);
}

int cmd_run(const qsd::PipelineConfig& cfg) {
  const qsd::PipelineReport report = qsd::run_pipeline(cfg);
  std::cout << report.to_json() << std::endl;
  return 0;
}

int cmd_transpile(const std::string& input, const std::string& output,
                  const std::string& counts_path, bool no_prune) {
  std::ifstream in(input);
  if (!in) throw std::runtime_error("cannot open circuit file: " + input);
  const auto [n_qubits, gates] = qsd::parse_circuit_text(in);
  const qsd::NativeCircuit naive = qsd::decompose_to_native(n_qubits, gates);
  qsd::OptimizeOptions options;
  options.prune = !no_prune;
  const qsd::NativeCircuit optimized = qsd::optimize_native(naive, options);

  if (output.empty() || output == "-") {
    qsd::write_circuit_text(std::cout, optimized.n_qubits, optimized.gates);
  } else {
    std::ofstream out(output);
    qsd::write_circuit_text(out, optimized.n_qubits, optimized.gates);
  }
  const qsd::GateCounts counts = qsd::gate_counts(optimized);
  nlohmann::ordered_json j = {{"rxx", counts.rxx}, {"r", counts.r}, {"rz", counts.rz}};
  if (counts_path.empty()) {
    std::cerr << j.dump() << std::endl;
  } else {
    std::ofstream out(counts_path);
    out << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_exact(const HamiltonianArgs& args, double penalty_m, double s0_squared) {
  const auto ham = args.load();
  const int n_up = args.n_up >= 0 ? args.n_up : ham.n_up;
  const int n_down = args.n_down >= 0 ? args.n_down : ham.n_down;
  const auto h = penalized_qubit_hamiltonian(ham, penalty_m, s0_squared, n_up, n_down);
  const qsd::SectorSpec sector{ham.n_spatial, n_up, n_down};
  const auto fci = qsd::fci_ground_state(h, sector);
  nlohmann::ordered_json j = {{"sector", {{"n_spatial", sector.n_spatial},
                                          {"n_up", sector.n_up},
                                          {"n_down", sector.n_down}}},
                              {"dimension", fci.dimension},
                              {"energy", fci.energy}};
  std::cout << j.dump(2) << std::endl;
  return 0;
}

int cmd_recover(const HamiltonianArgs& args, const std::string& samples_path,
                const std::string& output, double penalty_m, double s0_squared,
                const qsd::RecoveryConfig& rcfg, std::uint64_t seed, int threads) {
  const auto ham = args.load();
  const int n_up = args.n_up >= 0 ? args.n_up : ham.n_up;
  const int n_down = args.n_down >= 0 ? args.n_down : ham.n_down;
  const auto h = penalized_qubit_hamiltonian(ham, penalty_m, s0_squared, n_up, n_down);
  const qsd::SectorSpec sector{ham.n_spatial, n_up, n_down};

  std::ifstream in(samples_path);
  if (!in) throw std::runtime_error("cannot open samples file: " + samples_path);
  qsd::SampleSet samples;
  std::string bits;
  std::uint64_t count;
  while (in >> bits >> count) samples.add(qsd::configuration_from_string(bits), count);
  if (samples.shots == 0) throw std::runtime_error("samples file is empty");

  const auto [s_n, s_x] = qsd::post_select(samples, sector);
  if (s_n.shots == 0) throw std::runtime_error("no in-sector samples to recover against");
  const qsd::BestRecovery best =
      qsd::recover_best(s_n, s_x, h, sector, rcfg, seed, threads);

  if (output.empty() || output == "-") {
    qsd::write_recovered_text(std::cout, best.result, sector.n_qubits());
  } else {
    std::ofstream out(output);
    qsd::write_recovered_text(out, best.result, sector.n_qubits());
  }
  nlohmann::ordered_json j = {{"repetitions", rcfg.repetitions},
                              {"winning_repetition", best.winner},
                              {"energy", best.energy},
                              {"recovered_count", best.result.recovered.shots},
                              {"unresolved_count", best.result.unresolved}};
  std::cerr << j.dump(2) << std::endl;
  return 0;
}

int cmd_report(const std::string& input, const std::string& csv_path) {
  std::ifstream in(input);
  if (!in) throw std::runtime_error("cannot open report file: " + input);
  nlohmann::json j;
  in >> j;

  auto field = [&](const char* a, const char* b) { return j.at(a).at(b); };
  std::cout << "Hamiltonian:        " << j.at("hamiltonian").get<std::string>() << "\n"
            << "Qubits:             " << j.at("n_qubits") << "\n"
            << "Retention:          " << field("retention", "samples_retained") << " / "
            << field("retention", "samples_total") << " ("
            << field("retention", "retained_fraction") << ")\n"
            << "Pre-SD energy:      " << field("pre_sd", "energy") << " +/- "
            << field("pre_sd", "std_error") << " Ha\n"
            << "SD energy:          " << field("subspace", "energy") << " Ha (dimension "
            << field("subspace", "dimension") << ")\n"
            << "Energy variance:    " << field("subspace", "energy_variance") << " Ha\n";
  if (!j.at("fci").is_null()) {
    const double dev = field("fci", "deviation").get<double>();
    std::cout << "FCI energy:         " << field("fci", "energy") << " Ha\n"
              << "Deviation:          " << dev * 1e3 << " mHa"
              << (std::abs(dev) <= 1.5e-3 ? " (within chemical accuracy)" : "") << "\n";
  }
  std::cout << "Gate counts:        rxx=" << field("gate_counts", "rxx")
            << " r=" << field("gate_counts", "r") << " rz=" << field("gate_counts", "rz")
            << "\n";

  if (!csv_path.empty()) {
    // Plot-ready convergence data copied from the trace next to the report.
    const auto trace = j.at("optimization").at("trace_file").get<std::string>();
    std::ifstream tin(trace);
    if (!tin) throw std::runtime_error("cannot open trace file: " + trace);
    std::ofstream out(csv_path);
    out << tin.rdbuf();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sampling-based ground-state energy pipeline"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "execute the full pipeline");
  qsd::PipelineConfig cfg;
  HamiltonianArgs run_ham;
  run_ham.attach(run);
  run->set_config("--config", "", "key = value configuration file with [sections]");
  run->add_option("--seed", cfg.master_seed, "master seed");
  run->add_option("--shots", cfg.final_shots, "final sampling shots");
  run->add_option("--iterations", cfg.opt_updates, "optimizer parameter updates");
  run->add_option("--opt-shots", cfg.opt_shots, "shots per cost evaluation");
  run->add_option("--layers", cfg.layers, "ansatz layers");
  run->add_option("--noise-readout", cfg.noise.readout_flip_p, "readout flip probability");
  run->add_option("--noise-depol", cfg.noise.two_qubit_depolarizing_p,
                  "two-qubit depolarizing probability");
  run->add_option("--output", cfg.output_dir, "artifact output directory");
  run->add_option("--penalty-m", cfg.penalty_m, "spin penalty strength M");
  run->add_option("--s0-squared", cfg.s0_squared, "target total spin squared");
  run->add_option("--sccr-reps", cfg.recovery.repetitions, "recovery repetitions");
  run->add_option("--sccr-batches", cfg.recovery.batches, "recovery batches K");
  run->add_option("--sccr-h", cfg.recovery.h, "flip-weight breakpoint");
  run->add_option("--sccr-delta", cfg.recovery.delta, "flip-weight value at breakpoint");
  run->add_option("--threads", cfg.threads, "worker threads");
  run->add_flag("--no-fci", [&cfg](std::int64_t) { cfg.compute_fci = false; },
                "skip the exact-diagonalization comparison");

  // transpile
  auto* transpile = app.add_subcommand("transpile", "rewrite a circuit over the native set");
  std::string tr_input, tr_output, tr_counts;
  bool tr_no_prune = false;
  transpile->add_option("--input", tr_input, "circuit text file")->required();
  transpile->add_option("--output", tr_output, "native circuit output ('-' for stdout)");
  transpile->add_option("--counts", tr_counts, "gate-count JSON output");
  transpile->add_flag("--no-prune", tr_no_prune, "keep small-angle R gates");

  // exact
  auto* exact = app.add_subcommand("exact", "sector ground energy by exact diagonalization");
  HamiltonianArgs exact_ham;
  exact_ham.attach(exact);
  double exact_m = 0.01, exact_s0 = -1.0;
  exact->add_option("--penalty-m", exact_m, "spin penalty strength M");
  exact->add_option("--s0-squared", exact_s0, "target total spin squared");

  // recover
  auto* recover = app.add_subcommand("recover", "configuration recovery on a sample dump");
  HamiltonianArgs rec_ham;
  rec_ham.attach(recover);
  std::string rec_samples, rec_output;
  double rec_m = 0.01, rec_s0 = -1.0;
  qsd::RecoveryConfig rec_cfg;
  std::uint64_t rec_seed = 1;
  int rec_threads = 2;
  recover->add_option("--samples", rec_samples, "samples.txt dump")->required();
  recover->add_option("--output", rec_output, "recovered set output ('-' for stdout)");
  recover->add_option("--penalty-m", rec_m, "spin penalty strength M");
  recover->add_option("--s0-squared", rec_s0, "target total spin squared");
  recover->add_option("--sccr-reps", rec_cfg.repetitions, "recovery repetitions");
  recover->add_option("--sccr-batches", rec_cfg.batches, "recovery batches K");
  recover->add_option("--seed", rec_seed, "recovery master seed");
  recover->add_option("--threads", rec_threads, "worker threads");

  // report
  auto* report = app.add_subcommand("report", "render report.json as a summary");
  std::string rep_input, rep_csv;
  report->add_option("--input", rep_input, "report.json path")->required();
  report->add_option("--csv", rep_csv, "write convergence CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run) {
      cfg.fcidump_path = run_ham.fcidump;
      cfg.fixture = run_ham.fixture;
      cfg.sites = run_ham.sites;
      cfg.hopping = run_ham.hopping;
      cfg.interaction = run_ham.interaction;
      cfg.n_up = run_ham.n_up;
      cfg.n_down = run_ham.n_down;
      return cmd_run(cfg);
    }
    if (*transpile) return cmd_transpile(tr_input, tr_output, tr_counts, tr_no_prune);
    if (*exact) return cmd_exact(exact_ham, exact_m, exact_s0);
    if (*recover)
      return cmd_recover(rec_ham, rec_samples, rec_output, rec_m, rec_s0, rec_cfg, rec_seed,
                         rec_threads);
    if (*report) return cmd_report(rep_input, rep_csv);
  } catch (const qsd::StageError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitStage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitStage;
  }
  return 0;
}

// Copyright 2026 The jchgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// jchgate: batch front end.
//
// Exit status: 0 success, 1 physics/precondition failure, 2 configuration
// error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "jchgate/config.hpp"
#include "jchgate/oracle.hpp"

namespace fs = std::filesystem;
using namespace jchgate;

namespace {

constexpr int kExitPhysics = 1;
constexpr int kExitConfig = 2;

std::ofstream open_out(const fs::path& p) {
  std::ofstream out(p);
  if (!out) throw ConfigError("cannot write " + p.string());
  out << std::setprecision(17);
  return out;
}

int cmd_simulate(const std::string& config_path, const std::string& out_dir) {
  RunConfig cfg = parse_config_file(config_path);
  if (!out_dir.empty()) cfg.output_dir = out_dir;

  const GateRun run = simulate_gate(cfg.gate_spec());
  const SimulationSummary summary = summarize(cfg, run);

  const fs::path dir(cfg.output_dir);
  fs::create_directories(dir);
  const std::string prefix = cfg.output_prefix + "_";
  {
    auto out = open_out(dir / (prefix + "logical.csv"));
    write_table(out, logical_table(run.logical));
  }
  {
    auto out = open_out(dir / (prefix + "summary.json"));
    write_summary(out, summary);
  }
  {
    auto out = open_out(dir / (prefix + "timeline.csv"));
    write_timeline(out, timeline(run.segments));
  }
  {
    auto out = open_out(dir / (prefix + "basis.txt"));
    run.basis->dump(out);
  }
  for (int q = 0; q < 4; ++q) {
    const std::string name =
        prefix + "trajectory_q" + std::to_string(q >> 1) + std::to_string(q & 1) + ".csv";
    auto out = open_out(dir / name);
    const auto initial = StateVector<double>::basis_vector(
        run.basis, encode_logical(q >> 1, q & 1));
    write_trajectory_csv(out, run.trajectories[q], &initial);
  }

  std::printf("n1=%d n2=%d mode=%s fidelity=%.10f leakage=%.3e residual=%.6f\n",
              summary.n1, summary.n2, summary.mode.c_str(), summary.fidelity,
              summary.leakage, summary.residual);
  return 0;
}

int cmd_oracle() {
  for (int qx = 0; qx < 2; ++qx) {
    for (int qy = 0; qy < 2; ++qy) {
      oracle::print_trace(std::cout, oracle::trace_cocsign(qx, qy));
      std::cout << '\n';
    }
  }
  const auto m = oracle::oracle_logical_operator();
  // Common phase is the one shared by |00>, |10>, |11>; |01> differs.
  const int common = oracle::trace_cocsign(0, 0).phase_total();
  std::cout << "common phase addition " << oracle::phase_text(common)
            << "; |01> relative sign "
            << (std::abs(m(1, 1) + m(0, 0)) < 1e-12 ? "-1" : "+1") << '\n';
  return 0;
}

int cmd_search(int bound, std::size_t top, const std::string& out_path) {
  if (bound < 1) throw ConfigError("search bound must be >= 1");
  const auto ranked = find_n1n2(bound, top);
  Table t;
  t.header = {"rank", "n1", "n2", "residual_tau1", "route"};
  const auto cf = continued_fraction_candidates(bound);
  auto is_cf = [&](const TimingCandidate& c) {
    return std::find(cf.begin(), cf.end(), c) != cf.end();
  };
  std::printf("%4s %6s %6s %14s  %s\n", "rank", "n1", "n2", "residual/tau1",
              "continued-fraction");
  for (std::size_t k = 0; k < ranked.size(); ++k) {
    const auto& c = ranked[k];
    std::printf("%4zu %6d %6d %14.8f  %s\n", k + 1, c.n1, c.n2, c.residual,
                is_cf(c) ? "yes" : "");
    t.rows.push_back({std::to_string(k + 1), std::to_string(c.n1),
                      std::to_string(c.n2), format_double(c.residual),
                      is_cf(c) ? "cf" : "scan"});
  }
  std::printf("continued-fraction candidates (sqrt(8)*n2 ~ 4*n1+1):");
  for (const auto& c : cf) std::printf(" (%d,%d)", c.n1, c.n2);
  std::printf("\n");
  if (!out_path.empty()) {
    auto out = open_out(out_path);
    write_table(out, t);
  }
  return 0;
}

int cmd_sweep(const std::string& config_path, int workers,
              const std::string& out_dir) {
  RunConfig cfg = parse_config_file(config_path);
  if (!cfg.sweep) throw ConfigError("sweep: config has no 'sweep' section");
  if (!out_dir.empty()) cfg.output_dir = out_dir;
  if (workers < 1) throw ConfigError("workers must be >= 1");

  const auto rows = sweep(*cfg.sweep, workers);
  const fs::path dir(cfg.output_dir);
  fs::create_directories(dir);
  {
    auto out = open_out(dir / (cfg.output_prefix + "_sweep.csv"));
    write_table(out, sweep_table(rows));
  }
  nlohmann::json j;
  j["format_version"] = kFormatVersion;
  j["rows"] = rows.size();
  if (!rows.empty()) {
    const auto best = std::max_element(
        rows.begin(), rows.end(),
        [](const SweepRow& a, const SweepRow& b) { return a.fidelity < b.fidelity; });
    j["best_index"] = best->index;
    j["best_fidelity"] = best->fidelity;
  }
  {
    auto out = open_out(dir / (cfg.output_prefix + "_sweep_summary.json"));
    out << j.dump(2) << '\n';
  }
  std::printf("sweep: %zu rows written to %s\n", rows.size(),
              (dir / (cfg.output_prefix + "_sweep.csv")).string().c_str());
  return 0;
}

int cmd_feasibility(double omega, double delta_omega, double tau1,
                    double delta_tau, double upper_ratio,
                    const std::string& out_path) {
  if (!(omega > 0) || !(delta_omega > 0) || !(tau1 > 0) || !(delta_tau > 0) ||
      !(upper_ratio > 0)) {
    throw ConfigError("feasibility: all inputs must be positive");
  }
  const auto r = feasibility(omega, delta_omega, tau1, delta_tau, upper_ratio);
  std::printf("delta_tau_min=%.6g s window=[%.6g, %.6g] s delta_tau=%.6g s "
              "window_ok=%s error_floor=%.6g rwa_ratio=%.6g rwa_ok=%s\n",
              r.delta_tau_min, r.delta_tau_min, r.upper_bound, delta_tau,
              r.window_ok ? "true" : "false", r.single_shot_error_floor,
              r.rwa_ratio, r.rwa_ok ? "true" : "false");
  if (!out_path.empty()) {
    nlohmann::json j;
    j["format_version"] = kFormatVersion;
    j["inputs"] = {{"omega", omega},
                   {"delta_omega", delta_omega},
                   {"tau1", tau1},
                   {"delta_tau", delta_tau},
                   {"upper_ratio", upper_ratio}};
    j["delta_tau_min"] = r.delta_tau_min;
    j["upper_bound"] = r.upper_bound;
    j["window_ok"] = r.window_ok;
    j["single_shot_error_floor"] = r.single_shot_error_floor;
    j["rwa_ratio"] = r.rwa_ratio;
    j["rwa_ok"] = r.rwa_ok;
    auto out = open_out(out_path);
    out << j.dump(2) << '\n';
  }
  return 0;
}

int cmd_basis(int cavities, int n_max, int excitation) {
  if (cavities < 1 || n_max < 0 || excitation < 0) {
    throw ConfigError("basis: invalid dimensions");
  }
  enumerate_sector(cavities, n_max, excitation)->dump(std::cout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulate the coCSign gate on asynchronous atomic excitations"};
  app.require_subcommand(1);

  std::string config_path, out_dir, out_path;
  int bound = 50, workers = 1;
  std::size_t top = 10;
  double omega = 1e10, delta_omega = 1e9, tau1 = 1e-6, delta_tau = 1e-9,
         upper_ratio = 100;
  int cavities = kGateCavities, n_max = kDefaultPhotonCutoff, excitation = 2;

  auto* sim = app.add_subcommand("simulate", "Run the gate on all four logical inputs");
  sim->add_option("-c,--config", config_path, "JSON run configuration")->required();
  sim->add_option("-o,--out-dir", out_dir, "Override output.dir");

  auto* orc = app.add_subcommand("oracle", "Print the symbolic phase table");

  auto* srch = app.add_subcommand("search", "Rank (n1, n2) timing pairs");
  srch->add_option("bound", bound, "Largest n1, n2 scanned")->required();
  srch->add_option("--top", top, "Rows to print (0 = all)");
  srch->add_option("--out", out_path, "Write the ranking as CSV");

  auto* swp = app.add_subcommand("sweep", "Parameter sweep from a config 'sweep' section");
  swp->add_option("-c,--config", config_path, "JSON run configuration")->required();
  swp->add_option("-j,--workers", workers, "Parallel workers");
  swp->add_option("-o,--out-dir", out_dir, "Override output.dir");

  auto* feas = app.add_subcommand("feasibility", "Jump-window arithmetic");
  feas->add_option("--omega", omega, "Photon frequency [1/s]");
  feas->add_option("--delta-omega", delta_omega, "Frequency uncertainty bound [1/s]");
  feas->add_option("--tau1", tau1, "Single-excitation Rabi period [s]");
  feas->add_option("--delta-tau", delta_tau, "Jump window [s]");
  feas->add_option("--upper-ratio", upper_ratio, "Require delta_tau <= tau1/ratio");
  feas->add_option("--out", out_path, "Write a JSON report");

  auto* bas = app.add_subcommand("basis", "Dump a sector basis");
  bas->add_option("--cavities", cavities);
  bas->add_option("--n-max", n_max);
  bas->add_option("--excitation", excitation);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*sim) return cmd_simulate(config_path, out_dir);
    if (*orc) return cmd_oracle();
    if (*srch) return cmd_search(bound, top, out_path);
    if (*swp) return cmd_sweep(config_path, workers, out_dir);
    if (*feas) {
      return cmd_feasibility(omega, delta_omega, tau1, delta_tau, upper_ratio,
                             out_path);
    }
    if (*bas) return cmd_basis(cavities, n_max, excitation);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const PreconditionError& e) {
    std::fprintf(stderr, "precondition failed: %s\n", e.what());
    return kExitPhysics;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitPhysics;
  }
  return 0;
}

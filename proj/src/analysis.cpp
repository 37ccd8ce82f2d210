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

#include "jchgate/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace jchgate {

double FidelityReport::phase_in_quarters(int k) const {
  const double q = phase_profile.at(k) / (std::numbers::pi / 2);
  const double r = std::round(q);
  return std::abs(q - r) <= kQuarterTol ? r : q;
}

std::optional<int> FidelityReport::phase_quarter(int k) const {
  const double q = phase_profile.at(k) / (std::numbers::pi / 2);
  const double r = std::round(q);
  if (std::abs(q - r) > kQuarterTol) return std::nullopt;
  return static_cast<int>(r);
}

std::string quarter_text(double radians) {
  const double q = radians / (std::numbers::pi / 2);
  const double r = std::round(q);
  if (std::abs(q - r) <= FidelityReport::kQuarterTol) {
    return std::to_string(static_cast<int>(r));
  }
  return format_double(q);
}

GateRun simulate_gate(const GateRunSpec& spec) {
  GateRun run;
  run.basis = enumerate_sector(kGateCavities, spec.n_max, 2);
  const GateTimings timings(spec.n1, spec.n2, spec.g, spec.nu);
  run.residual = timings.residual_in_tau1();
  run.segments = build_cocsign_schedule(run.basis, timings, spec.schedule);
  if (spec.jitter.sigma > 0) {
    run.segments =
        apply_jitter(std::move(run.segments), spec.jitter, timings.tau1());
  }

  int in = 0;
  run.logical = extract_logical<double>(
      run.basis, [&](const StateVector<double>& psi) {
        auto [out, traj] = evolve(psi, run.segments);
        run.trajectories[in++] = std::move(traj);
        return out;
      });
  run.report = gate_fidelity(run.logical, target_cocsign());

  auto& c = run.conservation;
  for (const auto& t : run.trajectories) {
    c.max_unitarity_defect =
        std::max(c.max_unitarity_defect, t.max_unitarity_defect());
    c.max_energy_drift = std::max(c.max_energy_drift, t.max_energy_drift());
    c.max_relative_energy_drift =
        std::max(c.max_relative_energy_drift, t.max_relative_energy_drift());
    c.max_norm_defect = std::max(c.max_norm_defect, t.max_norm_defect());
  }
  c.sector_confined = std::all_of(
      run.basis->states().begin(), run.basis->states().end(),
      [](const BasisState& s) { return s.total_excitation() == 2; });
  return run;
}

namespace {

struct GridPoint {
  JumpMode mode;
  std::pair<int, int> pair;
  double nu_over_g;
  double sigma;
  bool g_during_jump;
};

SweepRow evaluate(const SweepGrid& grid, const GridPoint& p,
                  std::size_t index) {
  GateRunSpec spec;
  spec.n_max = grid.n_max;
  spec.n1 = p.pair.first;
  spec.n2 = p.pair.second;
  spec.g = 1.0;
  spec.nu = p.nu_over_g;
  spec.schedule.mode = p.mode;
  spec.schedule.g_during_jump = p.g_during_jump;
  spec.schedule.compensate_windows = grid.compensate_windows;
  spec.schedule.exact_long_wait = grid.exact_long_wait;

  const int samples = p.sigma > 0 ? std::max(1, grid.samples) : 1;
  LogicalOperator<double> mean = LogicalOperator<double>::Zero();
  double fidelity = 0, leakage = 0, residual = 0;
  for (int s = 0; s < samples; ++s) {
    spec.jitter = {p.sigma, grid.seed + static_cast<std::uint64_t>(s), false};
    const GateRun run = simulate_gate(spec);
    fidelity += run.report.avg_gate_fidelity;
    leakage += run.report.leakage;
    mean += run.logical;
    residual = run.residual;
  }
  mean /= static_cast<double>(samples);

  SweepRow row;
  row.index = index;
  row.mode = p.mode;
  row.nu_over_g = p.nu_over_g;
  row.sigma = p.sigma;
  row.n1 = p.pair.first;
  row.n2 = p.pair.second;
  row.g_during_jump = p.g_during_jump;
  row.fidelity = fidelity / samples;
  row.leakage = leakage / samples;
  row.phases = gate_fidelity(mean, target_cocsign()).phase_profile;
  row.residual = residual;
  return row;
}

}  // namespace

std::vector<SweepRow> sweep(const SweepGrid& grid, int workers) {
  std::vector<GridPoint> points;
  for (JumpMode mode : grid.modes) {
    for (const auto& pair : grid.pairs) {
      for (double nu : grid.nu_over_g) {
        for (double sigma : grid.sigma) {
          for (bool gj : grid.g_during_jump) {
            points.push_back({mode, pair, nu, sigma, gj});
          }
        }
      }
    }
  }
  std::vector<SweepRow> rows(points.size());
  const int n_workers =
      std::clamp(workers, 1, std::max(1, static_cast<int>(points.size())));
  if (n_workers == 1) {
    for (std::size_t k = 0; k < points.size(); ++k) {
      rows[k] = evaluate(grid, points[k], k);
    }
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(points.size());
  std::vector<std::jthread> pool;
  for (int w = 0; w < n_workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < points.size(); k = next++) {
        try {
          rows[k] = evaluate(grid, points[k], k);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

Table sweep_table(const std::vector<SweepRow>& rows) {
  Table t;
  t.header = {"index",    "mode",     "nu_over_g", "sigma",   "n1",
              "n2",       "g_during_jump", "fidelity", "leakage", "phase00",
              "phase01",  "phase10",  "phase11",   "residual"};
  for (const auto& r : rows) {
    t.rows.push_back({std::to_string(r.index),
                      std::string(to_string(r.mode)),
                      format_double(r.nu_over_g),
                      format_double(r.sigma),
                      std::to_string(r.n1),
                      std::to_string(r.n2),
                      r.g_during_jump ? "on" : "off",
                      format_double(r.fidelity),
                      format_double(r.leakage),
                      quarter_text(r.phases[0]),
                      quarter_text(r.phases[1]),
                      quarter_text(r.phases[2]),
                      quarter_text(r.phases[3]),
                      format_double(r.residual)});
  }
  return t;
}

std::vector<SweepRow> sweep_rows_from_table(const Table& t) {
  static const char* kPhaseCols[] = {"phase00", "phase01", "phase10",
                                     "phase11"};
  std::vector<SweepRow> rows;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    SweepRow row;
    row.index = static_cast<std::size_t>(t.number(r, "index"));
    row.mode = jump_mode_from_string(t.at(r, "mode"));
    row.nu_over_g = t.number(r, "nu_over_g");
    row.sigma = t.number(r, "sigma");
    row.n1 = static_cast<int>(t.number(r, "n1"));
    row.n2 = static_cast<int>(t.number(r, "n2"));
    const std::string& gj = t.at(r, "g_during_jump");
    if (gj != "on" && gj != "off") throw ConfigError("bad g_during_jump " + gj);
    row.g_during_jump = gj == "on";
    row.fidelity = t.number(r, "fidelity");
    row.leakage = t.number(r, "leakage");
    for (int k = 0; k < 4; ++k) {
      row.phases[k] = t.number(r, kPhaseCols[k]) * std::numbers::pi / 2;
    }
    row.residual = t.number(r, "residual");
    rows.push_back(row);
  }
  return rows;
}

FeasibilityReport feasibility(double omega, double delta_omega, double tau1,
                              double delta_tau, double upper_ratio) {
  if (!(omega > 0) || !(delta_omega > 0) || !(tau1 > 0) || !(delta_tau > 0) ||
      !(upper_ratio > 0)) {
    throw std::invalid_argument("feasibility: inputs must be positive");
  }
  constexpr double kSlack = 1e-12;
  FeasibilityReport r;
  r.delta_tau_min = 1.0 / delta_omega;
  r.upper_bound = tau1 / upper_ratio;
  r.window_ok = delta_tau >= r.delta_tau_min * (1 - kSlack) &&
                delta_tau <= r.upper_bound * (1 + kSlack);
  r.single_shot_error_floor = r.delta_tau_min / tau1;
  r.rwa_ratio = std::numbers::pi / (tau1 * omega);
  r.rwa_ok = r.rwa_ratio <= PhysicalParams::kRwaLimit;
  return r;
}

}  // namespace jchgate

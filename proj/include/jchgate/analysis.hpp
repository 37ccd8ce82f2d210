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

// Logical-operator extraction, gate fidelity, sweeps and the timing-window
// feasibility arithmetic.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <vector>

#include "jchgate/schedule.hpp"
#include "jchgate/table.hpp"

namespace jchgate {

/// Projection of an evolution onto span{|00>, |01>, |10>, |11>};
/// entry (out, in) = <encode(out)| psi_out(in)>.
template <typename Real = double>
using LogicalOperator = Eigen::Matrix<std::complex<Real>, 4, 4>;

/// diag(1, -1, 1, 1): sign flip on |01> only.
template <typename Real = double>
LogicalOperator<Real> target_cocsign() {
  LogicalOperator<Real> t = LogicalOperator<Real>::Identity();
  t(1, 1) = Real(-1);
  return t;
}

/// diag(1, 1, 1, -1).
template <typename Real = double>
LogicalOperator<Real> target_csign() {
  LogicalOperator<Real> t = LogicalOperator<Real>::Identity();
  t(3, 3) = Real(-1);
  return t;
}

/// sigma_x on the first (x) qubit, identity on y.
template <typename Real = double>
LogicalOperator<Real> sigma_x_first() {
  LogicalOperator<Real> s = LogicalOperator<Real>::Zero();
  s(0, 2) = s(2, 0) = s(1, 3) = s(3, 1) = Real(1);
  return s;
}

/// Runs each logical input through `run` and projects the outputs.
template <typename Real>
LogicalOperator<Real> extract_logical(
    const BasisPtr& basis,
    const std::function<StateVector<Real>(const StateVector<Real>&)>& run) {
  std::array<Eigen::Index, 4> idx{};
  for (int q = 0; q < 4; ++q) {
    idx[q] = static_cast<Eigen::Index>(
        basis->index_of(encode_logical(q >> 1, q & 1)));
  }
  LogicalOperator<Real> m;
  for (int in = 0; in < 4; ++in) {
    const auto out = run(StateVector<Real>::basis_vector(
        basis, encode_logical(in >> 1, in & 1)));
    for (int o = 0; o < 4; ++o) m(o, in) = out.amplitudes(idx[o]);
  }
  return m;
}

template <typename Real>
LogicalOperator<Real> extract_logical(const BasisPtr& basis,
                                      const CMatrix<Real>& unitary) {
  return extract_logical<Real>(basis, [&](const StateVector<Real>& psi) {
    return StateVector<Real>{psi.basis, unitary * psi.amplitudes};
  });
}

struct FidelityReport {
  double avg_gate_fidelity = 0;
  double leakage = 0;
  /// arg of the diagonal of T^+ M, in radians.
  std::array<double, 4> phase_profile{};
  /// arg Tr(T^+ M).
  double global_phase = 0;

  /// Phase in units of pi/2, rounded when within kQuarterTol of an integer.
  static constexpr double kQuarterTol = 1e-6;
  double phase_in_quarters(int k) const;
  std::optional<int> phase_quarter(int k) const;
};

/// Average gate fidelity (Tr(M^+M) + |Tr(T^+M)|^2) / (d(d+1)), d = 4. Valid
/// for sub-unitary M and independent of the global phase of M.
template <typename Real>
FidelityReport gate_fidelity(const LogicalOperator<Real>& m,
                             const LogicalOperator<Real>& target) {
  constexpr double d = 4;
  const LogicalOperator<Real> tm = target.adjoint() * m;
  const double norm2 = static_cast<double>((m.adjoint() * m).trace().real());
  const std::complex<double> overlap(tm.trace());
  FidelityReport r;
  r.avg_gate_fidelity = (norm2 + std::norm(overlap)) / (d * (d + 1));
  r.leakage = 1.0 - norm2 / d;
  for (int k = 0; k < 4; ++k) {
    r.phase_profile[k] = static_cast<double>(std::arg(tm(k, k)));
  }
  r.global_phase = std::arg(overlap);
  return r;
}

/// One end-to-end gate simulation.
struct GateRunSpec {
  int n_max = kDefaultPhotonCutoff;
  int n1 = 4;
  int n2 = 6;
  double g = 1.0;
  double nu = 1000.0;
  ScheduleOptions schedule;
  JitterModel jitter;
};

struct ConservationReport {
  double max_unitarity_defect = 0;
  double max_energy_drift = 0;
  /// Drift divided by max(1, |H|) of its segment.
  double max_relative_energy_drift = 0;
  double max_norm_defect = 0;
  /// Every basis state of the evolution space carries the sector excitation.
  bool sector_confined = true;
};

struct GateRun {
  LogicalOperator<double> logical;
  FidelityReport report;
  ConservationReport conservation;
  double residual = 0;  // in units of tau1
  std::vector<Segment<double>> segments;
  std::array<Trajectory<double>, 4> trajectories;
  BasisPtr basis;
};

/// Builds the N=2 three-cavity sector, compiles the schedule, evolves all
/// four logical inputs and scores against diag(1, -1, 1, 1).
GateRun simulate_gate(const GateRunSpec& spec);

struct SweepGrid {
  std::vector<JumpMode> modes{JumpMode::kIdeal};
  std::vector<double> nu_over_g{1000.0};
  std::vector<double> sigma{0.0};
  std::vector<std::pair<int, int>> pairs{{4, 6}};
  std::vector<bool> g_during_jump{true};
  /// Seeds per jittered point; results are averaged.
  int samples = 1;
  std::uint64_t seed = 0;
  int n_max = kDefaultPhotonCutoff;
  bool compensate_windows = false;
  bool exact_long_wait = false;
};

struct SweepRow {
  std::size_t index = 0;
  JumpMode mode = JumpMode::kIdeal;
  double nu_over_g = 0;
  double sigma = 0;
  int n1 = 0, n2 = 0;
  bool g_during_jump = true;
  double fidelity = 0;
  double leakage = 0;
  std::array<double, 4> phases{};  // radians
  double residual = 0;
};

/// Cartesian product of the grid axes in the order
/// mode, pair, nu_over_g, sigma, g_during_jump. Rows come back in grid order
/// whatever the number of workers.
std::vector<SweepRow> sweep(const SweepGrid& grid, int workers = 1);

Table sweep_table(const std::vector<SweepRow>& rows);
std::vector<SweepRow> sweep_rows_from_table(const Table& table);

/// Phase in units of pi/2, snapped to an integer within the tolerance.
std::string quarter_text(double radians);

struct FeasibilityReport {
  double delta_tau_min = 0;
  bool window_ok = false;
  double single_shot_error_floor = 0;
  bool rwa_ok = false;
  double rwa_ratio = 0;
  double upper_bound = 0;
};

/// Energy-time bound on the jump window: delta_tau_min = 1/delta_omega.
/// The window is accepted when delta_tau_min <= delta_tau <= tau1/upper_ratio.
/// The RWA check uses g = pi/tau1 (hbar absorbed), i.e. g/(hbar omega) =
/// pi/(tau1 omega) <= 1e-3.
FeasibilityReport feasibility(double omega, double delta_omega, double tau1,
                              double delta_tau, double upper_ratio = 100.0);

}  // namespace jchgate

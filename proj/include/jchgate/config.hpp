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

// Run configuration (JSON) and the structured run summary.
// The schema is documented in docs/formats.md.

#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include "jchgate/analysis.hpp"

namespace jchgate {

struct GeometryConfig {
  double omega = 0;
  double hbar = 1;
  double nu = 0;
  CavityGeometry geometry;
};

struct RunConfig {
  JumpMode mode = JumpMode::kIdeal;
  double g = 1.0;
  double nu = 1000.0;
  std::optional<int> n1, n2;
  /// When set (and n1/n2 absent), (n1, n2) come from find_n1n2(bound).
  std::optional<int> search_bound;
  int n_max = kDefaultPhotonCutoff;
  JitterModel jitter;
  bool g_during_jump = true;
  bool compensate_windows = false;
  bool exact_long_wait = false;
  /// Physical-unit section; converted once to natural units on load.
  std::optional<GeometryConfig> physical;
  /// g / (hbar * omega) of the physical section, when given.
  std::optional<double> rwa_ratio;
  std::string output_dir = "out";
  std::string output_prefix = "run";
  std::optional<SweepGrid> sweep;

  /// (n1, n2) after resolving an automatic search.
  std::pair<int, int> timing_pair() const;
  GateRunSpec gate_spec() const;
};

/// Parses and validates; unknown keys, wrong types and out-of-range values
/// raise ConfigError. Physical units are converted to natural units
/// (g -> 1, nu -> nu/g).
RunConfig parse_config(std::istream& is);
RunConfig parse_config_file(const std::string& path);

/// Summary document written by `simulate`.
struct SimulationSummary {
  int format_version = 1;
  std::string mode;
  int n1 = 0, n2 = 0;
  double g = 0, nu = 0;
  double residual = 0;
  double fidelity = 0;
  double leakage = 0;
  std::array<double, 4> phase_quarters{};
  double global_phase = 0;
  double max_unitarity_defect = 0;
  double max_energy_drift = 0;
  double max_relative_energy_drift = 0;
  bool sector_confined = true;
  std::optional<double> rwa_ratio;

  friend bool operator==(const SimulationSummary&,
                         const SimulationSummary&) = default;
};

SimulationSummary summarize(const RunConfig& cfg, const GateRun& run);
void write_summary(std::ostream& os, const SimulationSummary& s);
SimulationSummary read_summary(std::istream& is);

/// Logical operator as a table with columns out,in,re,im.
Table logical_table(const LogicalOperator<double>& m);
LogicalOperator<double> logical_from_table(const Table& t);

}  // namespace jchgate

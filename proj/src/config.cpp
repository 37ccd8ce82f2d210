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

#include "jchgate/config.hpp"

#include <fstream>
#include <initializer_list>
#include <set>

#include "json.hpp"

namespace jchgate {

using nlohmann::json;

namespace {

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + ": expected an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : obj.items()) {
    if (!ok.count(key)) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

template <typename T>
T get(const json& obj, const char* key, const std::string& where) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(where + "." + key + ": " + e.what());
  }
}

template <typename T>
void get_opt(const json& obj, const char* key, T& out,
             const std::string& where) {
  if (obj.contains(key)) out = get<T>(obj, key, where);
}

double positive(double v, const char* what) {
  if (!(v > 0)) throw ConfigError(std::string(what) + " must be positive");
  return v;
}

GeometryConfig parse_physical(const json& j) {
  check_keys(j, {"omega", "hbar", "nu", "geometry"}, "physical_units");
  GeometryConfig p;
  p.omega = positive(get<double>(j, "omega", "physical_units"), "omega");
  get_opt(j, "hbar", p.hbar, "physical_units");
  positive(p.hbar, "hbar");
  p.nu = positive(get<double>(j, "nu", "physical_units"), "nu");
  const json& gj = j.at("geometry");
  check_keys(gj, {"volume", "dipole", "x", "length", "wavelength",
                  "n_half_waves"},
             "physical_units.geometry");
  auto& g = p.geometry;
  const std::string w = "physical_units.geometry";
  g.volume = get<double>(gj, "volume", w);
  g.dipole = get<double>(gj, "dipole", w);
  g.x = get<double>(gj, "x", w);
  g.length = get<double>(gj, "length", w);
  g.wavelength = get<double>(gj, "wavelength", w);
  get_opt(gj, "n_half_waves", g.n_half_waves, w);
  return p;
}

SweepGrid parse_sweep(const json& j) {
  check_keys(j,
             {"modes", "nu_over_g", "sigma", "pairs", "g_during_jump",
              "samples", "seed", "compensate_windows", "exact_long_wait"},
             "sweep");
  SweepGrid grid;
  if (j.contains("modes")) {
    grid.modes.clear();
    for (const auto& m : get<std::vector<std::string>>(j, "modes", "sweep")) {
      grid.modes.push_back(jump_mode_from_string(m));
    }
  }
  get_opt(j, "nu_over_g", grid.nu_over_g, "sweep");
  get_opt(j, "sigma", grid.sigma, "sweep");
  if (j.contains("pairs")) {
    grid.pairs.clear();
    for (const auto& p :
         get<std::vector<std::vector<int>>>(j, "pairs", "sweep")) {
      if (p.size() != 2 || p[0] < 1 || p[1] < 1) {
        throw ConfigError("sweep.pairs: entries must be [n1, n2] with n >= 1");
      }
      grid.pairs.emplace_back(p[0], p[1]);
    }
  }
  get_opt(j, "g_during_jump", grid.g_during_jump, "sweep");
  get_opt(j, "samples", grid.samples, "sweep");
  get_opt(j, "seed", grid.seed, "sweep");
  get_opt(j, "compensate_windows", grid.compensate_windows, "sweep");
  get_opt(j, "exact_long_wait", grid.exact_long_wait, "sweep");
  for (double v : grid.nu_over_g) positive(v, "sweep.nu_over_g");
  for (double v : grid.sigma) {
    if (!(v >= 0)) throw ConfigError("sweep.sigma must be >= 0");
  }
  if (grid.samples < 1) throw ConfigError("sweep.samples must be >= 1");
  return grid;
}

}  // namespace

std::pair<int, int> RunConfig::timing_pair() const {
  if (n1 && n2) return {*n1, *n2};
  const auto best = find_n1n2(search_bound.value_or(10), 1);
  return {best.front().n1, best.front().n2};
}

GateRunSpec RunConfig::gate_spec() const {
  GateRunSpec spec;
  spec.n_max = n_max;
  std::tie(spec.n1, spec.n2) = timing_pair();
  spec.g = g;
  spec.nu = nu;
  spec.schedule.mode = mode;
  spec.schedule.g_during_jump = g_during_jump;
  spec.schedule.compensate_windows = compensate_windows;
  spec.schedule.exact_long_wait = exact_long_wait;
  spec.jitter = jitter;
  return spec;
}

RunConfig parse_config(std::istream& is) {
  json j;
  try {
    j = json::parse(is);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  check_keys(j,
             {"format_version", "mode", "g", "nu", "n1", "n2", "search_bound",
              "n_max", "jitter", "g_during_jump", "compensate_windows",
              "exact_long_wait", "physical_units", "output", "sweep"},
             "config");
  if (!j.contains("format_version")) {
    throw ConfigError("config: format_version is required");
  }
  if (get<int>(j, "format_version", "config") != kFormatVersion) {
    throw ConfigError("config: unsupported format_version");
  }
  RunConfig c;
  if (j.contains("mode")) {
    c.mode = jump_mode_from_string(get<std::string>(j, "mode", "config"));
  }
  get_opt(j, "g", c.g, "config");
  get_opt(j, "nu", c.nu, "config");
  if (j.contains("n1")) c.n1 = get<int>(j, "n1", "config");
  if (j.contains("n2")) c.n2 = get<int>(j, "n2", "config");
  if (j.contains("search_bound")) {
    c.search_bound = get<int>(j, "search_bound", "config");
  }
  get_opt(j, "n_max", c.n_max, "config");
  get_opt(j, "g_during_jump", c.g_during_jump, "config");
  get_opt(j, "compensate_windows", c.compensate_windows, "config");
  get_opt(j, "exact_long_wait", c.exact_long_wait, "config");

  if (c.n1.has_value() != c.n2.has_value()) {
    throw ConfigError("config: n1 and n2 must be given together");
  }
  if (c.n1 && c.search_bound) {
    throw ConfigError("config: give either n1/n2 or search_bound");
  }
  if ((c.n1 && *c.n1 < 1) || (c.n2 && *c.n2 < 1)) {
    throw ConfigError("config: n1 and n2 must be >= 1");
  }
  if (c.search_bound && *c.search_bound < 1) {
    throw ConfigError("config: search_bound must be >= 1");
  }
  if (c.n_max < 1) throw ConfigError("config: n_max must be >= 1");
  positive(c.g, "g");
  positive(c.nu, "nu");

  if (j.contains("jitter")) {
    const json& jj = j.at("jitter");
    check_keys(jj, {"sigma", "seed", "include_jumps"}, "jitter");
    get_opt(jj, "sigma", c.jitter.sigma, "jitter");
    get_opt(jj, "seed", c.jitter.seed, "jitter");
    get_opt(jj, "include_jumps", c.jitter.include_jumps, "jitter");
    if (!(c.jitter.sigma >= 0)) throw ConfigError("jitter.sigma must be >= 0");
  }
  if (j.contains("physical_units")) {
    if (j.contains("g") || j.contains("nu")) {
      throw ConfigError("config: physical_units replaces g and nu");
    }
    c.physical = parse_physical(j.at("physical_units"));
    PhysicalParams params;
    params.omega = c.physical->omega;
    params.hbar = c.physical->hbar;
    double g_phys = 0;
    try {
      g_phys = coupling_from_geometry(params, c.physical->geometry);
    } catch (const DomainError& e) {
      throw ConfigError(std::string("physical_units: ") + e.what());
    }
    if (!(g_phys > 0)) throw ConfigError("physical_units: coupling is zero");
    c.rwa_ratio = g_phys / (params.hbar * params.omega);
    c.g = 1.0;
    c.nu = c.physical->nu / g_phys;
  }
  if (j.contains("output")) {
    const json& o = j.at("output");
    check_keys(o, {"dir", "prefix"}, "output");
    get_opt(o, "dir", c.output_dir, "output");
    get_opt(o, "prefix", c.output_prefix, "output");
    if (c.output_prefix.empty()) throw ConfigError("output.prefix is empty");
  }
  if (j.contains("sweep")) {
    c.sweep = parse_sweep(j.at("sweep"));
    c.sweep->n_max = c.n_max;
  }
  return c;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  return parse_config(in);
}

SimulationSummary summarize(const RunConfig& cfg, const GateRun& run) {
  SimulationSummary s;
  s.mode = std::string(to_string(cfg.mode));
  std::tie(s.n1, s.n2) = cfg.timing_pair();
  s.g = cfg.g;
  s.nu = cfg.nu;
  s.residual = run.residual;
  s.fidelity = run.report.avg_gate_fidelity;
  s.leakage = run.report.leakage;
  for (int k = 0; k < 4; ++k) s.phase_quarters[k] = run.report.phase_in_quarters(k);
  s.global_phase = run.report.global_phase;
  s.max_unitarity_defect = run.conservation.max_unitarity_defect;
  s.max_energy_drift = run.conservation.max_energy_drift;
  s.max_relative_energy_drift = run.conservation.max_relative_energy_drift;
  s.sector_confined = run.conservation.sector_confined;
  s.rwa_ratio = cfg.rwa_ratio;
  return s;
}

void write_summary(std::ostream& os, const SimulationSummary& s) {
  json j;
  j["format_version"] = s.format_version;
  j["mode"] = s.mode;
  j["n1"] = s.n1;
  j["n2"] = s.n2;
  j["g"] = s.g;
  j["nu"] = s.nu;
  j["residual_tau1"] = s.residual;
  j["avg_gate_fidelity"] = s.fidelity;
  j["leakage"] = s.leakage;
  j["phase_profile_quarters"] = s.phase_quarters;
  j["global_phase"] = s.global_phase;
  j["max_unitarity_defect"] = s.max_unitarity_defect;
  j["max_energy_drift"] = s.max_energy_drift;
  j["max_relative_energy_drift"] = s.max_relative_energy_drift;
  j["sector_confined"] = s.sector_confined;
  j["rwa_ratio"] = s.rwa_ratio ? json(*s.rwa_ratio) : json(nullptr);
  os << j.dump(2) << '\n';
}

SimulationSummary read_summary(std::istream& is) {
  json j;
  try {
    j = json::parse(is);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("summary is not valid JSON: ") + e.what());
  }
  check_keys(j,
             {"format_version", "mode", "n1", "n2", "g", "nu",
              "residual_tau1", "avg_gate_fidelity", "leakage",
              "phase_profile_quarters", "global_phase",
              "max_unitarity_defect", "max_energy_drift",
              "max_relative_energy_drift", "sector_confined",
              "rwa_ratio"},
             "summary");
  const std::string w = "summary";
  SimulationSummary s;
  s.format_version = get<int>(j, "format_version", w);
  if (s.format_version != kFormatVersion) {
    throw ConfigError("summary: unsupported format_version");
  }
  s.mode = get<std::string>(j, "mode", w);
  s.n1 = get<int>(j, "n1", w);
  s.n2 = get<int>(j, "n2", w);
  s.g = get<double>(j, "g", w);
  s.nu = get<double>(j, "nu", w);
  s.residual = get<double>(j, "residual_tau1", w);
  s.fidelity = get<double>(j, "avg_gate_fidelity", w);
  s.leakage = get<double>(j, "leakage", w);
  s.phase_quarters = get<std::array<double, 4>>(j, "phase_profile_quarters", w);
  s.global_phase = get<double>(j, "global_phase", w);
  s.max_unitarity_defect = get<double>(j, "max_unitarity_defect", w);
  s.max_energy_drift = get<double>(j, "max_energy_drift", w);
  s.max_relative_energy_drift =
      get<double>(j, "max_relative_energy_drift", w);
  s.sector_confined = get<bool>(j, "sector_confined", w);
  if (!j.at("rwa_ratio").is_null()) s.rwa_ratio = get<double>(j, "rwa_ratio", w);
  return s;
}

Table logical_table(const LogicalOperator<double>& m) {
  static const char* kNames[] = {"00", "01", "10", "11"};
  Table t;
  t.header = {"out", "in", "re", "im"};
  for (int in = 0; in < 4; ++in) {
    for (int out = 0; out < 4; ++out) {
      t.rows.push_back({kNames[out], kNames[in], format_double(m(out, in).real()),
                        format_double(m(out, in).imag())});
    }
  }
  return t;
}

LogicalOperator<double> logical_from_table(const Table& t) {
  auto decode = [](const std::string& s) {
    if (s.size() != 2 || (s[0] != '0' && s[0] != '1') ||
        (s[1] != '0' && s[1] != '1')) {
      throw ConfigError("logical table: bad basis label " + s);
    }
    return 2 * (s[0] - '0') + (s[1] - '0');
  };
  if (t.rows.size() != 16) throw ConfigError("logical table: need 16 rows");
  LogicalOperator<double> m = LogicalOperator<double>::Zero();
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    m(decode(t.at(r, "out")), decode(t.at(r, "in"))) = {t.number(r, "re"),
                                                        t.number(r, "im")};
  }
  return m;
}

}  // namespace jchgate

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

#include "jchgate/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "jchgate/table.hpp"

namespace jchgate {

GateTimings::GateTimings(int n1, int n2, double g, double nu, double hbar)
    : n1_(n1), n2_(n2), g_(g), nu_(nu), hbar_(hbar) {
  if (n1 < 1 || n2 < 1) {
    throw PreconditionError("GateTimings: n1 and n2 must be >= 1");
  }
  if (!(g > 0) || !(nu > 0) || !(hbar > 0)) {
    throw PreconditionError("GateTimings: g, nu and hbar must be positive");
  }
}

double GateTimings::tau1() const { return std::numbers::pi * hbar_ / g_; }

double GateTimings::tau2() const {
  return std::numbers::pi * hbar_ / (g_ * std::numbers::sqrt2);
}

double GateTimings::delta_tau() const {
  return std::numbers::pi * hbar_ / (2 * nu_);
}

double GateTimings::signed_residual() const {
  return std::numbers::sqrt2 * n2_ - 2.0 * n1_ - 0.5;
}

double GateTimings::residual() const { return residual_in_tau1() * tau1(); }

double GateTimings::residual_in_tau1() const {
  return std::abs(signed_residual());
}

double timing_residual(int n1, int n2) {
  return std::abs(std::numbers::sqrt2 * n2 - 2.0 * n1 - 0.5);
}

namespace {

bool by_residual(const TimingCandidate& a, const TimingCandidate& b) {
  if (a.residual != b.residual) return a.residual < b.residual;
  if (a.n1 != b.n1) return a.n1 < b.n1;
  return a.n2 < b.n2;
}

}  // namespace

std::vector<TimingCandidate> find_n1n2(int bound, std::size_t keep) {
  if (bound < 1) throw std::invalid_argument("find_n1n2: bound must be >= 1");
  std::vector<TimingCandidate> out;
  out.reserve(static_cast<std::size_t>(bound) * bound);
  for (int n1 = 1; n1 <= bound; ++n1) {
    for (int n2 = 1; n2 <= bound; ++n2) {
      out.push_back({n1, n2, timing_residual(n1, n2)});
    }
  }
  if (keep > 0 && keep < out.size()) {
    std::partial_sort(out.begin(), out.begin() + static_cast<long>(keep),
                      out.end(), by_residual);
    out.resize(keep);
  } else {
    std::sort(out.begin(), out.end(), by_residual);
  }
  return out;
}

std::vector<std::int64_t> sqrt8_continued_fraction(std::size_t terms) {
  // Periodic expansion of sqrt(D) via the (m, d, a) recurrence; exact in
  // integers.
  constexpr std::int64_t kD = 8;
  const auto a0 = static_cast<std::int64_t>(std::floor(std::sqrt(double(kD))));
  std::vector<std::int64_t> out;
  std::int64_t m = 0, d = 1, a = a0;
  for (std::size_t k = 0; k < terms; ++k) {
    out.push_back(a);
    m = d * a - m;
    d = (kD - m * m) / d;
    a = (a0 + m) / d;
  }
  return out;
}

std::vector<TimingCandidate> continued_fraction_candidates(int bound) {
  if (bound < 1) {
    throw std::invalid_argument("continued_fraction_candidates: bound >= 1");
  }
  std::vector<TimingCandidate> out;
  auto consider = [&](std::int64_t p, std::int64_t q) {
    if (q < 1 || q > bound || p % 4 != 1) return;
    const std::int64_t n1 = (p - 1) / 4;
    if (n1 < 1 || n1 > bound) return;
    out.push_back({static_cast<int>(n1), static_cast<int>(q),
                   timing_residual(static_cast<int>(n1), static_cast<int>(q))});
  };
  // p_{-2}/q_{-2} = 0/1, p_{-1}/q_{-1} = 1/0.
  std::int64_t p_prev2 = 0, q_prev2 = 1, p_prev = 1, q_prev = 0;
  for (std::int64_t a : sqrt8_continued_fraction(64)) {
    for (std::int64_t j = 1; j <= a; ++j) {
      consider(p_prev2 + j * p_prev, q_prev2 + j * q_prev);
    }
    const std::int64_t p = a * p_prev + p_prev2;
    const std::int64_t q = a * q_prev + q_prev2;
    p_prev2 = p_prev;
    q_prev2 = q_prev;
    p_prev = p;
    q_prev = q;
    if (q_prev > bound) break;
  }
  std::sort(out.begin(), out.end(), by_residual);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<TimingCandidate> record_candidates(int bound) {
  std::vector<TimingCandidate> out;
  double best = std::numeric_limits<double>::infinity();
  for (int n2 = 1; n2 <= bound; ++n2) {
    const double target = (std::numbers::sqrt2 * n2 - 0.5) / 2;
    const int center = static_cast<int>(std::lround(target));
    for (int n1 = std::max(1, center - 1); n1 <= std::min(bound, center + 1);
         ++n1) {
      const double r = timing_residual(n1, n2);
      if (r < best) {
        best = r;
        out.push_back({n1, n2, r});
      }
    }
  }
  return out;
}

std::string_view to_string(JumpMode mode) {
  return mode == JumpMode::kIdeal ? "ideal" : "physical";
}

JumpMode jump_mode_from_string(std::string_view s) {
  if (s == "ideal") return JumpMode::kIdeal;
  if (s == "physical") return JumpMode::kPhysical;
  throw ConfigError("unknown mode '" + std::string(s) + "'");
}

std::string cavity_name(int cavity) {
  switch (cavity) {
    case kCavityX:
      return "x";
    case kCavityY:
      return "y";
    case kCavityAux:
      return "aux";
    default:
      return "c" + std::to_string(cavity);
  }
}

int cavity_from_name(std::string_view name) {
  if (name == "x") return kCavityX;
  if (name == "y") return kCavityY;
  if (name == "aux") return kCavityAux;
  if (name.size() > 1 && name[0] == 'c') return std::stoi(std::string(name.substr(1)));
  throw ConfigError("unknown cavity '" + std::string(name) + "'");
}

std::vector<Segment<double>> build_cocsign_schedule(
    const BasisPtr& basis, const GateTimings& timings,
    const ScheduleOptions& options) {
  if (basis->cavity_count() < kGateCavities) {
    throw PreconditionError("coCSign schedule needs cavities x, y and aux");
  }
  const bool physical = options.mode == JumpMode::kPhysical;
  if (physical && options.enforce_fast_jumps && !timings.jumps_fast()) {
    throw TimingWarning("jump window delta_tau exceeds tau1/10");
  }

  const double g = timings.g();
  const auto h_int = build_jc_interaction<double>(basis, g);
  const double window = physical ? timings.delta_tau() : 0.0;
  const double trim = options.compensate_windows ? window : 0.0;

  auto jump = [&](int other) {
    Segment<double> s;
    s.kind = SegmentKind::kJump;
    s.pair = std::make_pair(int(kCavityAux), other);
    if (physical) {
      const auto hop = build_hop<double>(basis, kCavityAux, other, timings.nu());
      if (options.g_during_jump) {
        s.hamiltonian = h_int + hop;
        s.descriptor = "H_int+H_jump";
      } else {
        s.hamiltonian = hop;
        s.descriptor = "H_jump";
      }
      s.duration = window;
    } else {
      s.hamiltonian = build_hop<double>(basis, kCavityAux, other, 1.0);
      s.unitary = ideal_jump<double>(basis, kCavityAux, other).matrix;
      s.descriptor = "ideal_jump";
    }
    return s;
  };
  auto wait = [&](double duration, SegmentKind kind = SegmentKind::kWait) {
    Segment<double> s;
    s.kind = kind;
    s.hamiltonian = h_int;
    s.duration = std::max(0.0, duration);
    s.descriptor = "H_int";
    return s;
  };

  const double half = timings.tau1() / 2;
  Segment<double> long_wait = wait(timings.long_wait() - trim);
  if (options.exact_long_wait) {
    // Single-excitation doublets rotate by the ideal angle over the nominal
    // duration; the double-excitation doublet is already a whole number of
    // periods.
    const double ideal = 2 * timings.n1() * timings.tau1() + half;
    const double scale1 = ideal / timings.long_wait();
    const std::vector<double> couplings(basis->cavity_count(), g);
    long_wait.hamiltonian = build_jc_interaction<double>(
        basis, std::span<const double>(couplings),
        [scale1](int, int n) { return n == 1 ? scale1 : 1.0; });
    long_wait.duration = timings.long_wait();
    long_wait.descriptor = "H_int[exact-timing]";
  }

  std::vector<Segment<double>> out;
  out.reserve(8);
  out.push_back(jump(kCavityX));
  out.push_back(wait(half - trim));
  out.push_back(jump(kCavityY));
  out.push_back(std::move(long_wait));
  out.push_back(jump(kCavityX));
  out.push_back(wait(half - trim));
  out.push_back(jump(kCavityY));
  out.push_back(wait(half - trim / 2, SegmentKind::kFinalWait));
  return out;
}

double elapsed_time(const std::vector<Segment<double>>& segments) {
  double t = 0;
  for (const auto& s : segments) {
    if (!s.instantaneous()) t += s.duration;
  }
  return t;
}

std::vector<Segment<double>> apply_jitter(std::vector<Segment<double>> segments,
                                          const JitterModel& model,
                                          double tau1) {
  if (!(model.sigma >= 0)) throw std::invalid_argument("jitter sigma < 0");
  if (model.sigma == 0) return segments;
  std::mt19937_64 rng(model.seed);
  std::normal_distribution<double> noise(0.0, model.sigma * tau1);
  for (auto& s : segments) {
    const bool is_wait = s.kind != SegmentKind::kJump;
    if (s.instantaneous()) continue;
    if (!is_wait && !model.include_jumps) continue;
    s.duration = std::max(0.0, s.duration + noise(rng));
  }
  return segments;
}

std::vector<TimelineEntry> timeline(const std::vector<Segment<double>>& segs) {
  std::vector<TimelineEntry> out;
  out.reserve(segs.size());
  for (const auto& s : segs) {
    out.push_back({s.kind, s.pair, s.instantaneous() ? 0.0 : s.duration,
                   s.descriptor});
  }
  return out;
}

void write_timeline(std::ostream& os, const std::vector<TimelineEntry>& t) {
  Table table;
  table.header = {"kind", "pair", "duration", "hamiltonian"};
  for (const auto& e : t) {
    const std::string pair =
        e.pair ? cavity_name(e.pair->first) + "-" + cavity_name(e.pair->second)
               : "none";
    table.rows.push_back({std::string(to_string(e.kind)), pair,
                          format_double(e.duration), e.hamiltonian});
  }
  write_table(os, table);
}

std::vector<TimelineEntry> read_timeline(std::istream& is) {
  const Table table = read_table(is);
  std::vector<TimelineEntry> out;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    TimelineEntry e;
    e.kind = segment_kind_from_string(table.at(r, "kind"));
    const std::string& pair = table.at(r, "pair");
    if (pair != "none") {
      const auto dash = pair.find('-');
      if (dash == std::string::npos) throw ConfigError("bad pair " + pair);
      e.pair = std::make_pair(cavity_from_name(pair.substr(0, dash)),
                              cavity_from_name(pair.substr(dash + 1)));
    }
    e.duration = table.number(r, "duration");
    e.hamiltonian = table.at(r, "hamiltonian");
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace jchgate

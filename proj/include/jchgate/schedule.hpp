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

// Timing of the coCSign gate and its compilation into segments.
//
// The gate relies on two Rabi periods that share no common multiple:
// tau1 = pi*hbar/g for one excitation in a cavity and tau2 = tau1/sqrt(2)
// for two. A long wait of 2*n2*tau2 is a whole number of double-excitation
// periods and, for a good (n1, n2), also close to 2*n1*tau1 + tau1/2, so it
// flips single-excitation cavities while leaving doubly excited ones alone.

#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "jchgate/propagate.hpp"

namespace jchgate {

class GateTimings {
 public:
  /// Throws PreconditionError unless n1, n2 >= 1 and g, nu, hbar > 0.
  GateTimings(int n1, int n2, double g = 1.0, double nu = 1000.0,
              double hbar = 1.0);

  int n1() const { return n1_; }
  int n2() const { return n2_; }
  double g() const { return g_; }
  double nu() const { return nu_; }
  double hbar() const { return hbar_; }

  double tau1() const;
  double tau2() const;
  /// Photon transfer window pi*hbar/(2 nu).
  double delta_tau() const;
  double long_wait() const { return 2 * n2_ * tau2(); }
  /// 2*n2*tau2 - 2*n1*tau1 - tau1/2 in units of tau1 (signed).
  double signed_residual() const;
  /// |signed_residual()| * tau1, in time units.
  double residual() const;
  double residual_in_tau1() const;

  static constexpr double kFastJumpRatio = 0.1;
  bool jumps_fast() const { return delta_tau() <= kFastJumpRatio * tau1(); }

 private:
  int n1_;
  int n2_;
  double g_;
  double nu_;
  double hbar_;
};

struct TimingCandidate {
  int n1 = 0;
  int n2 = 0;
  /// |sqrt(2) n2 - 2 n1 - 1/2|, i.e. the timing mismatch in units of tau1.
  double residual = 0;

  friend bool operator==(const TimingCandidate&, const TimingCandidate&) =
      default;
};

/// Residual of a pair in units of tau1.
double timing_residual(int n1, int n2);

/// Exhaustive scan of 1 <= n1, n2 <= bound, sorted by residual (ties by n1,
/// then n2). `keep` > 0 truncates the list.
std::vector<TimingCandidate> find_n1n2(int bound, std::size_t keep = 0);

/// Terms of the continued fraction of sqrt(8) = [2; 1, 4, 1, 4, ...].
std::vector<std::int64_t> sqrt8_continued_fraction(std::size_t terms);

/// Pairs read off the convergents and intermediate fractions p/q of sqrt(8):
/// sqrt(8)*q close to an integer p = 4*n1 + 1 gives (n1, q). Only pairs with
/// n1, n2 <= bound are returned, sorted like find_n1n2.
std::vector<TimingCandidate> continued_fraction_candidates(int bound);

/// Pairs whose residual is smaller than every pair with smaller n2, in order
/// of increasing n2. These are the successive record approximations.
std::vector<TimingCandidate> record_candidates(int bound);

enum class JumpMode { kIdeal, kPhysical };

struct ScheduleOptions {
  JumpMode mode = JumpMode::kIdeal;
  /// Keep the atom-field coupling on while the hopping term is active.
  bool g_during_jump = true;
  /// Measure waits between jump-window midpoints: each inner wait loses
  /// delta_tau and the final wait loses delta_tau/2.
  bool compensate_windows = false;
  /// Diagnostic: the long wait rotates single-excitation cavities by exactly
  /// 2*n1*tau1 + tau1/2 (double-excitation cavities keep 2*n2*tau2).
  bool exact_long_wait = false;
  /// Reject physical schedules whose jump window exceeds tau1/10.
  bool enforce_fast_jumps = true;
};

std::string_view to_string(JumpMode mode);
JumpMode jump_mode_from_string(std::string_view s);

/// jump(aux,x); wait tau1/2; jump(aux,y); wait 2*n2*tau2; jump(aux,x);
/// wait tau1/2; jump(aux,y); final wait tau1/2.
std::vector<Segment<double>> build_cocsign_schedule(
    const BasisPtr& basis, const GateTimings& timings,
    const ScheduleOptions& options = {});

/// Hamiltonian-free total elapsed time of a schedule.
double elapsed_time(const std::vector<Segment<double>>& segments);

struct JitterModel {
  /// Standard deviation of additive duration noise, in units of tau1.
  double sigma = 0.0;
  std::uint64_t seed = 0;
  bool include_jumps = false;
};

/// Adds independent Gaussian noise to wait durations (and timed jump
/// windows when requested). Durations are clamped at zero.
std::vector<Segment<double>> apply_jitter(std::vector<Segment<double>> segments,
                                          const JitterModel& model,
                                          double tau1);

struct TimelineEntry {
  SegmentKind kind = SegmentKind::kWait;
  std::optional<std::pair<int, int>> pair;
  double duration = 0;
  std::string hamiltonian;

  friend bool operator==(const TimelineEntry&, const TimelineEntry&) = default;
};

std::vector<TimelineEntry> timeline(const std::vector<Segment<double>>& segs);

/// Table with columns kind,pair,duration,hamiltonian; pair is e.g. "aux-x"
/// or "none".
void write_timeline(std::ostream& os, const std::vector<TimelineEntry>& t);
std::vector<TimelineEntry> read_timeline(std::istream& is);

std::string cavity_name(int cavity);
int cavity_from_name(std::string_view name);

}  // namespace jchgate

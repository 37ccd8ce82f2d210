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

// Symbolic phase bookkeeping for the coCSign schedule.
//
// Each cavity is reduced to a tag and every operation is a rule on tags.
// Phases are counted in whole quarter turns of -pi/2, so the replay is exact
// integer arithmetic and independent of the numerical propagators.

#pragma once

#include <Eigen/Dense>

#include <array>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "jchgate/errors.hpp"

namespace jchgate::oracle {

/// E: empty, P: photon with ground atom, A: excited atom without photon,
/// D: photon and excited atom.
enum class Tag : char { E = 'E', P = 'P', A = 'A', D = 'D' };

int excitation(Tag t);
int photons(Tag t);
char symbol(Tag t);

/// Tag change plus the number of -pi/2 phase units picked up.
struct Step1 {
  Tag tag;
  int quarters;
};
struct Step2 {
  Tag first;
  Tag second;
  int quarters;
};

/// Wait of tau1/2: P <-> A with one quarter; E unchanged. Throws
/// TraceInvalid on D.
Step1 rule_wait_half(Tag t);

/// Wait of 2*n2*tau2: acts like tau1/2 on single excitations and as the
/// identity on D and E.
Step1 rule_wait_long(Tag t);

/// Photon exchange between two cavities. A lone photon moves across with one
/// quarter; without photons nothing happens. Throws TraceInvalid when both
/// cavities carry a photon.
Step2 rule_jump(Tag a, Tag b);

struct TraceState {
  std::array<Tag, 3> tags{Tag::E, Tag::E, Tag::E};  // x, y, aux
  int quarters = 0;

  int total_excitation() const;
};

struct TraceStep {
  int segment = 0;  // 1..8, 8 being the closing tau1/2 wait
  std::string operation;
  TraceState state;
  int delta = 0;
};

struct TraceResult {
  int qx_in = 0, qy_in = 0;
  /// Logical state after the seven gate segments.
  int qx_mid = 0, qy_mid = 0;
  int quarters_mid = 0;
  /// Logical state after the closing wait.
  int qx_out = 0, qy_out = 0;
  int quarters_total = 0;
  bool reached_double = false;
  int double_cavity = -1;
  std::vector<TraceStep> log;

  /// Accumulated phase modulo 2*pi, as k in k*pi/2 with k in 0..3
  /// (phase = -quarters * pi/2).
  int phase_mid() const;
  int phase_total() const;
};

/// Encoding tag of a logical bit: 0 -> A, 1 -> P.
Tag logical_tag(int bit);

/// Replays the eight-part schedule for a logical input.
TraceResult trace_cocsign(int qx, int qy);

/// Logical operator assembled from the four traces:
/// entry (out, in) = exp(-i * pi/2 * quarters_total).
Eigen::Matrix4cd oracle_logical_operator();

/// Aligned per-segment table for one trace.
void print_trace(std::ostream& os, const TraceResult& r);

/// Human-readable phase such as "0", "pi/2", "pi", "-pi/2".
std::string phase_text(int k);

}  // namespace jchgate::oracle

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

#include "jchgate/propagate.hpp"

#include "jchgate/table.hpp"

namespace jchgate {

std::string_view to_string(SegmentKind kind) {
  switch (kind) {
    case SegmentKind::kJump:
      return "jump";
    case SegmentKind::kWait:
      return "wait";
    case SegmentKind::kFinalWait:
      return "final-wait";
  }
  return "?";
}

SegmentKind segment_kind_from_string(std::string_view s) {
  if (s == "jump") return SegmentKind::kJump;
  if (s == "wait") return SegmentKind::kWait;
  if (s == "final-wait") return SegmentKind::kFinalWait;
  throw ConfigError("unknown segment kind '" + std::string(s) + "'");
}

namespace {

void append_rows(Table& t, double time, const std::string& segment,
                 const std::string& kind, const StateVector<double>& psi) {
  for (std::size_t k = 0; k < psi.basis->size(); ++k) {
    const auto a = psi.amplitudes(static_cast<Eigen::Index>(k));
    t.rows.push_back({format_double(time), segment, kind,
                      (*psi.basis)[k].label(), format_double(a.real()),
                      format_double(a.imag())});
  }
}

}  // namespace

void write_trajectory_csv(std::ostream& os, const Trajectory<double>& traj,
                          const StateVector<double>* initial) {
  Table t;
  t.header = {"time", "segment", "kind", "state", "re", "im"};
  if (initial) append_rows(t, 0.0, "-1", "initial", *initial);
  for (const auto& c : traj.checkpoints) {
    append_rows(t, c.time, std::to_string(c.segment),
                std::string(to_string(c.kind)), c.state);
  }
  write_table(os, t);
}

}  // namespace jchgate

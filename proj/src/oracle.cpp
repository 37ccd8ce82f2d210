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

#include "jchgate/oracle.hpp"

#include <complex>
#include <iomanip>

namespace jchgate::oracle {

int excitation(Tag t) {
  switch (t) {
    case Tag::E:
      return 0;
    case Tag::P:
    case Tag::A:
      return 1;
    case Tag::D:
      return 2;
  }
  return 0;
}

int photons(Tag t) { return (t == Tag::P || t == Tag::D) ? 1 : 0; }

char symbol(Tag t) { return static_cast<char>(t); }

Step1 rule_wait_half(Tag t) {
  switch (t) {
    case Tag::E:
      return {Tag::E, 0};
    case Tag::P:
      return {Tag::A, 1};
    case Tag::A:
      return {Tag::P, 1};
    case Tag::D:
      break;
  }
  throw TraceInvalid("tau1/2 wait on a doubly excited cavity");
}

Step1 rule_wait_long(Tag t) {
  switch (t) {
    case Tag::E:
      return {Tag::E, 0};
    case Tag::P:
      return {Tag::A, 1};
    case Tag::A:
      return {Tag::P, 1};
    case Tag::D:
      return {Tag::D, 0};
  }
  return {t, 0};
}

namespace {

Tag without_photon(Tag t) { return t == Tag::P ? Tag::E : Tag::A; }
Tag with_photon(Tag t) { return t == Tag::E ? Tag::P : Tag::D; }

}  // namespace

Step2 rule_jump(Tag a, Tag b) {
  const int pa = photons(a), pb = photons(b);
  if (pa + pb > 1) throw TraceInvalid("two photons meet in a jump");
  if (pa + pb == 0) return {a, b, 0};
  if (pa == 1) return {without_photon(a), with_photon(b), 1};
  return {with_photon(a), without_photon(b), 1};
}

int TraceState::total_excitation() const {
  int n = 0;
  for (Tag t : tags) n += excitation(t);
  return n;
}

namespace {

int mod4(int q) { return ((q % 4) + 4) % 4; }

// Decodes (x, y) tags back to logical bits; aux must be empty.
bool decode(const TraceState& s, int& qx, int& qy) {
  auto bit = [](Tag t, int& q) {
    if (t == Tag::A) q = 0;
    else if (t == Tag::P) q = 1;
    else return false;
    return true;
  };
  return s.tags[2] == Tag::E && bit(s.tags[0], qx) && bit(s.tags[1], qy);
}

}  // namespace

int TraceResult::phase_mid() const { return mod4(-quarters_mid); }
int TraceResult::phase_total() const { return mod4(-quarters_total); }

Tag logical_tag(int bit) { return bit ? Tag::P : Tag::A; }

TraceResult trace_cocsign(int qx, int qy) {
  if ((qx != 0 && qx != 1) || (qy != 0 && qy != 1)) {
    throw std::invalid_argument("trace_cocsign: qubit values must be 0 or 1");
  }
  TraceResult r;
  r.qx_in = qx;
  r.qy_in = qy;
  TraceState s;
  s.tags = {logical_tag(qx), logical_tag(qy), Tag::E};
  const int excitations = s.total_excitation();

  auto record = [&](int segment, std::string op, int delta) {
    s.quarters += delta;
    if (s.total_excitation() != excitations) {
      throw TraceInvalid("excitation number changed");
    }
    for (int c = 0; c < 3; ++c) {
      if (s.tags[c] == Tag::D && !r.reached_double) {
        r.reached_double = true;
        r.double_cavity = c;
      }
    }
    r.log.push_back({segment, std::move(op), s, delta});
  };
  auto jump = [&](int segment, int other, const char* name) {
    const Step2 st = rule_jump(s.tags[2], s.tags[other]);
    s.tags[2] = st.first;
    s.tags[other] = st.second;
    record(segment, std::string("jump aux<->") + name, st.quarters);
  };
  auto wait = [&](int segment, bool long_wait) {
    int delta = 0;
    for (Tag& t : s.tags) {
      const Step1 st = long_wait ? rule_wait_long(t) : rule_wait_half(t);
      t = st.tag;
      delta += st.quarters;
    }
    record(segment, long_wait ? "wait 2*n2*tau2" : "wait tau1/2", delta);
  };

  jump(1, 0, "x");
  wait(2, false);
  jump(3, 1, "y");
  wait(4, true);
  jump(5, 0, "x");
  wait(6, false);
  jump(7, 1, "y");
  r.quarters_mid = s.quarters;
  if (!decode(s, r.qx_mid, r.qy_mid)) {
    throw TraceInvalid("gate segments did not return to a logical state");
  }
  wait(8, false);
  r.quarters_total = s.quarters;
  if (!decode(s, r.qx_out, r.qy_out)) {
    throw TraceInvalid("closing wait did not return to a logical state");
  }
  return r;
}

Eigen::Matrix4cd oracle_logical_operator() {
  static constexpr std::complex<double> kPowersOfI[] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  for (int qx = 0; qx < 2; ++qx) {
    for (int qy = 0; qy < 2; ++qy) {
      const TraceResult r = trace_cocsign(qx, qy);
      m(2 * r.qx_out + r.qy_out, 2 * qx + qy) =
          kPowersOfI[r.phase_total()];
    }
  }
  return m;
}

std::string phase_text(int k) {
  switch (mod4(k)) {
    case 0:
      return "0";
    case 1:
      return "pi/2";
    case 2:
      return "pi";
    default:
      return "-pi/2";
  }
}

namespace {

// -(q mod 4) * pi/2, the way accumulated -pi/2 steps are usually quoted.
std::string negative_phase_text(int quarters) {
  switch (mod4(quarters)) {
    case 0:
      return "0";
    case 1:
      return "-pi/2";
    case 2:
      return "-pi";
    default:
      return "-3pi/2";
  }
}

}  // namespace

void print_trace(std::ostream& os, const TraceResult& r) {
  os << "input |" << r.qx_in << r.qy_in << ">\n";
  os << "  seg  operation          x  y  aux     dphase       total\n";
  for (const auto& step : r.log) {
    os << "  " << std::setw(3) << step.segment << "  " << std::left
       << std::setw(18) << step.operation << std::right << ' '
       << symbol(step.state.tags[0]) << "  " << symbol(step.state.tags[1])
       << "  " << symbol(step.state.tags[2]) << "  " << std::setw(10)
       << (step.delta ? std::to_string(step.delta) + "*(-pi/2)" : "0")
       << "  " << std::setw(11)
       << std::to_string(step.state.quarters) + "*(-pi/2)" << '\n';
  }
  os << "  |" << r.qx_in << r.qy_in << "> -> |" << r.qx_mid << r.qy_mid
     << ">  phase addition " << negative_phase_text(r.quarters_mid) << '\n';
  os << "  after closing tau1/2 wait: |" << r.qx_out << r.qy_out
     << ">  phase " << phase_text(r.phase_total()) << '\n';
}

}  // namespace jchgate::oracle

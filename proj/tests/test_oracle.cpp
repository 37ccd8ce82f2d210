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

#include <gtest/gtest.h>

#include <sstream>

#include "jchgate/oracle.hpp"

namespace jchgate::oracle {
namespace {

TEST(Rules, HalfWait) {
  EXPECT_EQ(rule_wait_half(Tag::A).tag, Tag::P);
  EXPECT_EQ(rule_wait_half(Tag::A).quarters, 1);
  EXPECT_EQ(rule_wait_half(Tag::P).tag, Tag::A);
  EXPECT_EQ(rule_wait_half(Tag::P).quarters, 1);
  EXPECT_EQ(rule_wait_half(Tag::E).tag, Tag::E);
  EXPECT_EQ(rule_wait_half(Tag::E).quarters, 0);
  EXPECT_THROW(rule_wait_half(Tag::D), TraceInvalid);
}

TEST(Rules, LongWait) {
  EXPECT_EQ(rule_wait_long(Tag::D).tag, Tag::D);
  EXPECT_EQ(rule_wait_long(Tag::D).quarters, 0);
  EXPECT_EQ(rule_wait_long(Tag::P).tag, Tag::A);
  EXPECT_EQ(rule_wait_long(Tag::P).quarters, 1);
  EXPECT_EQ(rule_wait_long(Tag::E).quarters, 0);
}

TEST(Rules, Jump) {
  auto s = rule_jump(Tag::P, Tag::E);
  EXPECT_EQ(s.first, Tag::E);
  EXPECT_EQ(s.second, Tag::P);
  EXPECT_EQ(s.quarters, 1);

  s = rule_jump(Tag::A, Tag::A);
  EXPECT_EQ(s.first, Tag::A);
  EXPECT_EQ(s.second, Tag::A);
  EXPECT_EQ(s.quarters, 0);

  s = rule_jump(Tag::P, Tag::A);
  EXPECT_EQ(s.first, Tag::E);
  EXPECT_EQ(s.second, Tag::D);
  EXPECT_EQ(s.quarters, 1);

  s = rule_jump(Tag::D, Tag::E);
  EXPECT_EQ(s.first, Tag::A);
  EXPECT_EQ(s.second, Tag::P);

  EXPECT_THROW(rule_jump(Tag::P, Tag::P), TraceInvalid);
  EXPECT_THROW(rule_jump(Tag::D, Tag::P), TraceInvalid);
}

TEST(Rules, ConserveExcitation) {
  for (Tag a : {Tag::E, Tag::P, Tag::A, Tag::D}) {
    if (a != Tag::D) {
      EXPECT_EQ(excitation(rule_wait_half(a).tag), excitation(a));
    }
    EXPECT_EQ(excitation(rule_wait_long(a).tag), excitation(a));
    for (Tag b : {Tag::E, Tag::P, Tag::A, Tag::D}) {
      if (photons(a) + photons(b) > 1) continue;
      const auto s = rule_jump(a, b);
      EXPECT_EQ(excitation(s.first) + excitation(s.second),
                excitation(a) + excitation(b));
    }
  }
}

TEST(Trace, ZeroZero) {
  const auto r = trace_cocsign(0, 0);
  EXPECT_EQ(r.qx_mid, 1);
  EXPECT_EQ(r.qy_mid, 1);
  EXPECT_EQ(r.quarters_mid, 8);  // 8 * pi/2 = 0 mod 2pi
  EXPECT_EQ(r.phase_mid(), 0);
  EXPECT_EQ(r.qx_out, 0);
  EXPECT_EQ(r.qy_out, 0);
  EXPECT_EQ(r.phase_total(), 2);  // pi
  // Per-segment quarter increments.
  const int expected[] = {0, 2, 1, 2, 0, 2, 1, 2};
  ASSERT_EQ(r.log.size(), 8u);
  for (int k = 0; k < 8; ++k) EXPECT_EQ(r.log[k].delta, expected[k]) << k;
}

TEST(Trace, ZeroOneGetsTheSignFlip) {
  const auto r = trace_cocsign(0, 1);
  EXPECT_EQ(r.qx_mid, 1);
  EXPECT_EQ(r.qy_mid, 0);
  EXPECT_EQ(r.phase_mid(), 2);  // -pi
  EXPECT_EQ(r.qx_out, 0);
  EXPECT_EQ(r.qy_out, 1);
  EXPECT_EQ(r.phase_total(), 0);
}

TEST(Trace, OneZeroAndOneOne) {
  const auto r10 = trace_cocsign(1, 0);
  EXPECT_EQ(r10.qx_mid, 0);
  EXPECT_EQ(r10.qy_mid, 1);
  EXPECT_EQ(r10.phase_mid(), 0);
  EXPECT_EQ(r10.phase_total(), 2);

  const auto r11 = trace_cocsign(1, 1);
  EXPECT_EQ(r11.qx_mid, 0);
  EXPECT_EQ(r11.qy_mid, 0);
  EXPECT_EQ(r11.phase_mid(), 0);
  EXPECT_EQ(r11.phase_total(), 2);
}

TEST(Trace, OnlyOneZeroReachesDoubleExcitationInAux) {
  int doubles = 0;
  for (int q = 0; q < 4; ++q) {
    const auto r = trace_cocsign(q >> 1, q & 1);
    for (const auto& step : r.log) {
      EXPECT_EQ(step.state.total_excitation(), 2);
    }
    if (r.reached_double) {
      ++doubles;
      EXPECT_EQ(q, 2);
      EXPECT_EQ(r.double_cavity, 2);
    }
  }
  EXPECT_EQ(doubles, 1);
}

TEST(Trace, AssembledOperatorIsMinusCoCSign) {
  Eigen::Matrix4cd expected = -Eigen::Matrix4cd::Identity();
  expected(1, 1) = 1;
  EXPECT_LE((oracle_logical_operator() - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Trace, PrintedTableMentionsEveryStep) {
  std::ostringstream os;
  print_trace(os, trace_cocsign(0, 1));
  const std::string s = os.str();
  EXPECT_NE(s.find("|01> -> |10>  phase addition -pi"), std::string::npos);
  EXPECT_NE(s.find("wait 2*n2*tau2"), std::string::npos);
}

}  // namespace
}  // namespace jchgate::oracle

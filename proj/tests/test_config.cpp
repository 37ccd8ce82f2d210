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

#include "jchgate/config.hpp"

namespace jchgate {
namespace {

RunConfig parse(const std::string& text) {
  std::istringstream is(text);
  return parse_config(is);
}

TEST(Config, MinimalDocumentUsesDefaults) {
  const auto c = parse(R"({"format_version": 1})");
  EXPECT_EQ(c.mode, JumpMode::kIdeal);
  EXPECT_EQ(c.g, 1.0);
  EXPECT_EQ(c.nu, 1000.0);
  EXPECT_EQ(c.timing_pair(), std::make_pair(4, 6));
  EXPECT_FALSE(c.sweep.has_value());
}

TEST(Config, ExplicitFields) {
  const auto c = parse(R"({
    "format_version": 1, "mode": "physical", "g": 2, "nu": 500,
    "n1": 45, "n2": 64, "n_max": 3, "g_during_jump": false,
    "jitter": {"sigma": 0.01, "seed": 9},
    "output": {"dir": "results", "prefix": "p"}
  })");
  const auto spec = c.gate_spec();
  EXPECT_EQ(spec.schedule.mode, JumpMode::kPhysical);
  EXPECT_EQ(spec.n1, 45);
  EXPECT_EQ(spec.n2, 64);
  EXPECT_EQ(spec.n_max, 3);
  EXPECT_FALSE(spec.schedule.g_during_jump);
  EXPECT_EQ(spec.jitter.sigma, 0.01);
  EXPECT_EQ(spec.jitter.seed, 9u);
  EXPECT_EQ(c.output_dir, "results");
  EXPECT_EQ(c.output_prefix, "p");
}

TEST(Config, SearchBoundResolvesPair) {
  EXPECT_EQ(parse(R"({"format_version": 1, "search_bound": 10})").timing_pair(),
            std::make_pair(4, 6));
  EXPECT_EQ(parse(R"({"format_version": 1, "search_bound": 70})").timing_pair(),
            std::make_pair(45, 64));
}

TEST(Config, RejectsBadDocuments) {
  const char* bad[] = {
      "{not json",
      "[]",
      R"({})",
      R"({"format_version": 2})",
      R"({"format_version": 1, "colour": "red"})",
      R"({"format_version": 1, "mode": "teleport"})",
      R"({"format_version": 1, "g": -1})",
      R"({"format_version": 1, "nu": "fast"})",
      R"({"format_version": 1, "n1": 4})",
      R"({"format_version": 1, "n1": 4, "n2": 6, "search_bound": 10})",
      R"({"format_version": 1, "n1": 0, "n2": 6})",
      R"({"format_version": 1, "jitter": {"sigma": -0.1}})",
      R"({"format_version": 1, "jitter": {"spread": 0.1}})",
      R"({"format_version": 1, "output": {"prefix": ""}})",
      R"({"format_version": 1, "sweep": {"modes": ["ideal"], "bogus": 1}})",
  };
  for (const char* text : bad) {
    EXPECT_THROW(parse(text), ConfigError) << text;
  }
}

constexpr const char* kPhysical = R"({
  "format_version": 1,
  "physical_units": {
    "omega": 1e4, "hbar": 1, "nu": 3000,
    "geometry": {"volume": 4, "dipole": 2, "x": 0.5, "length": 1,
                 "wavelength": 2, "n_half_waves": 1}
  }
})";

TEST(Config, PhysicalUnitsConvertToNaturalUnits) {
  const auto c = parse(kPhysical);
  // g = sqrt(hbar omega / V) d = sqrt(1e4 / 4) * 2 = 100.
  EXPECT_EQ(c.g, 1.0);
  EXPECT_NEAR(c.nu, 30.0, 1e-12);
  ASSERT_TRUE(c.rwa_ratio.has_value());
  EXPECT_NEAR(*c.rwa_ratio, 1e-2, 1e-15);
}

TEST(Config, PhysicalUnitsExcludeNaturalUnits) {
  std::string text = kPhysical;
  text.insert(text.find('{') + 1, R"("g": 1,)");
  EXPECT_THROW(parse(text), ConfigError);
  EXPECT_THROW(parse(R"({"format_version": 1, "physical_units": {
      "omega": 1, "nu": 1, "geometry": {"volume": 1, "dipole": 1, "x": 3}}})"),
               ConfigError);
}

TEST(Config, SweepSection) {
  const auto c = parse(R"({
    "format_version": 1, "n_max": 3,
    "sweep": {"modes": ["ideal", "physical"], "nu_over_g": [100, 1000],
              "sigma": [0, 0.01], "pairs": [[4, 6], [45, 64]],
              "g_during_jump": [true, false], "samples": 4, "seed": 3}
  })");
  ASSERT_TRUE(c.sweep.has_value());
  EXPECT_EQ(c.sweep->modes.size(), 2u);
  EXPECT_EQ(c.sweep->pairs[1], std::make_pair(45, 64));
  EXPECT_EQ(c.sweep->samples, 4);
  EXPECT_EQ(c.sweep->n_max, 3);
}

TEST(Summary, RoundTrip) {
  const auto cfg = parse(R"({"format_version": 1})");
  const auto run = simulate_gate(cfg.gate_spec());
  const auto s = summarize(cfg, run);
  std::stringstream ss;
  write_summary(ss, s);
  EXPECT_EQ(read_summary(ss), s);

  auto with_ratio = s;
  with_ratio.rwa_ratio = 1e-4;
  std::stringstream ss2;
  write_summary(ss2, with_ratio);
  EXPECT_EQ(read_summary(ss2), with_ratio);

  std::istringstream extra(R"({"format_version": 1, "surprise": 0})");
  EXPECT_THROW(read_summary(extra), ConfigError);
}

TEST(LogicalTable, RoundTripIsExact) {
  LogicalOperator<double> m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m(r, c) = {0.1 * r - 0.3 * c, 1.0 / (r + c + 3)};
  }
  const Table t = logical_table(m);
  EXPECT_EQ(t.rows.size(), 16u);
  std::stringstream ss;
  write_table(ss, t);
  EXPECT_EQ(logical_from_table(read_table(ss)), m);
}

}  // namespace
}  // namespace jchgate

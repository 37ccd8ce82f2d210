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

// Comma-separated result tables.
//
//   # format_version: 1
//   col_a,col_b,...
//   v,v,...
//
// Fields never contain commas or newlines; the writer rejects any that do.

#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace jchgate {

inline constexpr int kFormatVersion = 1;

struct Table {
  int format_version = kFormatVersion;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column position by name; throws ConfigError when missing.
  std::size_t column(const std::string& name) const;
  const std::string& at(std::size_t row, const std::string& name) const {
    return rows.at(row).at(column(name));
  }
  double number(std::size_t row, const std::string& name) const;
};

void write_table(std::ostream& os, const Table& table);

/// Parses a table written by write_table. Throws ConfigError on a missing
/// version line, an unsupported version or ragged rows.
Table read_table(std::istream& is);

/// Shortest round-trippable decimal form of a double.
std::string format_double(double v);

}  // namespace jchgate

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

#include "jchgate/table.hpp"

#include <charconv>
#include <sstream>

#include "jchgate/errors.hpp"

namespace jchgate {

namespace {

constexpr const char* kVersionPrefix = "# format_version: ";

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

void write_row(std::ostream& os, const std::vector<std::string>& row) {
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (row[k].find_first_of(",\n") != std::string::npos) {
      throw std::invalid_argument("table field contains a separator: " +
                                  row[k]);
    }
    if (k) os << ',';
    os << row[k];
  }
  os << '\n';
}

}  // namespace

std::size_t Table::column(const std::string& name) const {
  for (std::size_t k = 0; k < header.size(); ++k) {
    if (header[k] == name) return k;
  }
  throw ConfigError("table has no column '" + name + "'");
}

double Table::number(std::size_t row, const std::string& name) const {
  const std::string& s = at(row, name);
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError("column '" + name + "' is not numeric: " + s);
  }
  return v;
}

void write_table(std::ostream& os, const Table& table) {
  os << kVersionPrefix << table.format_version << '\n';
  write_row(os, table.header);
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size()) {
      throw std::invalid_argument("ragged table row");
    }
    write_row(os, row);
  }
}

Table read_table(std::istream& is) {
  Table t;
  std::string line;
  if (!std::getline(is, line) || line.rfind(kVersionPrefix, 0) != 0) {
    throw ConfigError("table: missing format_version line");
  }
  t.format_version = std::stoi(line.substr(std::string(kVersionPrefix).size()));
  if (t.format_version != kFormatVersion) {
    throw ConfigError("table: unsupported format_version " +
                      std::to_string(t.format_version));
  }
  if (!std::getline(is, line)) throw ConfigError("table: missing header");
  t.header = split(line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto row = split(line);
    if (row.size() != t.header.size()) throw ConfigError("table: ragged row");
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace jchgate

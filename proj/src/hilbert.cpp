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

#include "jchgate/hilbert.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace jchgate {

int BasisState::total_excitation() const {
  return std::accumulate(photons.begin(), photons.end(), 0) +
         std::accumulate(atoms.begin(), atoms.end(), 0);
}

std::string BasisState::label() const {
  std::string out = "ph";
  for (int n : photons) out += std::to_string(n);
  out += "_at";
  for (int m : atoms) out += std::to_string(m);
  return out;
}

std::ostream& operator<<(std::ostream& os, const BasisState& s) {
  os << '|';
  for (int n : s.photons) os << n;
  os << ">ph|";
  for (int m : s.atoms) os << m;
  return os << ">at";
}

namespace {

// Recursive fill of per-cavity (photons, atom) pairs, keeping states whose
// running excitation stays within `hi` and ends inside [lo, hi].
void fill(int cavity, int n_max, int lo, int hi, int running, BasisState& cur,
          std::vector<BasisState>& out) {
  if (cavity == cur.cavity_count()) {
    if (running >= lo) out.push_back(cur);
    return;
  }
  for (int n = 0; n <= n_max; ++n) {
    for (int m = 0; m <= 1; ++m) {
      if (running + n + m > hi) continue;
      cur.photons[cavity] = n;
      cur.atoms[cavity] = m;
      fill(cavity + 1, n_max, lo, hi, running + n + m, cur, out);
    }
  }
}

}  // namespace

SectorBasis::SectorBasis(int cavity_count, int n_max, int min_excitation,
                         int max_excitation)
    : cavity_count_(cavity_count),
      n_max_(n_max),
      min_excitation_(min_excitation),
      max_excitation_(max_excitation) {
  if (cavity_count < 1 || n_max < 0 || min_excitation < 0 ||
      max_excitation < min_excitation) {
    throw std::invalid_argument("SectorBasis: invalid dimensions");
  }
  BasisState cur{std::vector<int>(cavity_count, 0),
                 std::vector<int>(cavity_count, 0)};
  fill(0, n_max, min_excitation, max_excitation, 0, cur, states_);
  std::sort(states_.begin(), states_.end());
  for (std::size_t k = 0; k < states_.size(); ++k) index_.emplace(states_[k], k);
}

int SectorBasis::excitation() const {
  if (!is_single_sector()) {
    throw std::logic_error("SectorBasis: band basis has no single excitation");
  }
  return min_excitation_;
}

std::size_t SectorBasis::index_of(const BasisState& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) {
    std::ostringstream msg;
    msg << "state " << s << " is not in the basis";
    throw InvalidQuery(msg.str());
  }
  return it->second;
}

std::ptrdiff_t SectorBasis::find(const BasisState& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

bool SectorBasis::same_space(const SectorBasis& other) const {
  return cavity_count_ == other.cavity_count_ && n_max_ == other.n_max_ &&
         min_excitation_ == other.min_excitation_ &&
         max_excitation_ == other.max_excitation_;
}

void SectorBasis::dump(std::ostream& os) const {
  os << "# cavities=" << cavity_count_ << " n_max=" << n_max_
     << " excitation=" << min_excitation_;
  if (!is_single_sector()) os << ".." << max_excitation_;
  os << '\n';
  for (std::size_t k = 0; k < states_.size(); ++k) {
    os << k;
    for (int n : states_[k].photons) os << ' ' << n;
    os << " |";
    for (int m : states_[k].atoms) os << ' ' << m;
    os << '\n';
  }
}

BasisPtr enumerate_sector(int cavity_count, int n_max, int total) {
  return std::make_shared<const SectorBasis>(cavity_count, n_max, total, total);
}

BasisPtr enumerate_band(int cavity_count, int n_max, int lo, int hi) {
  return std::make_shared<const SectorBasis>(cavity_count, n_max, lo, hi);
}

BasisState encode_logical(int qx, int qy) {
  if ((qx != 0 && qx != 1) || (qy != 0 && qy != 1)) {
    throw std::invalid_argument("encode_logical: qubit values must be 0 or 1");
  }
  return BasisState{{qx, qy, 0}, {1 - qx, 1 - qy, 0}};
}

}  // namespace jchgate

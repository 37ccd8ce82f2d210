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

// Truncated occupation-number basis for K coupled cavities, each holding a
// single-mode field (photon count 0..n_max) and one two-level atom.

#pragma once

#include <Eigen/Dense>

#include <compare>
#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "jchgate/errors.hpp"

namespace jchgate {

/// Cavity roles in the three-cavity gate layout.
enum Cavity : int { kCavityX = 0, kCavityY = 1, kCavityAux = 2 };
inline constexpr int kGateCavities = 3;
inline constexpr int kDefaultPhotonCutoff = 2;

struct BasisState {
  std::vector<int> photons;
  std::vector<int> atoms;

  int cavity_count() const { return static_cast<int>(photons.size()); }
  int excitation(int cavity) const { return photons[cavity] + atoms[cavity]; }
  int total_excitation() const;

  /// Compact label such as "ph010_at100".
  std::string label() const;

  friend auto operator<=>(const BasisState&, const BasisState&) = default;
  friend bool operator==(const BasisState&, const BasisState&) = default;
};

std::ostream& operator<<(std::ostream& os, const BasisState& s);

/// Ordered list of occupation states whose total excitation lies in
/// [min_excitation, max_excitation]. Physical runs use a single sector
/// (min == max); wider bands exist so tests can check that Hamiltonians
/// never couple different sectors.
class SectorBasis {
 public:
  SectorBasis(int cavity_count, int n_max, int min_excitation,
              int max_excitation);

  int cavity_count() const { return cavity_count_; }
  int n_max() const { return n_max_; }
  int min_excitation() const { return min_excitation_; }
  int max_excitation() const { return max_excitation_; }
  /// Total excitation of a single-sector basis.
  int excitation() const;
  bool is_single_sector() const { return min_excitation_ == max_excitation_; }

  std::size_t size() const { return states_.size(); }
  bool empty() const { return states_.empty(); }
  const std::vector<BasisState>& states() const { return states_; }
  const BasisState& operator[](std::size_t k) const { return states_[k]; }

  bool contains(const BasisState& s) const { return index_.count(s) != 0; }
  /// Throws InvalidQuery when `s` is not in the basis.
  std::size_t index_of(const BasisState& s) const;
  /// Position of `s`, or -1 when absent (truncated or other sector).
  std::ptrdiff_t find(const BasisState& s) const;

  /// Same cavity count, cutoff and excitation band.
  bool same_space(const SectorBasis& other) const;

  /// One line per state: "<index> <photons...> | <atoms...>".
  void dump(std::ostream& os) const;

 private:
  int cavity_count_;
  int n_max_;
  int min_excitation_;
  int max_excitation_;
  std::vector<BasisState> states_;
  std::map<BasisState, std::size_t> index_;
};

using BasisPtr = std::shared_ptr<const SectorBasis>;

/// All states of `cavity_count` cavities with exactly `total` excitations.
BasisPtr enumerate_sector(int cavity_count, int n_max, int total);

/// All states with total excitation in [lo, hi].
BasisPtr enumerate_band(int cavity_count, int n_max, int lo, int hi);

/// Logical encoding of two qubits on cavities (x, y); aux is left empty.
/// Bit 0 keeps the excitation in the atom, bit 1 in the photon.
BasisState encode_logical(int qx, int qy);

/// Logical basis index in {|00>, |01>, |10>, |11>} order.
inline int logical_index(int qx, int qy) { return 2 * qx + qy; }

template <typename Real = double>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

template <typename Real = double>
using CMatrix =
    Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

/// Pure state supported on a sector basis.
template <typename Real = double>
struct StateVector {
  BasisPtr basis;
  CVector<Real> amplitudes;

  static StateVector basis_vector(BasisPtr b, const BasisState& s) {
    StateVector v{b, CVector<Real>::Zero(static_cast<Eigen::Index>(b->size()))};
    v.amplitudes(static_cast<Eigen::Index>(b->index_of(s))) = Real(1);
    return v;
  }

  Real norm() const { return amplitudes.norm(); }
};

template <typename Real>
std::complex<Real> basis_state_amplitude(const StateVector<Real>& psi,
                                         const BasisState& s) {
  return psi.amplitudes(static_cast<Eigen::Index>(psi.basis->index_of(s)));
}

}  // namespace jchgate

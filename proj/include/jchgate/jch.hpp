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

// Jaynes-Cummings-Hubbard Hamiltonians restricted to a SectorBasis.
//
// All builders work in the interaction picture with hbar absorbed into the
// couplings unless stated otherwise. Matrix elements are produced by applying
// ladder operators to each basis state and looking the image up in the basis;
// images that leave the basis (photon cutoff) are dropped.

#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "jchgate/hilbert.hpp"

namespace jchgate {

/// Dense operator tied to the basis it acts on.
template <typename Real = double>
struct Operator {
  BasisPtr basis;
  CMatrix<Real> matrix;

  Eigen::Index dim() const { return matrix.rows(); }
};

template <typename Real>
Operator<Real> zero_operator(const BasisPtr& basis) {
  const auto n = static_cast<Eigen::Index>(basis->size());
  return {basis, CMatrix<Real>::Zero(n, n)};
}

template <typename Real>
Operator<Real> operator+(Operator<Real> a, const Operator<Real>& b) {
  if (!a.basis->same_space(*b.basis)) {
    throw PreconditionError("operator sum over different bases");
  }
  a.matrix += b.matrix;
  return a;
}

template <typename Real>
Operator<Real> operator*(Real s, Operator<Real> a) {
  a.matrix *= s;
  return a;
}

/// max |A - A^+| over entries, relative to max(1, max|A|).
template <typename Derived>
auto hermiticity_defect(const Eigen::MatrixBase<Derived>& a) {
  using std::max;
  const auto scale = max(typename Derived::RealScalar(1),
                         a.cwiseAbs().maxCoeff());
  return (a - a.adjoint()).cwiseAbs().maxCoeff() / scale;
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& a,
                  typename Derived::RealScalar tol = 1e-12) {
  return a.rows() == a.cols() && hermiticity_defect(a) <= tol;
}

/// max |U^+ U - I|.
template <typename Derived>
auto unitarity_defect(const Eigen::MatrixBase<Derived>& u) {
  using M = typename Derived::PlainObject;
  return (u.adjoint() * u - M::Identity(u.rows(), u.cols()))
      .cwiseAbs()
      .maxCoeff();
}

/// max |[A, B]|.
template <typename Real>
Real commutator_norm(const Operator<Real>& a, const Operator<Real>& b) {
  return (a.matrix * b.matrix - b.matrix * a.matrix).cwiseAbs().maxCoeff();
}

namespace detail {

// Adds `value` at <to|.|from> and its conjugate at <from|.|to>, skipping
// images outside the basis.
template <typename Real>
void add_hermitian_pair(CMatrix<Real>& m, const SectorBasis& basis,
                        std::size_t from, const BasisState& to,
                        std::complex<Real> value) {
  const auto k = basis.find(to);
  if (k < 0) return;
  m(k, static_cast<Eigen::Index>(from)) += value;
  m(static_cast<Eigen::Index>(from), k) += std::conj(value);
}

}  // namespace detail

/// Scale applied to the Jaynes-Cummings term of `cavity` when that cavity
/// holds `local_excitation` quanta. The identity scale reproduces H_int.
template <typename Real>
using BlockScale = std::function<Real(int cavity, int local_excitation)>;

/// sum_i g_i (a_i^+ sigma_i + a_i sigma_i^+), with the optional block scale
/// multiplying each cavity's Rabi doublet |n-1,e>-|n,g> by scale(i, n).
/// Because each doublet is invariant under the full interaction, scaling
/// them keeps the operator Hermitian and lets one segment rotate different
/// excitation blocks by different angles.
template <typename Real>
Operator<Real> build_jc_interaction(const BasisPtr& basis,
                                    std::span<const Real> couplings,
                                    const BlockScale<Real>& scale = {}) {
  if (static_cast<int>(couplings.size()) != basis->cavity_count()) {
    throw std::invalid_argument(
        "build_jc_interaction: one coupling per cavity required");
  }
  auto h = zero_operator<Real>(basis);
  for (std::size_t k = 0; k < basis->size(); ++k) {
    const BasisState& s = (*basis)[k];
    for (int c = 0; c < basis->cavity_count(); ++c) {
      // a^+ sigma: atom relaxes, photon count n-1 -> n.
      if (s.atoms[c] != 1 || couplings[c] == Real(0)) continue;
      BasisState t = s;
      t.atoms[c] = 0;
      t.photons[c] += 1;
      const int n = t.photons[c];
      Real element = couplings[c] * std::sqrt(static_cast<Real>(n));
      if (scale) element *= scale(c, n);
      detail::add_hermitian_pair<Real>(h.matrix, *basis, k, t, element);
    }
  }
  return h;
}

template <typename Real>
Operator<Real> build_jc_interaction(const BasisPtr& basis, Real g) {
  const std::vector<Real> couplings(basis->cavity_count(), g);
  return build_jc_interaction<Real>(basis, std::span<const Real>(couplings));
}

/// nu (a_i a_j^+ + a_j a_i^+). Atoms are untouched.
template <typename Real>
Operator<Real> build_hop(const BasisPtr& basis, int i, int j, Real nu) {
  const int k_cav = basis->cavity_count();
  if (i == j || i < 0 || j < 0 || i >= k_cav || j >= k_cav) {
    throw std::invalid_argument("build_hop: need two distinct valid cavities");
  }
  auto h = zero_operator<Real>(basis);
  if (nu == Real(0)) return h;
  for (std::size_t k = 0; k < basis->size(); ++k) {
    const BasisState& s = (*basis)[k];
    // a_i a_j^+ only; the Hermitian partner supplies a_j a_i^+.
    if (s.photons[i] == 0) continue;
    BasisState t = s;
    t.photons[i] -= 1;
    t.photons[j] += 1;
    const Real element =
        nu * std::sqrt(static_cast<Real>(s.photons[i])) *
        std::sqrt(static_cast<Real>(t.photons[j]));
    detail::add_hermitian_pair<Real>(h.matrix, *basis, k, t, element);
  }
  return h;
}

/// hbar*omega*(sum a^+a + sum sigma^+sigma), the bare resonant energy.
template <typename Real>
Operator<Real> build_h0(const BasisPtr& basis, Real omega, Real hbar = 1) {
  auto h = zero_operator<Real>(basis);
  for (std::size_t k = 0; k < basis->size(); ++k) {
    const auto idx = static_cast<Eigen::Index>(k);
    h.matrix(idx, idx) = hbar * omega * (*basis)[k].total_excitation();
  }
  return h;
}

/// Total excitation number operator (diagonal).
template <typename Real>
Operator<Real> excitation_number(const BasisPtr& basis) {
  return build_h0<Real>(basis, Real(1), Real(1));
}

/// a_c^+ on a band basis (maps between neighbouring sectors).
template <typename Real>
Operator<Real> photon_creation(const BasisPtr& basis, int cavity) {
  auto op = zero_operator<Real>(basis);
  for (std::size_t k = 0; k < basis->size(); ++k) {
    BasisState t = (*basis)[k];
    t.photons[cavity] += 1;
    const auto to = basis->find(t);
    if (to < 0) continue;
    op.matrix(to, static_cast<Eigen::Index>(k)) =
        std::sqrt(static_cast<Real>(t.photons[cavity]));
  }
  return op;
}

/// Atom-field constants. Natural units (hbar = g = 1) are the default; the
/// RWA is only trusted while g / (hbar*omega) stays below 1e-3.
struct PhysicalParams {
  double omega = 0.0;
  double g = 1.0;
  double nu = 1.0;
  double hbar = 1.0;

  static constexpr double kRwaLimit = 1e-3;
  bool rwa_ok() const { return omega > 0 && g / (hbar * omega) <= kRwaLimit; }
};

/// Fabry-Perot style cavity holding one atom at position x in [0, L].
struct CavityGeometry {
  double volume = 1.0;
  double dipole = 1.0;
  double x = 0.5;
  double length = 1.0;
  double wavelength = 2.0;
  int n_half_waves = 1;

  /// L = n * lambda / 2 to relative precision `tol`.
  bool resonant(double tol = 1e-9) const {
    return std::abs(length - n_half_waves * wavelength / 2) <=
           tol * std::max(1.0, std::abs(length));
  }
};

/// Mode profile sin(pi x / L).
double mode_profile(const CavityGeometry& geom);

/// g = sqrt(hbar*omega / V) * d * sin(pi x / L). Throws DomainError when the
/// atom sits outside the cavity or the geometry is degenerate.
double coupling_from_geometry(const PhysicalParams& params,
                              const CavityGeometry& geom);

}  // namespace jchgate

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

// Exact evolution under piecewise-constant Hamiltonians.

#pragma once

#include <Eigen/Eigenvalues>

#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jchgate/jch.hpp"

namespace jchgate {

/// exp(-i H t / hbar) from the Hermitian eigendecomposition H = V D V^+.
template <typename Real>
CMatrix<Real> propagator(const CMatrix<Real>& h, Real t, Real hbar = 1) {
  if (!is_hermitian(h, Real(1e-12))) {
    throw PreconditionError("propagator: Hamiltonian is not Hermitian");
  }
  if (h.rows() == 0) return h;
  Eigen::SelfAdjointEigenSolver<CMatrix<Real>> es(h);
  if (es.info() != Eigen::Success) {
    throw PreconditionError("propagator: eigendecomposition failed");
  }
  const CVector<Real> phases =
      (es.eigenvalues().array() * (-t / hbar))
          .unaryExpr([](Real a) { return std::polar(Real(1), a); })
          .matrix();
  return es.eigenvectors() * phases.asDiagonal() *
         es.eigenvectors().adjoint();
}

template <typename Real>
Operator<Real> propagator(const Operator<Real>& h, Real t, Real hbar = 1) {
  return {h.basis, propagator<Real>(h.matrix, t, hbar)};
}

/// Instantaneous photon exchange exp(-i (pi/2)(a_i a_j^+ + a_j a_i^+)).
/// A single photon shared by the pair moves across with amplitude -i.
template <typename Real>
Operator<Real> ideal_jump(const BasisPtr& basis, int i, int j) {
  return propagator<Real>(build_hop<Real>(basis, i, j, Real(1)),
                          std::numbers::pi_v<Real> / 2);
}

enum class SegmentKind { kJump, kWait, kFinalWait };

std::string_view to_string(SegmentKind kind);
SegmentKind segment_kind_from_string(std::string_view s);

/// One piece of a piecewise-constant schedule. A segment either evolves
/// under `hamiltonian` for `duration`, or, when `unitary` is set, applies
/// that unitary in zero elapsed time (ideal jumps).
template <typename Real = double>
struct Segment {
  SegmentKind kind = SegmentKind::kWait;
  std::optional<std::pair<int, int>> pair;
  Real duration = 0;
  Operator<Real> hamiltonian;
  std::optional<CMatrix<Real>> unitary;
  /// Short description of the generator, e.g. "H_int" or "H_int+H_jump".
  std::string descriptor;

  bool instantaneous() const { return unitary.has_value(); }

  CMatrix<Real> evolution_operator(Real hbar = 1) const {
    if (unitary) return *unitary;
    return propagator<Real>(hamiltonian.matrix, duration, hbar);
  }
};

template <typename Real = double>
struct Checkpoint {
  Real time = 0;
  std::size_t segment = 0;
  SegmentKind kind = SegmentKind::kWait;
  StateVector<Real> state;
  /// |<H>_after - <H>_before| for timed segments, 0 for instantaneous ones.
  Real energy_drift = 0;
  /// max(1, row-sum norm of H): the energy unit of the drift check.
  Real energy_scale = 1;
  /// max |U^+U - I| of the segment's evolution operator.
  Real unitarity_defect = 0;
};

template <typename Real = double>
struct Trajectory {
  std::vector<Checkpoint<Real>> checkpoints;

  Real max_energy_drift() const {
    Real m = 0;
    for (const auto& c : checkpoints) m = std::max(m, c.energy_drift);
    return m;
  }
  Real max_relative_energy_drift() const {
    Real m = 0;
    for (const auto& c : checkpoints) {
      m = std::max(m, c.energy_drift / c.energy_scale);
    }
    return m;
  }
  Real max_unitarity_defect() const {
    Real m = 0;
    for (const auto& c : checkpoints) m = std::max(m, c.unitarity_defect);
    return m;
  }
  Real max_norm_defect() const {
    Real m = 0;
    for (const auto& c : checkpoints) {
      m = std::max(m, std::abs(c.state.norm() - Real(1)));
    }
    return m;
  }
};

template <typename Real>
Real expectation(const CMatrix<Real>& h, const CVector<Real>& psi) {
  return psi.dot(h * psi).real();
}

/// Applies the segments in order, recording a checkpoint after each.
template <typename Real>
std::pair<StateVector<Real>, Trajectory<Real>> evolve(
    StateVector<Real> psi, const std::vector<Segment<Real>>& segments,
    Real hbar = 1) {
  Trajectory<Real> traj;
  traj.checkpoints.reserve(segments.size());
  Real time = 0;
  for (std::size_t k = 0; k < segments.size(); ++k) {
    const Segment<Real>& seg = segments[k];
    const BasisPtr& seg_basis =
        seg.hamiltonian.basis ? seg.hamiltonian.basis : psi.basis;
    if (!seg_basis->same_space(*psi.basis) ||
        (seg.unitary && seg.unitary->rows() != psi.amplitudes.size()) ||
        (!seg.unitary && seg.hamiltonian.dim() != psi.amplitudes.size())) {
      throw PreconditionError("evolve: segment basis does not match state");
    }
    const CMatrix<Real> u = seg.evolution_operator(hbar);
    Real drift = 0;
    Real scale = 1;
    if (seg.instantaneous()) {
      psi.amplitudes = u * psi.amplitudes;
    } else {
      const Real before = expectation(seg.hamiltonian.matrix, psi.amplitudes);
      psi.amplitudes = u * psi.amplitudes;
      drift = std::abs(expectation(seg.hamiltonian.matrix, psi.amplitudes) -
                       before);
      scale = std::max(Real(1), seg.hamiltonian.matrix.cwiseAbs()
                                    .rowwise()
                                    .sum()
                                    .maxCoeff());
      time += seg.duration;
    }
    traj.checkpoints.push_back(
        {time, k, seg.kind, psi, drift, scale, unitarity_defect(u)});
  }
  return {std::move(psi), std::move(traj)};
}

/// Product of all segment evolution operators (last segment leftmost).
template <typename Real>
CMatrix<Real> schedule_unitary(const BasisPtr& basis,
                               const std::vector<Segment<Real>>& segments,
                               Real hbar = 1) {
  const auto n = static_cast<Eigen::Index>(basis->size());
  CMatrix<Real> u = CMatrix<Real>::Identity(n, n);
  for (const auto& seg : segments) u = seg.evolution_operator(hbar) * u;
  return u;
}

/// Tabular export: time,segment,kind,state,re,im (one row per basis state
/// per checkpoint; row zero of each block is the initial time when
/// `initial` is given).
void write_trajectory_csv(std::ostream& os, const Trajectory<double>& traj,
                          const StateVector<double>* initial = nullptr);

}  // namespace jchgate

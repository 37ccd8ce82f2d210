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

#include <unsupported/Eigen/MatrixFunctions>

#include <numbers>
#include <random>
#include <sstream>

#include "jchgate/propagate.hpp"
#include "jchgate/table.hpp"

namespace jchgate {
namespace {

using std::numbers::pi;
using C = std::complex<double>;
constexpr C kI(0, 1);

CMatrix<double> sigma_x() {
  CMatrix<double> s(2, 2);
  s << 0, 1, 1, 0;
  return s;
}

double max_diff(const CMatrix<double>& a, const CMatrix<double>& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

TEST(Propagator, SingleExcitationRabiIdentities) {
  const auto b = enumerate_sector(1, 2, 1);
  const auto h = build_jc_interaction<double>(b, 1.0);
  const double tau1 = pi;
  const auto id = CMatrix<double>::Identity(2, 2);
  EXPECT_LE(max_diff(propagator(h, tau1 / 2).matrix, -kI * sigma_x()), 1e-12);
  EXPECT_LE(max_diff(propagator(h, tau1).matrix, -id), 1e-12);
  EXPECT_LE(max_diff(propagator(h, 2 * tau1).matrix, id), 1e-12);
  EXPECT_LE(max_diff(propagator(h, 0.0).matrix, id), 1e-15);
}

TEST(Propagator, DoubleExcitationPeriod) {
  const auto b = enumerate_sector(1, 2, 2);
  const auto h = build_jc_interaction<double>(b, 1.0);
  const double tau2 = pi / std::sqrt(2.0);
  const auto id = CMatrix<double>::Identity(2, 2);
  EXPECT_LE(max_diff(propagator(h, 2 * tau2).matrix, id), 1e-12);
  EXPECT_LE(max_diff(propagator(h, tau2 / 2).matrix, -kI * sigma_x()), 1e-12);
}

TEST(Propagator, RejectsNonHermitian) {
  CMatrix<double> h(2, 2);
  h << 0, 1, 0, 0;
  EXPECT_THROW(propagator<double>(h, 1.0), PreconditionError);
}

TEST(Propagator, WorksInExtendedPrecision) {
  const auto b = enumerate_sector(1, 2, 1);
  const auto h = build_jc_interaction<long double>(b, 1.0L);
  const auto u = propagator(h, std::numbers::pi_v<long double>).matrix;
  const auto id = CMatrix<long double>::Identity(2, 2);
  EXPECT_LE((u + id).cwiseAbs().maxCoeff(), 1e-15L);
}

// Independent route: Eigen's Pade scaling-and-squaring matrix exponential.
TEST(Propagator, AgreesWithScalingAndSquaringOnRandomHermitian) {
  std::mt19937_64 rng(20261015);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 20; ++trial) {
    CMatrix<double> a(18, 18);
    for (Eigen::Index r = 0; r < 18; ++r) {
      for (Eigen::Index c = 0; c < 18; ++c) a(r, c) = C(normal(rng), normal(rng));
    }
    const CMatrix<double> h = (a + a.adjoint()) / 2;
    const double t = 0.1 + 2.0 * trial / 20;
    const CMatrix<double> reference = (CMatrix<double>(-kI * t * h)).exp();
    const CMatrix<double> u = propagator<double>(h, t);
    EXPECT_LE(max_diff(u, reference), 1e-10) << "trial " << trial;
    EXPECT_LE(unitarity_defect(u), 1e-12);
  }
}

TEST(IdealJump, MovesALonePhotonWithMinusI) {
  const auto b = enumerate_sector(2, 2, 1);
  const auto u = ideal_jump<double>(b, 0, 1).matrix;
  const BasisState from{{1, 0}, {0, 0}}, to{{0, 1}, {0, 0}};
  EXPECT_NEAR(std::abs(u(b->index_of(to), b->index_of(from)) - (-kI)), 0.0,
              1e-12);
  // States without photons in the pair are untouched.
  const auto atoms = b->index_of({{0, 0}, {1, 0}});
  EXPECT_NEAR(std::abs(u(atoms, atoms) - 1.0), 0.0, 1e-12);
  // Two jumps: (-i)^2 = -1 on the one-photon subspace.
  const CMatrix<double> twice = u * u;
  EXPECT_NEAR(std::abs(twice(b->index_of(from), b->index_of(from)) + 1.0), 0.0,
              1e-12);
}

TEST(IdealJump, WithoutPhotonsIsIdentity) {
  const auto b = enumerate_sector(2, 2, 2);
  const auto u = ideal_jump<double>(b, 0, 1).matrix;
  const auto k = b->index_of({{0, 0}, {1, 1}});
  EXPECT_NEAR(std::abs(u(k, k) - 1.0), 0.0, 1e-12);
}

Segment<double> timed(const Operator<double>& h, double t) {
  Segment<double> s;
  s.hamiltonian = h;
  s.duration = t;
  s.descriptor = "test";
  return s;
}

TEST(Evolve, EmptyScheduleLeavesStateUnchanged) {
  const auto b = enumerate_sector(3, 2, 2);
  const auto psi = StateVector<double>::basis_vector(b, encode_logical(0, 1));
  auto [out, traj] = evolve(psi, std::vector<Segment<double>>{});
  EXPECT_EQ(out.amplitudes, psi.amplitudes);
  EXPECT_TRUE(traj.checkpoints.empty());
}

TEST(Evolve, SemigroupProperty) {
  const auto b = enumerate_sector(3, 2, 2);
  const auto h = build_jc_interaction<double>(b, 1.0) +
                 build_hop<double>(b, kCavityAux, kCavityY, 0.4);
  const auto psi = StateVector<double>::basis_vector(b, encode_logical(1, 0));
  const auto [split, traj] = evolve(psi, {timed(h, 0.37), timed(h, 1.21)});
  const auto [joint, _] = evolve(psi, {timed(h, 1.58)});
  EXPECT_LE((split.amplitudes - joint.amplitudes).cwiseAbs().maxCoeff(), 1e-12);
  ASSERT_EQ(traj.checkpoints.size(), 2u);
  EXPECT_DOUBLE_EQ(traj.checkpoints[1].time, 1.58);
  EXPECT_LE(traj.max_energy_drift(), 1e-12);
  EXPECT_LE(traj.max_norm_defect(), 1e-12);
  EXPECT_LE(traj.max_unitarity_defect(), 1e-12);
}

TEST(Evolve, HopOnlyWindowTransfersPhotonWithMinusI) {
  const auto b = enumerate_sector(2, 2, 1);
  const double nu = 250.0;
  const auto h = build_hop<double>(b, 0, 1, nu);
  const BasisState from{{1, 0}, {0, 0}}, to{{0, 1}, {0, 0}};
  const auto psi = StateVector<double>::basis_vector(b, from);
  const auto [out, _] = evolve(psi, {timed(h, pi / (2 * nu))});
  EXPECT_LE(std::abs(basis_state_amplitude(out, to) - (-kI)), 1e-10);
}

TEST(Evolve, RejectsMismatchedBasis) {
  const auto b2 = enumerate_sector(3, 2, 2);
  const auto b1 = enumerate_sector(3, 2, 1);
  const auto psi = StateVector<double>::basis_vector(b2, encode_logical(0, 0));
  EXPECT_THROW(evolve(psi, {timed(build_jc_interaction<double>(b1, 1.0), 1.0)}),
               PreconditionError);
}

TEST(Evolve, EnergyIsConservedAlongASegment) {
  const auto b = enumerate_sector(3, 2, 2);
  const auto h = build_jc_interaction<double>(b, 1.0) +
                 build_hop<double>(b, kCavityAux, kCavityX, 7.0);
  StateVector<double> psi{b, CVector<double>::Zero(b->size())};
  for (int q = 0; q < 4; ++q) {
    psi.amplitudes(b->index_of(encode_logical(q >> 1, q & 1))) = 0.5;
  }
  const auto [out, traj] = evolve(psi, {timed(h, 3.3), timed(h, 0.01)});
  EXPECT_LE(traj.max_energy_drift(), 1e-12);
}

TEST(Trajectory, CsvRoundTrip) {
  const auto b = enumerate_sector(1, 2, 1);
  const auto h = build_jc_interaction<double>(b, 1.0);
  const auto psi = StateVector<double>::basis_vector(b, {{1}, {0}});
  const auto [out, traj] = evolve(psi, {timed(h, 0.3)});
  std::stringstream ss;
  write_trajectory_csv(ss, traj, &psi);
  const Table t = read_table(ss);
  ASSERT_EQ(t.rows.size(), 4u);
  EXPECT_EQ(t.at(0, "kind"), "initial");
  EXPECT_EQ(t.at(2, "state"), "ph0_at1");
  const auto a = out.amplitudes(0);
  EXPECT_EQ(t.number(2, "re"), a.real());
  EXPECT_EQ(t.number(2, "im"), a.imag());
}

}  // namespace
}  // namespace jchgate

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

#include "jchgate/hilbert.hpp"

namespace jchgate {
namespace {

// Brute force: walk all (n_max+1)^K * 2^K product states and count those
// with the requested total.
std::size_t brute_force_count(int cavities, int n_max, int total) {
  const int per_cavity = 2 * (n_max + 1);
  long combos = 1;
  for (int c = 0; c < cavities; ++c) combos *= per_cavity;
  std::size_t count = 0;
  for (long code = 0; code < combos; ++code) {
    long rest = code;
    int sum = 0;
    for (int c = 0; c < cavities; ++c) {
      const int local = static_cast<int>(rest % per_cavity);
      rest /= per_cavity;
      sum += local / 2 + local % 2;  // photons + atom bit
    }
    if (sum == total) ++count;
  }
  return count;
}

TEST(Hilbert, SingleCavitySectors) {
  const auto one = enumerate_sector(1, 2, 1);
  ASSERT_EQ(one->size(), 2u);
  EXPECT_TRUE(one->contains(BasisState{{1}, {0}}));
  EXPECT_TRUE(one->contains(BasisState{{0}, {1}}));

  const auto vac = enumerate_sector(1, 2, 0);
  ASSERT_EQ(vac->size(), 1u);
  EXPECT_EQ((*vac)[0], (BasisState{{0}, {0}}));
}

TEST(Hilbert, GateSectorHasEighteenStates) {
  EXPECT_EQ(brute_force_count(3, 2, 2), 18u);
  EXPECT_EQ(enumerate_sector(3, 2, 2)->size(), 18u);
}

TEST(Hilbert, SectorSizesMatchBruteForce) {
  for (int k = 1; k <= 3; ++k) {
    for (int n_max = 0; n_max <= 2; ++n_max) {
      for (int total = 0; total <= 3; ++total) {
        EXPECT_EQ(enumerate_sector(k, n_max, total)->size(),
                  brute_force_count(k, n_max, total))
            << "K=" << k << " n_max=" << n_max << " N=" << total;
      }
    }
  }
}

TEST(Hilbert, IndexIsABijectionAndOrderIsLexicographic) {
  const auto b = enumerate_sector(3, 2, 2);
  for (std::size_t k = 0; k < b->size(); ++k) {
    EXPECT_EQ(b->index_of((*b)[k]), k);
    EXPECT_EQ((*b)[k].total_excitation(), 2);
    if (k > 0) EXPECT_LT((*b)[k - 1], (*b)[k]);
  }
  // Deterministic: a second enumeration yields the same order.
  EXPECT_EQ(enumerate_sector(3, 2, 2)->states(), b->states());
}

TEST(Hilbert, EncodeLogical) {
  EXPECT_EQ(encode_logical(0, 1), (BasisState{{0, 1, 0}, {1, 0, 0}}));
  EXPECT_EQ(encode_logical(0, 0), (BasisState{{0, 0, 0}, {1, 1, 0}}));
  EXPECT_EQ(encode_logical(1, 1), (BasisState{{1, 1, 0}, {0, 0, 0}}));
  EXPECT_THROW(encode_logical(2, 0), std::invalid_argument);
}

TEST(Hilbert, LogicalImagesAreDistinctStatesOfTheGateSector) {
  const auto b = enumerate_sector(3, 2, 2);
  std::vector<std::size_t> idx;
  for (int q = 0; q < 4; ++q) {
    const auto s = encode_logical(q >> 1, q & 1);
    EXPECT_EQ(s.total_excitation(), 2);
    idx.push_back(b->index_of(s));
  }
  std::sort(idx.begin(), idx.end());
  EXPECT_EQ(std::unique(idx.begin(), idx.end()), idx.end());
}

TEST(Hilbert, Amplitudes) {
  const auto b = enumerate_sector(3, 2, 2);
  const auto s00 = encode_logical(0, 0);
  const auto s11 = encode_logical(1, 1);
  const auto psi = StateVector<double>::basis_vector(b, s00);
  EXPECT_EQ(basis_state_amplitude(psi, s00), std::complex<double>(1));
  EXPECT_EQ(basis_state_amplitude(psi, s11), std::complex<double>(0));

  StateVector<double> sup{b, CVector<double>::Zero(b->size())};
  sup.amplitudes(b->index_of(s00)) = 1 / std::sqrt(2.0);
  sup.amplitudes(b->index_of(s11)) = 1 / std::sqrt(2.0);
  EXPECT_NEAR(sup.norm(), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(basis_state_amplitude(sup, s11).real(), 1 / std::sqrt(2.0));

  const BasisState outside{{1, 1, 1}, {0, 0, 0}};
  EXPECT_THROW(basis_state_amplitude(psi, outside), InvalidQuery);
}

TEST(Hilbert, EmptySectorIsValid) {
  // One cavity with n_max = 0 cannot hold two excitations.
  EXPECT_TRUE(enumerate_sector(1, 0, 2)->empty());
}

TEST(Hilbert, DumpHasOneLinePerState) {
  std::ostringstream os;
  enumerate_sector(1, 2, 1)->dump(os);
  EXPECT_EQ(os.str(), "# cavities=1 n_max=2 excitation=1\n0 0 | 1\n1 1 | 0\n");
}

}  // namespace
}  // namespace jchgate

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

#include "jchgate/jch.hpp"

#include <numbers>

namespace jchgate {

double mode_profile(const CavityGeometry& geom) {
  if (!(geom.length > 0)) throw DomainError("cavity length must be positive");
  if (geom.x < 0 || geom.x > geom.length) {
    throw DomainError("atom position outside [0, L]");
  }
  return std::sin(std::numbers::pi * geom.x / geom.length);
}

double coupling_from_geometry(const PhysicalParams& params,
                              const CavityGeometry& geom) {
  if (!(geom.volume > 0)) throw DomainError("mode volume must be positive");
  if (!(params.omega > 0) || !(params.hbar > 0)) {
    throw DomainError("omega and hbar must be positive");
  }
  if (geom.n_half_waves < 1 || !geom.resonant()) {
    throw DomainError("cavity length must equal n * lambda / 2");
  }
  return std::sqrt(params.hbar * params.omega / geom.volume) * geom.dipole *
         mode_profile(geom);
}

}  // namespace jchgate

// Copyright 2026 The qcforensics Authors
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

#pragma once

#include <optional>

#include "qcf/circuit.hpp"

namespace qcf {

/// ZYZ Euler angles of a 2x2 unitary: U ~ Rz(phi) * Ry(theta) * Rz(lambda)
/// up to global phase, with theta in [0, pi].
struct ZyzAngles {
  double theta = 0.0;
  double phi = 0.0;
  double lambda = 0.0;
};

ZyzAngles zyz_decompose(const Eigen::Matrix2cd& u);

/// Canonical single-qubit form of an arbitrary 2x2 unitary on `qubit`:
/// nothing if the matrix is the identity up to phase, u1(phi+lambda) if
/// theta ~ 0, u2(phi, lambda) if theta ~ pi/2, u3 otherwise.
std::optional<Gate> canonical_1q_gate(const Eigen::Matrix2cd& u, int qubit,
                                      double tol = 1e-10);

}  // namespace qcf

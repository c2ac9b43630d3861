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

#include "qcf/euler.hpp"

#include <cmath>

namespace qcf {

ZyzAngles zyz_decompose(const Eigen::Matrix2cd& u) {
  // Strip the global phase so we work in SU(2):
  // V = [[ cos(t/2) e^{-i(phi+lam)/2}, -sin(t/2) e^{-i(phi-lam)/2} ],
  //      [ sin(t/2) e^{ i(phi-lam)/2},  cos(t/2) e^{ i(phi+lam)/2} ]]
  const Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  const Complex scale = std::pow(det, -0.5);
  Eigen::Matrix2cd v = scale * u;

  ZyzAngles a;
  a.theta = 2.0 * std::atan2(std::abs(v(1, 0)), std::abs(v(0, 0)));
  const double sum = 2.0 * std::arg(v(1, 1));   // phi + lambda (when cos != 0)
  const double diff = 2.0 * std::arg(v(1, 0));  // phi - lambda (when sin != 0)
  if (std::abs(v(0, 0)) < 1e-12) {
    // theta ~ pi: only phi - lambda is defined.
    a.phi = diff;
    a.lambda = 0.0;
  } else if (std::abs(v(1, 0)) < 1e-12) {
    // theta ~ 0: only phi + lambda is defined.
    a.phi = sum;
    a.lambda = 0.0;
  } else {
    a.phi = 0.5 * (sum + diff);
    a.lambda = 0.5 * (sum - diff);
  }
  return a;
}

std::optional<Gate> canonical_1q_gate(const Eigen::Matrix2cd& u, int qubit,
                                      double tol) {
  if (is_identity_up_to_phase(u, tol)) return std::nullopt;
  const ZyzAngles a = zyz_decompose(u);
  if (std::abs(a.theta) < tol) {
    return Gate::make(GateKind::U1, {qubit}, {a.phi + a.lambda});
  }
  if (std::abs(a.theta - M_PI / 2.0) < tol) {
    return Gate::make(GateKind::U2, {qubit}, {a.phi, a.lambda});
  }
  return Gate::make(GateKind::U3, {qubit}, {a.theta, a.phi, a.lambda});
}

}  // namespace qcf

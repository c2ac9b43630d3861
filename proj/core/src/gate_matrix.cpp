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

#include <cmath>
#include <stdexcept>

#include "qcf/circuit.hpp"

namespace qcf {

namespace {

const Complex kI(0.0, 1.0);

Eigen::Matrix2cd u3_matrix(double theta, double phi, double lambda) {
  // u3(theta, phi, lambda) == Rz(phi) * Ry(theta) * Rz(lambda) up to phase.
  Eigen::Matrix2cd m;
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  m << c, -std::exp(kI * lambda) * s,
      std::exp(kI * phi) * s, std::exp(kI * (phi + lambda)) * c;
  return m;
}

Eigen::Matrix2cd base_1q(GateKind k, const std::vector<double>& p) {
  Eigen::Matrix2cd m;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  switch (k) {
    case GateKind::U1:
      m << 1.0, 0.0, 0.0, std::exp(kI * p[0]);
      return m;
    case GateKind::U2:
      return u3_matrix(M_PI / 2.0, p[0], p[1]);
    case GateKind::U3:
      return u3_matrix(p[0], p[1], p[2]);
    case GateKind::Rz:
      m << std::exp(-kI * p[0] / 2.0), 0.0, 0.0, std::exp(kI * p[0] / 2.0);
      return m;
    case GateKind::Rx: {
      const double c = std::cos(p[0] / 2.0), s = std::sin(p[0] / 2.0);
      m << c, -kI * s, -kI * s, c;
      return m;
    }
    case GateKind::Ry: {
      const double c = std::cos(p[0] / 2.0), s = std::sin(p[0] / 2.0);
      m << c, -s, s, c;
      return m;
    }
    case GateKind::X:
      m << 0, 1, 1, 0;
      return m;
    case GateKind::Y:
      m << 0.0, -kI, kI, 0.0;
      return m;
    case GateKind::Z:
      m << 1, 0, 0, -1;
      return m;
    case GateKind::H:
      m << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;
      return m;
    case GateKind::S:
      m << 1.0, 0.0, 0.0, kI;
      return m;
    case GateKind::Sdg:
      m << 1.0, 0.0, 0.0, -kI;
      return m;
    case GateKind::T:
      m << 1.0, 0.0, 0.0, std::exp(kI * (M_PI / 4.0));
      return m;
    case GateKind::Tdg:
      m << 1.0, 0.0, 0.0, std::exp(-kI * (M_PI / 4.0));
      return m;
    default:
      throw std::logic_error("not a named 1q kind");
  }
}

// Controlled-U with the control on the *first listed* qubit. Little-endian:
// basis index = control_bit + 2 * target_bit.
Eigen::Matrix4cd controlled(const Eigen::Matrix2cd& u) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = 1.0;
  m(2, 2) = 1.0;
  m(1, 1) = u(0, 0);
  m(1, 3) = u(0, 1);
  m(3, 1) = u(1, 0);
  m(3, 3) = u(1, 1);
  return m;
}

Eigen::Matrix4cd base_2q(GateKind k, const std::vector<double>& p) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  switch (k) {
    case GateKind::Cx:
      return controlled(base_1q(GateKind::X, {}));
    case GateKind::Cy:
      return controlled(base_1q(GateKind::Y, {}));
    case GateKind::Cz:
      return controlled(base_1q(GateKind::Z, {}));
    case GateKind::Swap:
      m(0, 0) = 1.0;
      m(1, 2) = 1.0;
      m(2, 1) = 1.0;
      m(3, 3) = 1.0;
      return m;
    case GateKind::Rzz: {
      const Complex a = std::exp(-kI * p[0] / 2.0);
      const Complex b = std::exp(kI * p[0] / 2.0);
      m(0, 0) = a;
      m(1, 1) = b;
      m(2, 2) = b;
      m(3, 3) = a;
      return m;
    }
    default:
      throw std::logic_error("not a named 2q kind");
  }
}

}  // namespace

Eigen::MatrixXcd gate_matrix(const Gate& g) {
  if (is_opaque(g.kind)) return *g.matrix;
  if (g.arity() == 1) return base_1q(g.kind, g.params);
  return base_2q(g.kind, g.params);
}

bool is_identity_up_to_phase(const Eigen::MatrixXcd& u, double tol) {
  const double d = static_cast<double>(u.rows());
  return std::abs(u.trace()) >= d * (1.0 - tol);
}

}  // namespace qcf

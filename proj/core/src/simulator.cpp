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

#include "qcf/simulator.hpp"

#include <stdexcept>

namespace qcf {

namespace {

constexpr int kMaxSimQubits = 14;
constexpr int kMaxUnitaryQubits = 10;

void apply_1q(Eigen::VectorXcd& psi, const Eigen::Matrix2cd& m, int q) {
  const std::size_t bit = std::size_t{1} << q;
  const std::size_t dim = psi.size();
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & bit) continue;
    const Complex a0 = psi[i];
    const Complex a1 = psi[i | bit];
    psi[i] = m(0, 0) * a0 + m(0, 1) * a1;
    psi[i | bit] = m(1, 0) * a0 + m(1, 1) * a1;
  }
}

// Little-endian local index: bit of the first listed qubit is the low bit.
void apply_2q(Eigen::VectorXcd& psi, const Eigen::Matrix4cd& m, int q0, int q1) {
  const std::size_t b0 = std::size_t{1} << q0;
  const std::size_t b1 = std::size_t{1} << q1;
  const std::size_t dim = psi.size();
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & b0) || (i & b1)) continue;
    const std::size_t i0 = i;
    const std::size_t i1 = i | b0;
    const std::size_t i2 = i | b1;
    const std::size_t i3 = i | b0 | b1;
    const Complex a0 = psi[i0], a1 = psi[i1], a2 = psi[i2], a3 = psi[i3];
    psi[i0] = m(0, 0) * a0 + m(0, 1) * a1 + m(0, 2) * a2 + m(0, 3) * a3;
    psi[i1] = m(1, 0) * a0 + m(1, 1) * a1 + m(1, 2) * a2 + m(1, 3) * a3;
    psi[i2] = m(2, 0) * a0 + m(2, 1) * a1 + m(2, 2) * a2 + m(2, 3) * a3;
    psi[i3] = m(3, 0) * a0 + m(3, 1) * a1 + m(3, 2) * a2 + m(3, 3) * a3;
  }
}

}  // namespace

Eigen::VectorXcd simulate(const Circuit& c, const Eigen::VectorXcd& initial) {
  if (c.num_qubits > kMaxSimQubits) {
    throw std::invalid_argument("simulate: circuit exceeds the 14-qubit cap");
  }
  const std::size_t dim = std::size_t{1} << c.num_qubits;
  if (static_cast<std::size_t>(initial.size()) != dim) {
    throw std::invalid_argument("simulate: statevector dimension mismatch");
  }
  Eigen::VectorXcd psi = initial;
  for (const Gate& g : c.gates) {
    const Eigen::MatrixXcd m = gate_matrix(g);
    if (g.arity() == 1) {
      apply_1q(psi, m, g.qubits[0]);
    } else {
      apply_2q(psi, m, g.qubits[0], g.qubits[1]);
    }
  }
  return psi;
}

Eigen::MatrixXcd full_unitary(const Circuit& c) {
  if (c.num_qubits > kMaxUnitaryQubits) {
    throw std::invalid_argument("full_unitary: circuit exceeds the 10-qubit cap");
  }
  const std::size_t dim = std::size_t{1} << c.num_qubits;
  Eigen::MatrixXcd u(dim, dim);
  Eigen::VectorXcd basis = Eigen::VectorXcd::Zero(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    basis.setZero();
    basis[k] = 1.0;
    u.col(k) = simulate(c, basis);
  }
  return u;
}

PhaseEquivalence compare_up_to_phase(const Circuit& a, const Circuit& b) {
  if (a.num_qubits != b.num_qubits) {
    throw std::invalid_argument("compare_up_to_phase: qubit count mismatch");
  }
  const Eigen::MatrixXcd ua = full_unitary(a);
  const Eigen::MatrixXcd ub = full_unitary(b);

  // Align the global phase on the largest-magnitude entry of U_b.
  Eigen::Index r = 0, c = 0;
  ub.cwiseAbs().maxCoeff(&r, &c);
  PhaseEquivalence out;
  const Complex ratio = ua(r, c) / ub(r, c);
  const double mag = std::abs(ratio);
  if (mag < 1e-12) {
    out.max_deviation = (ua - ub).cwiseAbs().maxCoeff();
    return out;
  }
  const Complex phase = ratio / mag;
  out.max_deviation = (ua - phase * ub).cwiseAbs().maxCoeff();
  return out;
}

bool equivalent_up_to_phase(const Circuit& a, const Circuit& b, double tol) {
  PhaseEquivalence r = compare_up_to_phase(a, b);
  return r.max_deviation < tol;
}

}  // namespace qcf

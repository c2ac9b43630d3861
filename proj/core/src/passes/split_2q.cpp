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

#include <Eigen/SVD>

#include "qcf/euler.hpp"
#include "qcf/passes.hpp"

namespace qcf {

namespace {

constexpr double kSchmidtTol = 1e-9;

// Operator-Schmidt reshuffle: R[2*i2+j2, 2*i1+j1] = M[i1+2*i2, j1+2*j2],
// so that rank-1 R means M = A (x) B with A on the second listed qubit and
// B on the first (little-endian).
Eigen::Matrix4cd reshuffle(const Eigen::Matrix4cd& m) {
  Eigen::Matrix4cd r;
  for (int i2 = 0; i2 < 2; ++i2) {
    for (int j2 = 0; j2 < 2; ++j2) {
      for (int i1 = 0; i1 < 2; ++i1) {
        for (int j1 = 0; j1 < 2; ++j1) {
          r(2 * i2 + j2, 2 * i1 + j1) = m(i1 + 2 * i2, j1 + 2 * j2);
        }
      }
    }
  }
  return r;
}

}  // namespace

// Replaces every 2q gate of operator-Schmidt rank 1 with its two 1q factors
// in u1/u2/u3 canonical form.
Circuit split_2q_unitaries(const Circuit& c) {
  Circuit out(c.num_qubits, c.name);
  for (const Gate& g : c.gates) {
    if (!g.is_two_qubit()) {
      out.append(g);
      continue;
    }
    const Eigen::Matrix4cd m = gate_matrix(g);
    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(reshuffle(m),
                                           Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::Vector4d sv = svd.singularValues();
    int significant = 0;
    for (int i = 0; i < 4; ++i) significant += sv[i] > kSchmidtTol ? 1 : 0;
    if (significant != 1) {
      out.append(g);
      continue;
    }

    const double root = std::sqrt(sv[0]);
    Eigen::Matrix2cd a, b;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        a(i, j) = root * svd.matrixU()(2 * i + j, 0);
        b(i, j) = root * std::conj(svd.matrixV()(2 * i + j, 0));
      }
    }
    // For unitary M the factors obey A^H A = c I; rebalance so each factor
    // is itself unitary without changing the product.
    const double scale = std::sqrt((a.adjoint() * a).trace().real() / 2.0);
    a /= scale;
    b *= scale;

    if (auto gb = canonical_1q_gate(b, g.qubits[0])) out.append(*gb);
    if (auto ga = canonical_1q_gate(a, g.qubits[1])) out.append(*ga);
  }
  return out;
}

}  // namespace qcf

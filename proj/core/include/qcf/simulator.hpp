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

#include "qcf/circuit.hpp"

namespace qcf {

/// Dense statevector simulation, little-endian basis ordering (qubit 0 is
/// the least significant index bit). Capped at 14 qubits.
Eigen::VectorXcd simulate(const Circuit& c, const Eigen::VectorXcd& initial);

/// Full 2^n x 2^n unitary of the circuit, columns simulate(c, e_k).
/// Capped at 10 qubits.
Eigen::MatrixXcd full_unitary(const Circuit& c);

/// Result of an up-to-global-phase comparison of two circuits.
struct PhaseEquivalence {
  bool equivalent = false;
  double max_deviation = 0.0;  // max elementwise |U_a - e^{i phi} U_b|
};

PhaseEquivalence compare_up_to_phase(const Circuit& a, const Circuit& b);

/// True iff the circuits' unitaries agree up to a global phase within tol.
bool equivalent_up_to_phase(const Circuit& a, const Circuit& b, double tol);

}  // namespace qcf

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

#include <cstdint>
#include <vector>

#include "qcf/circuit.hpp"

namespace qcf {

/// Stabilizer tableau of a Clifford on k qubits: conjugation images of the
/// generators X_0..X_{k-1}, Z_0..Z_{k-1} as signed Pauli strings. Determines
/// the Clifford up to global phase.
class Tableau {
 public:
  explicit Tableau(int num_qubits);

  int num_qubits() const { return k_; }

  /// Applies the conjugation action of a Clifford gate (kinds h, s, sdg, x,
  /// y, z, cx, cy, cz, swap; qubit indices local to this tableau).
  void apply(GateKind kind, const std::vector<int>& qubits);

  bool is_identity() const;

  /// Gaussian-elimination synthesis: a gate list over {h, s, cx} (local
  /// qubit indices) implementing the INVERSE of the accumulated Clifford,
  /// up to global phase. Accumulate a circuit in reverse order with each
  /// gate inverted to synthesize the circuit itself.
  std::vector<Gate> synthesize_inverse() const;

 private:
  struct PauliRow {
    std::vector<std::uint8_t> x;
    std::vector<std::uint8_t> z;
    bool sign = false;
  };

  void apply_h(int q);
  void apply_s(int q);
  void apply_x(int q);
  void apply_z(int q);
  void apply_y(int q);
  void apply_cx(int c, int t);

  int k_;
  std::vector<PauliRow> rows_;  // 2k rows: X images then Z images
};

constexpr bool is_clifford_kind(GateKind k) {
  switch (k) {
    case GateKind::H:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::Cx:
    case GateKind::Cy:
    case GateKind::Cz:
    case GateKind::Swap:
      return true;
    default:
      return false;
  }
}

}  // namespace qcf

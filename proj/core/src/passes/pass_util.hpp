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

#include <vector>

#include "qcf/circuit.hpp"

namespace qcf::detail {

/// Index of the first gate after `i` touching any qubit in `qs`, or -1.
inline int next_touch(const std::vector<Gate>& gates, int i,
                      const std::vector<int>& qs) {
  for (int j = i + 1; j < static_cast<int>(gates.size()); ++j) {
    for (int q : qs) {
      for (int gq : gates[j].qubits) {
        if (q == gq) return j;
      }
    }
  }
  return -1;
}

/// Index of the last gate before `i` touching any qubit in `qs`, or -1.
inline int prev_touch(const std::vector<Gate>& gates, int i,
                      const std::vector<int>& qs) {
  for (int j = i - 1; j >= 0; --j) {
    for (int q : qs) {
      for (int gq : gates[j].qubits) {
        if (q == gq) return j;
      }
    }
  }
  return -1;
}

/// Commutation role of a gate on one of its wires.
enum class WireRole { Z, X, None };

/// Role of gate `g` on wire `q` under the commutation rule set: Z-family
/// phase-type gates and cz/rzz/cx-control commute on a shared wire, x/rx
/// and cx-target commute on a shared wire, everything else blocks.
inline WireRole wire_role(const Gate& g, int q) {
  switch (g.kind) {
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::Rz:
    case GateKind::U1:
    case GateKind::Cz:
    case GateKind::Rzz:
      return WireRole::Z;
    case GateKind::X:
    case GateKind::Rx:
      return WireRole::X;
    case GateKind::Cx:
      return g.qubits[0] == q ? WireRole::Z : WireRole::X;
    case GateKind::Cy:
      return g.qubits[0] == q ? WireRole::Z : WireRole::None;
    default:
      return WireRole::None;
  }
}

/// True for the 1q phase-type kinds that merge into a single rz.
inline bool is_phase_1q(GateKind k) {
  switch (k) {
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::Rz:
    case GateKind::U1:
      return true;
    default:
      return false;
  }
}

/// Equivalent rz angle of a 1q phase-type gate (up to global phase).
inline double phase_angle(const Gate& g) {
  switch (g.kind) {
    case GateKind::Z:
      return M_PI;
    case GateKind::S:
      return M_PI / 2.0;
    case GateKind::Sdg:
      return -M_PI / 2.0;
    case GateKind::T:
      return M_PI / 4.0;
    case GateKind::Tdg:
      return -M_PI / 4.0;
    default:
      return g.params[0];  // rz, u1
  }
}

}  // namespace qcf::detail

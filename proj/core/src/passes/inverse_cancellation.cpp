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

#include <optional>

#include "passes/pass_util.hpp"
#include "qcf/passes.hpp"

namespace qcf {

namespace {

// Cancellation table: self-inverse kinds plus the (s, sdg) and (t, tdg) pairs.
std::optional<GateKind> inverse_partner(GateKind k) {
  switch (k) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::Cx:
    case GateKind::Cy:
    case GateKind::Cz:
    case GateKind::Swap:
      return k;
    case GateKind::S:
      return GateKind::Sdg;
    case GateKind::Sdg:
      return GateKind::S;
    case GateKind::T:
      return GateKind::Tdg;
    case GateKind::Tdg:
      return GateKind::T;
    default:
      return std::nullopt;
  }
}

}  // namespace

// Removes (g1, g2) pairs where g2 is the nearest later gate sharing qubits
// with g1, acts on the identical qubit tuple, and is g1's inverse; iterates
// to fixpoint.
Circuit inverse_cancellation(const Circuit& c) {
  std::vector<Gate> gates = c.gates;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < static_cast<int>(gates.size()); ++i) {
      const auto partner = inverse_partner(gates[i].kind);
      if (!partner) continue;
      const int j = detail::next_touch(gates, i, gates[i].qubits);
      if (j < 0) continue;
      if (gates[j].kind != *partner || gates[j].qubits != gates[i].qubits) continue;
      gates.erase(gates.begin() + j);
      gates.erase(gates.begin() + i);
      changed = true;
      --i;  // re-examine the gate now occupying position i
    }
  }

  Circuit out(c.num_qubits, c.name);
  for (Gate& g : gates) out.append(std::move(g));
  return out;
}

}  // namespace qcf

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

#include "qcf/random_circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qcf/rng.hpp"

namespace qcf {

namespace {

// Slot type weights per partition step. Two-qubit slots consume two qubits,
// so the per-qubit two-qubit fraction works out to 2*0.3 / (2*0.3+0.5+0.2).
constexpr double kTwoQubitSlotProb = 0.3;
constexpr double kOneQubitSlotProb = 0.5;

struct Slot {
  std::vector<int> qubits;
  GateKind kind;
  std::vector<double> params;
};

}  // namespace

std::vector<GateKind> GenSpec::default_palette() {
  return {GateKind::X,  GateKind::Y,   GateKind::Z,  GateKind::H,
          GateKind::S,  GateKind::Sdg, GateKind::T,  GateKind::Tdg,
          GateKind::Rx, GateKind::Ry,  GateKind::Rz, GateKind::U1,
          GateKind::U2, GateKind::U3,  GateKind::Cx, GateKind::Cz,
          GateKind::Swap, GateKind::Rzz};
}

Circuit random_circuit(const GenSpec& spec) {
  if (spec.depth < 1) throw std::invalid_argument("random_circuit: depth must be >= 1");
  if (spec.num_qubits < 1) throw std::invalid_argument("random_circuit: need at least one qubit");
  if (spec.palette.empty()) throw std::invalid_argument("random_circuit: empty palette");

  std::vector<GateKind> one_q, two_q;
  for (GateKind k : spec.palette) {
    if (is_opaque(k)) throw std::invalid_argument("random_circuit: opaque kinds not drawable");
    (gate_arity(k) == 1 ? one_q : two_q).push_back(k);
  }
  if (!two_q.empty() && spec.num_qubits < 2) {
    throw std::invalid_argument("random_circuit: 2q palette needs >= 2 qubits");
  }
  if (one_q.empty() && two_q.empty()) {
    throw std::invalid_argument("random_circuit: palette has no usable kinds");
  }

  RngStream rng(spec.seed);
  Circuit c(spec.num_qubits, "random");

  std::vector<int> pool(spec.num_qubits);
  std::vector<Slot> slots;
  for (int layer = 0; layer < spec.depth; ++layer) {
    for (int q = 0; q < spec.num_qubits; ++q) pool[q] = q;
    rng.shuffle(pool);
    slots.clear();

    std::size_t next = 0;
    while (next < pool.size()) {
      const std::size_t remaining = pool.size() - next;
      const double r = rng.uniform01();
      Slot slot;
      if (!two_q.empty() && remaining >= 2 && r < kTwoQubitSlotProb) {
        slot.qubits = {pool[next], pool[next + 1]};
        next += 2;
        slot.kind = two_q[rng.next_below(two_q.size())];
      } else if (!one_q.empty() && r < kTwoQubitSlotProb + kOneQubitSlotProb) {
        slot.qubits = {pool[next]};
        next += 1;
        slot.kind = one_q[rng.next_below(one_q.size())];
      } else {
        next += 1;  // idle qubit
        continue;
      }
      for (int p = 0; p < gate_param_count(slot.kind); ++p) {
        slot.params.push_back(rng.uniform(0.0, 2.0 * M_PI));
      }
      slots.push_back(std::move(slot));
    }

    std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
      return *std::min_element(a.qubits.begin(), a.qubits.end()) <
             *std::min_element(b.qubits.begin(), b.qubits.end());
    });
    for (Slot& s : slots) {
      c.append(Gate::make(s.kind, std::move(s.qubits), std::move(s.params)));
    }
  }
  return c;
}

}  // namespace qcf

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

#include "passes/pass_util.hpp"
#include "qcf/passes.hpp"

namespace qcf {

namespace {

using detail::WireRole;

// One wire sweep: merge the 1q phase gates inside each maximal Z-family
// commuting group into a single rz, and cancel x pairs inside each X-family
// group. Returns true if anything changed. `removed`/`rewrite` carry the
// edits back to the caller.
bool sweep_wire(const std::vector<Gate>& gates, int wire,
                std::vector<char>& removed,
                std::vector<std::optional<Gate>>& rewrite) {
  bool changed = false;
  std::vector<int> group;  // indices of gates in the current commuting group
  WireRole group_role = WireRole::None;

  auto flush = [&]() {
    if (group.size() >= 2) {
      if (group_role == WireRole::Z) {
        std::vector<int> phase_idx;
        for (int idx : group) {
          if (gates[idx].arity() == 1 && detail::is_phase_1q(gates[idx].kind)) {
            phase_idx.push_back(idx);
          }
        }
        if (phase_idx.size() >= 2) {
          double angle = 0.0;
          for (int idx : phase_idx) angle += detail::phase_angle(gates[idx]);
          for (int idx : phase_idx) removed[idx] = 1;
          // rz(angle) is the identity up to phase iff angle = 0 mod 2pi.
          if (std::abs(2.0 * std::cos(angle / 2.0)) < 2.0 * (1.0 - 1e-10)) {
            rewrite[phase_idx.front()] = Gate::make(GateKind::Rz, {wire}, {angle});
          }
          changed = true;
        }
      } else if (group_role == WireRole::X) {
        std::vector<int> x_idx;
        for (int idx : group) {
          if (gates[idx].kind == GateKind::X) x_idx.push_back(idx);
        }
        if (x_idx.size() >= 2) {
          for (int idx : x_idx) removed[idx] = 1;
          if (x_idx.size() % 2 == 1) {
            rewrite[x_idx.front()] = Gate::make(GateKind::X, {wire});
          }
          changed = true;
        }
      }
    }
    group.clear();
    group_role = WireRole::None;
  };

  for (int i = 0; i < static_cast<int>(gates.size()); ++i) {
    if (removed[i] || rewrite[i]) continue;  // edited this sweep; settle next round
    bool on_wire = false;
    for (int q : gates[i].qubits) on_wire |= q == wire;
    if (!on_wire) continue;
    const WireRole role = detail::wire_role(gates[i], wire);
    if (role == WireRole::None) {
      flush();
      continue;
    }
    if (role != group_role) flush();
    group_role = role;
    group.push_back(i);
  }
  flush();
  return changed;
}

// Cancels 2q self-inverse pairs (cx/cy/cz/swap) on identical qubit tuples
// when every in-between gate commutes with the pair on each shared wire.
bool cancel_2q_pairs(std::vector<Gate>& gates) {
  bool changed = false;
  for (int i = 0; i < static_cast<int>(gates.size()); ++i) {
    const Gate& g = gates[i];
    if (g.kind != GateKind::Cx && g.kind != GateKind::Cy &&
        g.kind != GateKind::Cz && g.kind != GateKind::Swap) {
      continue;
    }
    int j = -1;
    for (int cand = i + 1; cand < static_cast<int>(gates.size()); ++cand) {
      if (gates[cand].kind == g.kind && gates[cand].qubits == g.qubits) {
        bool commutes = true;
        for (std::size_t w = 0; w < g.qubits.size() && commutes; ++w) {
          const int wire = g.qubits[w];
          const WireRole need = detail::wire_role(g, wire);
          for (int mid = i + 1; mid < cand && commutes; ++mid) {
            bool touches = false;
            for (int q : gates[mid].qubits) touches |= q == wire;
            if (!touches) continue;
            if (need == WireRole::None || detail::wire_role(gates[mid], wire) != need) {
              commutes = false;
            }
          }
        }
        if (commutes) j = cand;
        break;  // nearest same-tuple candidate decides
      }
      // A non-matching gate that blocks on any shared wire ends the search.
      bool blocks = false;
      for (int wire : g.qubits) {
        bool touches = false;
        for (int q : gates[cand].qubits) touches |= q == wire;
        if (!touches) continue;
        const WireRole need = detail::wire_role(g, wire);
        if (need == WireRole::None || detail::wire_role(gates[cand], wire) != need) {
          blocks = true;
        }
      }
      if (blocks) break;
    }
    if (j >= 0) {
      gates.erase(gates.begin() + j);
      gates.erase(gates.begin() + i);
      changed = true;
      --i;
    }
  }
  return changed;
}

}  // namespace

Circuit commutative_cancellation(const Circuit& c) {
  std::vector<Gate> gates = c.gates;
  for (bool changed = true; changed;) {
    changed = false;

    std::vector<char> removed(gates.size(), 0);
    std::vector<std::optional<Gate>> rewrite(gates.size());
    for (int wire = 0; wire < c.num_qubits; ++wire) {
      changed |= sweep_wire(gates, wire, removed, rewrite);
    }
    std::vector<Gate> next;
    next.reserve(gates.size());
    for (int i = 0; i < static_cast<int>(gates.size()); ++i) {
      if (rewrite[i]) {
        next.push_back(std::move(*rewrite[i]));
      } else if (!removed[i]) {
        next.push_back(std::move(gates[i]));
      }
    }
    gates = std::move(next);

    changed |= cancel_2q_pairs(gates);
  }

  Circuit out(c.num_qubits, c.name);
  for (Gate& g : gates) out.append(std::move(g));
  return out;
}

}  // namespace qcf

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

#include <algorithm>

#include "passes/pass_util.hpp"
#include "qcf/passes.hpp"

namespace qcf {

namespace {

using detail::next_touch;
using detail::prev_touch;

bool is_1q_kind_on(const Gate& g, GateKind k, int q) {
  return g.kind == k && g.qubits[0] == q;
}

// cx(a,b) . rz(theta)@b . cx(a,b)  ->  rzz(theta)@(a,b)
bool try_rzz_template(std::vector<Gate>& gates, int i) {
  const Gate& first = gates[i];
  if (first.kind != GateKind::Cx) return false;
  const int a = first.qubits[0], b = first.qubits[1];
  const int j = next_touch(gates, i, first.qubits);
  if (j < 0 || !(gates[j].kind == GateKind::Rz && gates[j].qubits[0] == b)) return false;
  const int k = next_touch(gates, j, first.qubits);
  if (k < 0 || gates[k].kind != GateKind::Cx || gates[k].qubits != first.qubits) return false;

  const double theta = gates[j].params[0];
  gates.erase(gates.begin() + k);
  gates.erase(gates.begin() + j);
  gates[i] = Gate::make(GateKind::Rzz, {a, b}, {theta});
  return true;
}

// h(a) h(b) . cx(a,b) . h(a) h(b)  ->  cx(b,a)
bool try_cx_reversal_template(std::vector<Gate>& gates, int i) {
  const Gate& mid = gates[i];
  if (mid.kind != GateKind::Cx) return false;
  const int a = mid.qubits[0], b = mid.qubits[1];
  const int pa = prev_touch(gates, i, {a});
  const int pb = prev_touch(gates, i, {b});
  const int na = next_touch(gates, i, {a});
  const int nb = next_touch(gates, i, {b});
  if (pa < 0 || pb < 0 || na < 0 || nb < 0 || pa == pb || na == nb) return false;
  if (!is_1q_kind_on(gates[pa], GateKind::H, a) ||
      !is_1q_kind_on(gates[pb], GateKind::H, b) ||
      !is_1q_kind_on(gates[na], GateKind::H, a) ||
      !is_1q_kind_on(gates[nb], GateKind::H, b)) {
    return false;
  }

  std::vector<int> drop = {pa, pb, na, nb};
  std::sort(drop.begin(), drop.end(), std::greater<int>());
  gates[i] = Gate::make(GateKind::Cx, {b, a});
  for (int d : drop) gates.erase(gates.begin() + d);
  return true;
}

// t.t -> s and s.s -> z on the same qubit, adjacent.
bool try_square_template(std::vector<Gate>& gates, int i) {
  const Gate& g = gates[i];
  if (g.kind != GateKind::T && g.kind != GateKind::S) return false;
  const int q = g.qubits[0];
  const int j = next_touch(gates, i, g.qubits);
  if (j < 0 || !is_1q_kind_on(gates[j], g.kind, q)) return false;

  gates.erase(gates.begin() + j);
  gates[i] = Gate::make(g.kind == GateKind::T ? GateKind::S : GateKind::Z, {q});
  return true;
}

// h.x.h -> z and h.z.h -> x on the same qubit, adjacent.
bool try_conjugation_template(std::vector<Gate>& gates, int i) {
  const Gate& g = gates[i];
  if (g.kind != GateKind::H) return false;
  const int q = g.qubits[0];
  const int j = next_touch(gates, i, g.qubits);
  if (j < 0) return false;
  if (!is_1q_kind_on(gates[j], GateKind::X, q) &&
      !is_1q_kind_on(gates[j], GateKind::Z, q)) {
    return false;
  }
  const int k = next_touch(gates, j, g.qubits);
  if (k < 0 || !is_1q_kind_on(gates[k], GateKind::H, q)) return false;

  const GateKind result =
      gates[j].kind == GateKind::X ? GateKind::Z : GateKind::X;
  gates.erase(gates.begin() + k);
  gates.erase(gates.begin() + j);
  gates[i] = Gate::make(result, {q});
  return true;
}

}  // namespace

// Applies the rewrite templates left-to-right to fixpoint, using the same
// no-intervening-gate adjacency as inverse_cancellation.
Circuit template_optimization(const Circuit& c) {
  std::vector<Gate> gates = c.gates;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < static_cast<int>(gates.size()); ++i) {
      if (try_rzz_template(gates, i) || try_cx_reversal_template(gates, i) ||
          try_square_template(gates, i) || try_conjugation_template(gates, i)) {
        changed = true;
        break;  // rescan from the start after each rewrite
      }
    }
  }

  Circuit out(c.num_qubits, c.name);
  for (Gate& g : gates) out.append(std::move(g));
  return out;
}

}  // namespace qcf

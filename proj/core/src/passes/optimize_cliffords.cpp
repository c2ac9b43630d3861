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
#include <map>

#include "qcf/passes.hpp"
#include "qcf/tableau.hpp"

namespace qcf {

namespace {

GateKind inverse_clifford(GateKind k) {
  if (k == GateKind::S) return GateKind::Sdg;
  if (k == GateKind::Sdg) return GateKind::S;
  return k;  // the rest of the Clifford vocabulary is self-inverse
}

// Resynthesizes one all-Clifford segment; keeps the original gates unless
// the synthesized form is strictly shorter.
void process_segment(const Circuit& c, int begin, int end, Circuit& out) {
  const int len = end - begin;
  if (len < 2) {
    for (int i = begin; i < end; ++i) out.append(c.gates[i]);
    return;
  }

  std::map<int, int> local;  // circuit qubit -> segment-local index
  for (int i = begin; i < end; ++i) {
    for (int q : c.gates[i].qubits) local.emplace(q, 0);
  }
  int next_local = 0;
  std::vector<int> to_circuit(local.size());
  for (auto& [q, l] : local) {
    l = next_local;
    to_circuit[next_local] = q;
    ++next_local;
  }

  // Accumulate the segment inverse so synthesize_inverse yields the segment.
  Tableau tab(static_cast<int>(local.size()));
  for (int i = end - 1; i >= begin; --i) {
    const Gate& g = c.gates[i];
    std::vector<int> lq;
    for (int q : g.qubits) lq.push_back(local[q]);
    tab.apply(inverse_clifford(g.kind), lq);
  }

  const std::vector<Gate> synth = tab.synthesize_inverse();
  if (static_cast<int>(synth.size()) >= len) {
    for (int i = begin; i < end; ++i) out.append(c.gates[i]);
    return;
  }
  for (const Gate& g : synth) {
    std::vector<int> qs;
    for (int q : g.qubits) qs.push_back(to_circuit[q]);
    out.append(Gate::make(g.kind, std::move(qs)));
  }
}

}  // namespace

// Rewrites maximal contiguous all-Clifford segments through a stabilizer
// tableau when that makes them strictly shorter.
Circuit optimize_cliffords(const Circuit& c) {
  Circuit out(c.num_qubits, c.name);
  int i = 0;
  const int n = static_cast<int>(c.gates.size());
  while (i < n) {
    if (!is_clifford_kind(c.gates[i].kind)) {
      out.append(c.gates[i]);
      ++i;
      continue;
    }
    int j = i;
    while (j < n && is_clifford_kind(c.gates[j].kind)) ++j;
    process_segment(c, i, j, out);
    i = j;
  }
  return out;
}

}  // namespace qcf

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

#include "qcf/euler.hpp"
#include "qcf/passes.hpp"

namespace qcf {

namespace {

struct Run {
  int qubit;
  std::vector<int> indices;  // ascending gate-list positions
};

}  // namespace

// Every maximal run of consecutive 1q gates on one qubit is resynthesized:
// dropped when the product is the identity up to phase, otherwise replaced
// by a single u1/u2/u3 at the run's first position.
Circuit optimize_1q_gates(const Circuit& c) {
  std::vector<Run> runs;
  std::vector<int> open(c.num_qubits, -1);  // qubit -> open run index

  for (int i = 0; i < static_cast<int>(c.gates.size()); ++i) {
    const Gate& g = c.gates[i];
    if (g.arity() == 1) {
      int& r = open[g.qubits[0]];
      if (r < 0) {
        r = static_cast<int>(runs.size());
        runs.push_back({g.qubits[0], {}});
      }
      runs[r].indices.push_back(i);
    } else {
      for (int q : g.qubits) open[q] = -1;
    }
  }

  std::vector<char> in_run(c.gates.size(), 0);
  std::vector<std::optional<Gate>> replacement(c.gates.size());
  for (const Run& run : runs) {
    Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
    for (int idx : run.indices) u = Eigen::Matrix2cd(gate_matrix(c.gates[idx])) * u;
    for (int idx : run.indices) in_run[idx] = 1;
    replacement[run.indices.front()] = canonical_1q_gate(u, run.qubit);
  }

  Circuit out(c.num_qubits, c.name);
  for (int i = 0; i < static_cast<int>(c.gates.size()); ++i) {
    if (!in_run[i]) {
      out.append(c.gates[i]);
    } else if (replacement[i]) {
      out.append(*replacement[i]);
    }
  }
  return out;
}

}  // namespace qcf

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

/// Parameters for seeded random circuit generation.
///
/// Generation is layered: each of `depth` layers randomly partitions the
/// qubit line into disjoint one-qubit slots, two-qubit slots and idle
/// qubits, then draws a palette gate of matching arity per slot with angles
/// uniform in [0, 2pi). Gates within a layer are emitted sorted by lowest
/// qubit index. The same seed always produces the same circuit.
struct GenSpec {
  int num_qubits = 4;
  int depth = 50;  // number of generated layers
  std::uint64_t seed = 0;
  std::vector<GateKind> palette = default_palette();

  static std::vector<GateKind> default_palette();
};

Circuit random_circuit(const GenSpec& spec);

}  // namespace qcf

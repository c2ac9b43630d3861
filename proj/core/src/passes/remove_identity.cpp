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

#include "qcf/passes.hpp"

namespace qcf {

// Deletes every gate whose matrix is the identity up to global phase
// (|Tr U| >= d * (1 - 1e-10)).
Circuit remove_identity_equivalent(const Circuit& c) {
  Circuit out(c.num_qubits, c.name);
  for (const Gate& g : c.gates) {
    if (!is_identity_up_to_phase(gate_matrix(g), 1e-10)) {
      out.append(g);
    }
  }
  return out;
}

}  // namespace qcf

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

#include "qcf/passes.hpp"

namespace qcf {

namespace {

// kron(a, b) with b on the least significant bit.
Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

// 4x4 matrix of `g` embedded on the ordered pair (lo, hi), little-endian
// with lo as the least significant bit.
Eigen::Matrix4cd embed_on_pair(const Gate& g, int lo, int hi) {
  const Eigen::MatrixXcd m = gate_matrix(g);
  if (g.arity() == 1) {
    Eigen::Matrix2cd u = m;
    Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    return g.qubits[0] == lo ? kron2(id, u) : kron2(u, id);
  }
  Eigen::Matrix4cd u = m;
  if (g.qubits[0] == lo) return u;
  // Tuple listed high-first: conjugate by SWAP to flip the tensor order.
  Eigen::Matrix4cd sw = Eigen::Matrix4cd::Zero();
  sw(0, 0) = sw(3, 3) = sw(1, 2) = sw(2, 1) = 1.0;
  return sw * u * sw;
}

struct Block {
  std::vector<int> indices;
  std::vector<int> support;  // sorted, size <= 2
  bool has_two_qubit = false;
};

}  // namespace

// Greedily collects maximal contiguous blocks whose combined qubit support
// has size <= 2; a block becomes a single opaque unitary only if it has at
// least two gates and contains a 2q gate.
Circuit consolidate_blocks(const Circuit& c) {
  Circuit out(c.num_qubits, c.name);
  Block cur;

  auto flush = [&]() {
    if (cur.indices.empty()) return;
    if (cur.indices.size() >= 2 && cur.has_two_qubit) {
      const int lo = cur.support.front();
      const int hi = cur.support.back();
      Eigen::Matrix4cd u = Eigen::Matrix4cd::Identity();
      for (int idx : cur.indices) u = embed_on_pair(c.gates[idx], lo, hi) * u;
      out.append(Gate::opaque2(lo, hi, u));
    } else {
      for (int idx : cur.indices) out.append(c.gates[idx]);
    }
    cur = Block{};
  };

  for (int i = 0; i < static_cast<int>(c.gates.size()); ++i) {
    const Gate& g = c.gates[i];
    std::vector<int> merged = cur.support;
    for (int q : g.qubits) {
      if (std::find(merged.begin(), merged.end(), q) == merged.end()) {
        merged.push_back(q);
      }
    }
    if (merged.size() > 2) {
      flush();
      merged.assign(g.qubits.begin(), g.qubits.end());
    }
    std::sort(merged.begin(), merged.end());
    cur.support = std::move(merged);
    cur.indices.push_back(i);
    cur.has_two_qubit |= g.is_two_qubit();
  }
  flush();
  return out;
}

}  // namespace qcf

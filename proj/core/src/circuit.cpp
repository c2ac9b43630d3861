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

#include "qcf/circuit.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace qcf {

namespace {

constexpr std::array<std::string_view, kNumNamedKinds> kGateNames = {
    "u1", "u2", "u3",  "rz", "rx", "ry", "x",  "y",    "z",  "h",
    "s",  "sdg", "t",  "tdg", "cx", "cy", "cz", "swap", "rzz"};

}  // namespace

std::string_view gate_name(GateKind k) {
  const int i = static_cast<int>(k);
  if (i < kNumNamedKinds) return kGateNames[i];
  return k == GateKind::Unitary1 ? "unitary1" : "unitary2";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  for (int i = 0; i < kNumNamedKinds; ++i) {
    if (kGateNames[i] == name) return static_cast<GateKind>(i);
  }
  return std::nullopt;
}

Gate Gate::make(GateKind kind, std::vector<int> qubits,
                std::vector<double> params) {
  if (is_opaque(kind)) {
    throw std::invalid_argument("opaque gates require a matrix; use opaque1/opaque2");
  }
  Gate g;
  g.kind = kind;
  g.qubits = std::move(qubits);
  g.params = std::move(params);
  return g;
}

Gate Gate::opaque1(int qubit, const Eigen::Matrix2cd& m) {
  Gate g;
  g.kind = GateKind::Unitary1;
  g.qubits = {qubit};
  g.matrix = std::make_shared<Eigen::MatrixXcd>(m);
  return g;
}

Gate Gate::opaque2(int q0, int q1, const Eigen::Matrix4cd& m) {
  Gate g;
  g.kind = GateKind::Unitary2;
  g.qubits = {q0, q1};
  g.matrix = std::make_shared<Eigen::MatrixXcd>(m);
  return g;
}

bool qubits_overlap(const Gate& a, const Gate& b) {
  for (int qa : a.qubits) {
    for (int qb : b.qubits) {
      if (qa == qb) return true;
    }
  }
  return false;
}

Circuit::Circuit(int n, std::string name) : num_qubits(n), name(std::move(name)) {
  if (n < 0) throw std::invalid_argument("negative qubit count");
}

void Circuit::append(Gate g) {
  if (static_cast<int>(g.qubits.size()) != g.arity()) {
    throw std::invalid_argument("gate qubit list does not match arity");
  }
  if (static_cast<int>(g.params.size()) != gate_param_count(g.kind)) {
    throw std::invalid_argument("gate parameter count mismatch");
  }
  for (std::size_t i = 0; i < g.qubits.size(); ++i) {
    const int q = g.qubits[i];
    if (q < 0 || q >= num_qubits) {
      throw std::invalid_argument("gate qubit index out of range");
    }
    for (std::size_t j = i + 1; j < g.qubits.size(); ++j) {
      if (g.qubits[j] == q) throw std::invalid_argument("duplicate qubit operand");
    }
  }
  if (is_opaque(g.kind)) {
    if (!g.matrix) throw std::invalid_argument("opaque gate without matrix");
    const int dim = g.kind == GateKind::Unitary1 ? 2 : 4;
    if (g.matrix->rows() != dim || g.matrix->cols() != dim) {
      throw std::invalid_argument("opaque gate matrix has wrong dimension");
    }
  }
  gates.push_back(std::move(g));
}

GateCounts gate_counts(const Circuit& c) {
  GateCounts out;
  for (const Gate& g : c.gates) {
    out.total += 1;
    if (g.is_two_qubit()) {
      out.two_qubit += 1;
    } else {
      out.one_qubit += 1;
    }
    if (!is_opaque(g.kind)) {
      out.named[static_cast<int>(g.kind)] += 1;
    }
  }
  return out;
}

int depth(const Circuit& c) {
  std::vector<int> level(c.num_qubits, 0);
  int d = 0;
  for (const Gate& g : c.gates) {
    int layer = 0;
    for (int q : g.qubits) layer = std::max(layer, level[q]);
    layer += 1;
    for (int q : g.qubits) level[q] = layer;
    d = std::max(d, layer);
  }
  return d;
}

}  // namespace qcf

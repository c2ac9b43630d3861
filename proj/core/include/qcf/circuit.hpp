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

#include <array>
#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace qcf {

using Complex = std::complex<double>;

/// Gate vocabulary. Named kinds have fixed arity and parameter count;
/// Unitary1/Unitary2 are opaque gates that carry their own matrix.
enum class GateKind : std::uint8_t {
  U1,
  U2,
  U3,
  Rz,
  Rx,
  Ry,
  X,
  Y,
  Z,
  H,
  S,
  Sdg,
  T,
  Tdg,
  Cx,
  Cy,
  Cz,
  Swap,
  Rzz,
  Unitary1,
  Unitary2,
};

inline constexpr int kNumGateKinds = 21;
inline constexpr int kNumNamedKinds = 19;

constexpr int gate_arity(GateKind k) {
  switch (k) {
    case GateKind::Cx:
    case GateKind::Cy:
    case GateKind::Cz:
    case GateKind::Swap:
    case GateKind::Rzz:
    case GateKind::Unitary2:
      return 2;
    default:
      return 1;
  }
}

constexpr int gate_param_count(GateKind k) {
  switch (k) {
    case GateKind::U1:
    case GateKind::Rz:
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rzz:
      return 1;
    case GateKind::U2:
      return 2;
    case GateKind::U3:
      return 3;
    default:
      return 0;
  }
}

constexpr bool is_opaque(GateKind k) {
  return k == GateKind::Unitary1 || k == GateKind::Unitary2;
}

/// QASM-style lowercase name for a named kind ("cx", "sdg", ...).
std::string_view gate_name(GateKind k);

/// Inverse of gate_name. Returns nullopt for unknown names and for the
/// opaque kinds, which have no textual form.
std::optional<GateKind> gate_kind_from_name(std::string_view name);

/// A single gate application: kind, ordered qubit operands and angle
/// parameters (radians). Opaque gates hold their matrix by shared pointer
/// so copies stay cheap.
struct Gate {
  GateKind kind = GateKind::X;
  std::vector<int> qubits;
  std::vector<double> params;
  std::shared_ptr<const Eigen::MatrixXcd> matrix;  // opaque kinds only

  static Gate make(GateKind kind, std::vector<int> qubits,
                   std::vector<double> params = {});
  static Gate opaque1(int qubit, const Eigen::Matrix2cd& m);
  static Gate opaque2(int q0, int q1, const Eigen::Matrix4cd& m);

  int arity() const { return gate_arity(kind); }
  bool is_two_qubit() const { return arity() == 2; }
};

/// True iff the two gates share at least one qubit index.
bool qubits_overlap(const Gate& a, const Gate& b);

/// An ordered gate list over a fixed number of qubits. List position is
/// program order: gates sharing a qubit execute in list order. Circuits are
/// treated as immutable values once built; every operation on them is pure.
struct Circuit {
  int num_qubits = 0;
  std::vector<Gate> gates;
  std::string name;

  Circuit() = default;
  explicit Circuit(int n, std::string name = "");

  /// Validates qubit range/distinctness and parameter count, then appends.
  /// Throws std::invalid_argument on a malformed gate.
  void append(Gate g);

  std::size_t size() const { return gates.size(); }
};

/// Per-kind histogram plus the totals every feature and pass guard needs.
/// Opaque gates contribute to total/one_qubit/two_qubit but to no named bucket.
struct GateCounts {
  std::array<int, kNumNamedKinds> named{};
  int total = 0;
  int one_qubit = 0;
  int two_qubit = 0;

  int of(GateKind k) const { return named[static_cast<int>(k)]; }
};

GateCounts gate_counts(const Circuit& c);

/// Longest path length where each gate occupies one layer on each of its
/// qubits (per-qubit running maxima). Empty circuit has depth 0.
int depth(const Circuit& c);

/// The unitary of a single gate in little-endian convention: the gate's
/// first listed qubit is the least significant tensor factor.
/// 2x2 for 1-qubit kinds, 4x4 for 2-qubit kinds.
Eigen::MatrixXcd gate_matrix(const Gate& g);

/// |Tr U| >= d * (1 - tol), i.e. U is the identity up to a global phase.
bool is_identity_up_to_phase(const Eigen::MatrixXcd& u, double tol = 1e-10);

}  // namespace qcf

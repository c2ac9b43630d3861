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

#include "qcf/tableau.hpp"

#include <stdexcept>

namespace qcf {

Tableau::Tableau(int num_qubits) : k_(num_qubits), rows_(2 * num_qubits) {
  for (int i = 0; i < k_; ++i) {
    rows_[i].x.assign(k_, 0);
    rows_[i].z.assign(k_, 0);
    rows_[i].x[i] = 1;  // X_i image
    rows_[k_ + i].x.assign(k_, 0);
    rows_[k_ + i].z.assign(k_, 0);
    rows_[k_ + i].z[i] = 1;  // Z_i image
  }
}

void Tableau::apply_h(int q) {
  for (auto& r : rows_) {
    r.sign ^= (r.x[q] & r.z[q]) != 0;
    std::swap(r.x[q], r.z[q]);
  }
}

void Tableau::apply_s(int q) {
  for (auto& r : rows_) {
    r.sign ^= (r.x[q] & r.z[q]) != 0;
    r.z[q] ^= r.x[q];
  }
}

void Tableau::apply_x(int q) {
  for (auto& r : rows_) r.sign ^= r.z[q] != 0;
}

void Tableau::apply_z(int q) {
  for (auto& r : rows_) r.sign ^= r.x[q] != 0;
}

void Tableau::apply_y(int q) {
  for (auto& r : rows_) r.sign ^= (r.x[q] ^ r.z[q]) != 0;
}

void Tableau::apply_cx(int c, int t) {
  for (auto& r : rows_) {
    r.sign ^= (r.x[c] & r.z[t] & (r.x[t] ^ r.z[c] ^ 1)) != 0;
    r.x[t] ^= r.x[c];
    r.z[c] ^= r.z[t];
  }
}

void Tableau::apply(GateKind kind, const std::vector<int>& qubits) {
  switch (kind) {
    case GateKind::H:
      apply_h(qubits[0]);
      return;
    case GateKind::S:
      apply_s(qubits[0]);
      return;
    case GateKind::Sdg:
      apply_s(qubits[0]);
      apply_s(qubits[0]);
      apply_s(qubits[0]);
      return;
    case GateKind::X:
      apply_x(qubits[0]);
      return;
    case GateKind::Y:
      apply_y(qubits[0]);
      return;
    case GateKind::Z:
      apply_z(qubits[0]);
      return;
    case GateKind::Cx:
      apply_cx(qubits[0], qubits[1]);
      return;
    case GateKind::Cz:
      apply_h(qubits[1]);
      apply_cx(qubits[0], qubits[1]);
      apply_h(qubits[1]);
      return;
    case GateKind::Cy:
      // cy = sdg(t) . cx(c,t) . s(t) in circuit order
      apply_s(qubits[1]);
      apply_s(qubits[1]);
      apply_s(qubits[1]);
      apply_cx(qubits[0], qubits[1]);
      apply_s(qubits[1]);
      return;
    case GateKind::Swap:
      apply_cx(qubits[0], qubits[1]);
      apply_cx(qubits[1], qubits[0]);
      apply_cx(qubits[0], qubits[1]);
      return;
    default:
      throw std::invalid_argument("Tableau::apply: not a Clifford kind");
  }
}

bool Tableau::is_identity() const {
  for (int i = 0; i < k_; ++i) {
    const PauliRow& xr = rows_[i];
    const PauliRow& zr = rows_[k_ + i];
    if (xr.sign || zr.sign) return false;
    for (int j = 0; j < k_; ++j) {
      if (xr.x[j] != (i == j) || xr.z[j] != 0) return false;
      if (zr.z[j] != (i == j) || zr.x[j] != 0) return false;
    }
  }
  return true;
}

std::vector<Gate> Tableau::synthesize_inverse() const {
  Tableau t = *this;
  std::vector<Gate> out;

  auto emit_h = [&](int q) {
    t.apply_h(q);
    out.push_back(Gate::make(GateKind::H, {q}));
  };
  auto emit_s = [&](int q) {
    t.apply_s(q);
    out.push_back(Gate::make(GateKind::S, {q}));
  };
  auto emit_cx = [&](int c, int x) {
    t.apply_cx(c, x);
    out.push_back(Gate::make(GateKind::Cx, {c, x}));
  };

  for (int i = 0; i < t.k_; ++i) {
    PauliRow& xr = t.rows_[i];

    // Bring the X_i image to exactly X_i using gates on qubits >= i.
    bool has_x = false;
    for (int j = i; j < t.k_; ++j) has_x |= xr.x[j] != 0;
    if (!has_x) {
      for (int j = i; j < t.k_; ++j) {
        if (xr.z[j]) {
          emit_h(j);
          break;
        }
      }
    }
    if (!xr.x[i]) {
      for (int j = i + 1; j < t.k_; ++j) {
        if (xr.x[j]) {
          emit_cx(j, i);
          break;
        }
      }
    }
    for (int j = i + 1; j < t.k_; ++j) {
      if (xr.x[j]) emit_cx(i, j);
    }
    bool tail_z = false;
    for (int j = i + 1; j < t.k_; ++j) tail_z |= xr.z[j] != 0;
    if (tail_z) {
      if (!xr.z[i]) emit_s(i);
      for (int j = i + 1; j < t.k_; ++j) {
        if (xr.z[j]) emit_cx(j, i);
      }
    }
    if (xr.z[i]) emit_s(i);

    // Now shape the Z_i image into Z_i without disturbing X_i.
    PauliRow& zr = t.rows_[t.k_ + i];
    for (int j = i + 1; j < t.k_; ++j) {
      if (zr.x[j]) {
        if (zr.z[j]) emit_s(j);
        emit_h(j);
      }
    }
    if (zr.x[i]) {
      // Y at column i; h.s.h sends it to Z while fixing X_i.
      emit_h(i);
      emit_s(i);
      emit_h(i);
    }
    for (int j = i + 1; j < t.k_; ++j) {
      if (zr.z[j]) emit_cx(j, i);
    }
  }

  // Symplectic part is now the identity; clean up the signs with Paulis
  // expanded over {h, s, cx}: Z = s.s and X = h.s.s.h.
  for (int i = 0; i < t.k_; ++i) {
    if (t.rows_[i].sign) {
      emit_s(i);
      emit_s(i);
    }
    if (t.rows_[t.k_ + i].sign) {
      emit_h(i);
      emit_s(i);
      emit_s(i);
      emit_h(i);
    }
  }

  if (!t.is_identity()) {
    throw std::logic_error("Tableau synthesis failed to reach the identity");
  }
  return out;
}

}  // namespace qcf

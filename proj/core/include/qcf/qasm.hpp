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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qcf/circuit.hpp"

namespace qcf {

enum class QasmErrorKind {
  Syntax,          // token/grammar violation, unsupported statement
  UnknownGate,     // identifier is not in the gate vocabulary
  QubitRange,      // qubit index outside the declared register
  ArityMismatch,   // wrong operand or parameter count, duplicate operand
  UnsupportedGate, // opaque unitary present but sidecar emission disabled
};

class QasmError : public std::runtime_error {
 public:
  QasmError(QasmErrorKind kind, int line, int column, const std::string& msg)
      : std::runtime_error("qasm:" + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + msg),
        kind(kind),
        line(line),
        column(column) {}

  QasmErrorKind kind;
  int line;
  int column;
};

/// Parses the strict OpenQASM 2.0 subset: version header, optional
/// qelib1.inc include, exactly one qreg, then gate statements. Angle
/// expressions support literals, pi, unary minus and + - * / with the
/// usual precedence.
Circuit parse_qasm(std::string_view text);

/// Emits the circuit as OpenQASM 2.0. Throws QasmError(UnsupportedGate)
/// if the circuit contains opaque unitaries; those only serialize through
/// the sidecar-aware entry points below.
std::string emit_qasm(const Circuit& c);

/// QASM text plus, when the circuit has opaque unitaries, a JSON sidecar
/// mapping gate index -> qubits and row-major matrix. Opaque gates appear
/// in the QASM body as placeholder comments.
struct EmittedQasm {
  std::string qasm;
  std::optional<std::string> sidecar_json;
};

EmittedQasm emit_qasm_with_sidecar(const Circuit& c);

/// File helpers: write_circuit stores `path` and, if needed,
/// "<path>.unitaries.json"; read_circuit picks the sidecar up again.
void write_circuit(const Circuit& c, const std::string& path);
Circuit read_circuit(const std::string& path);

}  // namespace qcf

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

#include "qcf/qasm.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "qcf/rng.hpp"
#include "qcf/simulator.hpp"
#include "test_util.hpp"

using namespace qcf;
using test::g1;
using test::g2;
using test::make_circuit;

namespace {

QasmErrorKind error_kind_of(const std::string& text) {
  try {
    parse_qasm(text);
  } catch (const QasmError& e) {
    return e.kind;
  }
  ADD_FAILURE() << "expected QasmError for: " << text;
  return QasmErrorKind::Syntax;
}

bool circuits_equal(const Circuit& a, const Circuit& b) {
  if (a.num_qubits != b.num_qubits || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Gate& ga = a.gates[i];
    const Gate& gb = b.gates[i];
    if (ga.kind != gb.kind || ga.qubits != gb.qubits) return false;
    for (std::size_t p = 0; p < ga.params.size(); ++p) {
      if (ga.params[p] != gb.params[p]) return false;  // exact round-trip
    }
    if (ga.matrix) {
      if (!gb.matrix) return false;
      if ((*ga.matrix - *gb.matrix).cwiseAbs().maxCoeff() > 0) return false;
    }
  }
  return true;
}

}  // namespace

TEST(QasmParseTest, BasicDocument) {
  const Circuit c = parse_qasm("OPENQASM 2.0; qreg q[2]; h q[0]; cx q[0],q[1];");
  EXPECT_EQ(c.num_qubits, 2);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.gates[0].kind, GateKind::H);
  EXPECT_EQ(c.gates[1].kind, GateKind::Cx);
  EXPECT_EQ(c.gates[1].qubits, (std::vector<int>{0, 1}));
}

TEST(QasmParseTest, PiExpression) {
  const Circuit c = parse_qasm("OPENQASM 2.0; qreg q[1]; rz(pi/2) q[0];");
  ASSERT_EQ(c.size(), 1u);
  EXPECT_NEAR(c.gates[0].params[0], M_PI / 2, 1e-15);
}

TEST(QasmParseTest, ExpressionPrecedenceAndUnaryMinus) {
  const Circuit c =
      parse_qasm("OPENQASM 2.0; qreg q[1]; u3(1+2*3, -pi/4, (1-2)/4) q[0];");
  ASSERT_EQ(c.size(), 1u);
  EXPECT_NEAR(c.gates[0].params[0], 7.0, 1e-15);
  EXPECT_NEAR(c.gates[0].params[1], -M_PI / 4, 1e-15);
  EXPECT_NEAR(c.gates[0].params[2], -0.25, 1e-15);
}

TEST(QasmParseTest, AcceptsStandardIncludeAndComments) {
  const Circuit c = parse_qasm(
      "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n// comment\nqreg q[1];\nh q[0];\n");
  EXPECT_EQ(c.size(), 1u);
}

TEST(QasmParseTest, ErrorCategories) {
  EXPECT_EQ(error_kind_of("OPENQASM 2.0; qreg q[2]; h q[3];"),
            QasmErrorKind::QubitRange);
  EXPECT_EQ(error_kind_of("OPENQASM 2.0; qreg q[2]; bogus q[0];"),
            QasmErrorKind::UnknownGate);
  EXPECT_EQ(error_kind_of("OPENQASM 2.0; qreg q[2]; h q[0],q[1];"),
            QasmErrorKind::ArityMismatch);
  EXPECT_EQ(error_kind_of("OPENQASM 2.0; qreg q[2]; rz q[0];"),
            QasmErrorKind::ArityMismatch);
  EXPECT_EQ(error_kind_of("OPENQASM 2.0; qreg q[2]; cx q[0],q[0];"),
            QasmErrorKind::ArityMismatch);
  EXPECT_EQ(error_kind_of("OPENQASM 2.0; qreg q[2]; h q[0]"), QasmErrorKind::Syntax);
  EXPECT_EQ(error_kind_of("OPENQASM 2.0; qreg q[2]; creg c[2];"),
            QasmErrorKind::Syntax);
  EXPECT_EQ(error_kind_of("OPENQASM 3.0; qreg q[2];"), QasmErrorKind::Syntax);
  EXPECT_EQ(error_kind_of(""), QasmErrorKind::Syntax);
}

TEST(QasmParseTest, ErrorsCarryLineAndColumn) {
  try {
    parse_qasm("OPENQASM 2.0;\nqreg q[2];\nh q[5];\n");
    FAIL() << "expected QasmError";
  } catch (const QasmError& e) {
    EXPECT_EQ(e.kind, QasmErrorKind::QubitRange);
    EXPECT_EQ(e.line, 3);
    EXPECT_GT(e.column, 1);
  }
}

TEST(QasmEmitTest, RoundTripBasic) {
  const Circuit c = make_circuit(2, {g1(GateKind::H, 0), g2(GateKind::Cx, 0, 1)});
  EXPECT_TRUE(circuits_equal(parse_qasm(emit_qasm(c)), c));
}

TEST(QasmEmitTest, RoundTripParamPrecision) {
  const Circuit c = make_circuit(1, {g1(GateKind::U3, 0, {0.1, 0.2, 0.3})});
  const Circuit back = parse_qasm(emit_qasm(c));
  ASSERT_EQ(back.size(), 1u);
  for (int p = 0; p < 3; ++p) {
    EXPECT_NEAR(back.gates[0].params[p], c.gates[0].params[p], 1e-15);
  }
}

TEST(QasmEmitTest, OpaqueWithoutSidecarIsAnError) {
  Circuit c(2);
  c.append(Gate::opaque2(0, 1, Eigen::Matrix4cd::Identity()));
  try {
    emit_qasm(c);
    FAIL() << "expected QasmError";
  } catch (const QasmError& e) {
    EXPECT_EQ(e.kind, QasmErrorKind::UnsupportedGate);
  }
}

TEST(QasmEmitTest, SidecarFileRoundTrip) {
  Circuit c(3);
  c.append(g1(GateKind::H, 0));
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = m(1, 1) = Complex(0, 1);
  m(2, 3) = m(3, 2) = 1.0;
  c.append(Gate::opaque2(1, 2, m));
  c.append(g2(GateKind::Cz, 0, 2));

  const auto dir = std::filesystem::temp_directory_path() / "qcf_qasm_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "sidecar.qasm").string();
  write_circuit(c, path);
  EXPECT_TRUE(std::filesystem::exists(path + ".unitaries.json"));

  const Circuit back = read_circuit(path);
  EXPECT_TRUE(circuits_equal(back, c));
  std::filesystem::remove_all(dir);
}

TEST(QasmPropertyTest, RoundTripRandomCircuits) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Circuit c = test::small_random(2 + seed % 5, 10, seed);
    const Circuit back = parse_qasm(emit_qasm(c));
    EXPECT_TRUE(circuits_equal(back, c)) << "seed " << seed;
  }
}

TEST(QasmPropertyTest, MutationFuzzNeverCrashes) {
  const std::string base = emit_qasm(test::small_random(4, 10, 1234));
  RngStream rng(555);
  int parsed_ok = 0, structured_errors = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::string mutated = base;
    const int edits = 1 + static_cast<int>(rng.next_below(4));
    for (int e = 0; e < edits; ++e) {
      if (mutated.empty()) break;
      const std::size_t pos = rng.next_below(mutated.size());
      switch (rng.next_below(3)) {
        case 0:
          mutated.erase(pos, 1 + rng.next_below(5));
          break;
        case 1:
          mutated[pos] = static_cast<char>(32 + rng.next_below(95));
          break;
        default:
          mutated.insert(pos, 1, static_cast<char>(32 + rng.next_below(95)));
          break;
      }
    }
    try {
      parse_qasm(mutated);
      ++parsed_ok;
    } catch (const QasmError&) {
      ++structured_errors;
    }
    // Anything else (segfault, uncaught exception) fails the test run.
  }
  EXPECT_GT(structured_errors, 0);
  EXPECT_EQ(parsed_ok + structured_errors, 500);
}

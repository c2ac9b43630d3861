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

#include <gtest/gtest.h>

#include "qcf/random_circuit.hpp"
#include "qcf/simulator.hpp"
#include "test_util.hpp"

using namespace qcf;
using test::g1;
using test::g2;
using test::make_circuit;

namespace {

GateKind invert(GateKind k) {
  if (k == GateKind::S) return GateKind::Sdg;
  if (k == GateKind::Sdg) return GateKind::S;
  return k;
}

// Synthesizes a circuit equivalent to `c` by accumulating the inverse
// tableau, as optimize_cliffords does.
Circuit resynthesize(const Circuit& c) {
  Tableau tab(c.num_qubits);
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    tab.apply(invert(it->kind), it->qubits);
  }
  Circuit out(c.num_qubits);
  for (const Gate& g : tab.synthesize_inverse()) out.append(g);
  return out;
}

Circuit random_clifford(int qubits, int depth, std::uint64_t seed) {
  GenSpec spec;
  spec.num_qubits = qubits;
  spec.depth = depth;
  spec.seed = seed;
  spec.palette = {GateKind::H,  GateKind::S,  GateKind::Sdg, GateKind::X,
                  GateKind::Y,  GateKind::Z,  GateKind::Cx,  GateKind::Cy,
                  GateKind::Cz, GateKind::Swap};
  return random_circuit(spec);
}

}  // namespace

TEST(TableauTest, IdentityAfterSelfInverseSequence) {
  Tableau t(2);
  t.apply(GateKind::H, {0});
  t.apply(GateKind::Cx, {0, 1});
  EXPECT_FALSE(t.is_identity());
  t.apply(GateKind::Cx, {0, 1});
  t.apply(GateKind::H, {0});
  EXPECT_TRUE(t.is_identity());
}

TEST(TableauTest, SdgIsInverseOfS) {
  Tableau t(1);
  t.apply(GateKind::S, {0});
  t.apply(GateKind::Sdg, {0});
  EXPECT_TRUE(t.is_identity());
}

TEST(TableauTest, IdentityTableauSynthesizesEmpty) {
  Tableau t(3);
  EXPECT_TRUE(t.synthesize_inverse().empty());
}

TEST(TableauTest, SynthesisMatchesOracleForNamedGates) {
  for (GateKind k : {GateKind::H, GateKind::S, GateKind::Sdg, GateKind::X,
                     GateKind::Y, GateKind::Z}) {
    const Circuit c = make_circuit(1, {g1(k, 0)});
    const Circuit synth = resynthesize(c);
    EXPECT_TRUE(equivalent_up_to_phase(c, synth, 1e-10)) << gate_name(k);
  }
  for (GateKind k : {GateKind::Cx, GateKind::Cy, GateKind::Cz, GateKind::Swap}) {
    const Circuit c = make_circuit(2, {g2(k, 0, 1)});
    const Circuit synth = resynthesize(c);
    EXPECT_TRUE(equivalent_up_to_phase(c, synth, 1e-10)) << gate_name(k);
    const Circuit flipped = make_circuit(2, {g2(k, 1, 0)});
    EXPECT_TRUE(equivalent_up_to_phase(flipped, resynthesize(flipped), 1e-10))
        << gate_name(k) << " flipped";
  }
}

TEST(TableauTest, SynthesisMatchesOracleOnOneQubitCliffords) {
  GenSpec spec;
  spec.num_qubits = 1;
  spec.depth = 12;
  spec.palette = {GateKind::H, GateKind::S, GateKind::Sdg,
                  GateKind::X, GateKind::Y, GateKind::Z};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    spec.seed = 700 + seed;
    const Circuit c = random_circuit(spec);
    EXPECT_TRUE(equivalent_up_to_phase(c, resynthesize(c), 1e-10)) << "seed " << seed;
  }
}

TEST(TableauTest, SynthesisMatchesOracleOnRandomCliffords) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int qubits = 2 + static_cast<int>(seed % 4);
    const Circuit c = random_clifford(qubits, 10, 900 + seed);
    const Circuit synth = resynthesize(c);
    EXPECT_TRUE(equivalent_up_to_phase(c, synth, 1e-9))
        << "seed " << seed << " qubits " << qubits;
    for (const Gate& g : synth.gates) {
      EXPECT_TRUE(g.kind == GateKind::H || g.kind == GateKind::S ||
                  g.kind == GateKind::Cx);
    }
  }
}

TEST(TableauTest, RejectsNonClifford) {
  Tableau t(1);
  EXPECT_THROW(t.apply(GateKind::T, {0}), std::invalid_argument);
}

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

#include <gtest/gtest.h>

#include "qcf/qasm.hpp"
#include "qcf/simulator.hpp"
#include "test_util.hpp"

using namespace qcf;
using test::g1;
using test::g2;
using test::make_circuit;

namespace {

// Unit-scale soundness sweep; the acceptance suite runs the full version.
void check_pass_on_random_circuits(PassId id, int trials, double tol) {
  for (int t = 0; t < trials; ++t) {
    const Circuit c = test::small_random(4 + t % 3, 15, 1000 + t);
    const Circuit opt = apply_pass(c, id);
    const PhaseEquivalence eq = compare_up_to_phase(c, opt);
    ASSERT_TRUE(eq.max_deviation < tol)
        << pass_name(id) << " trial " << t << " deviation " << eq.max_deviation;
  }
}

int opaque_2q_count(const Circuit& c) {
  int n = 0;
  for (const Gate& g : c.gates) n += g.kind == GateKind::Unitary2 ? 1 : 0;
  return n;
}

}  // namespace

TEST(PassNamesTest, StableCliStrings) {
  EXPECT_EQ(pass_name(PassId::Optimize1qGates), "opt1q");
  EXPECT_EQ(pass_name(PassId::OptimizeCliffords), "cliffords");
  EXPECT_EQ(pass_from_name("remove-id"), PassId::RemoveIdentityEquivalent);
  EXPECT_EQ(pass_from_name("split2q"), PassId::Split2QUnitaries);
  EXPECT_FALSE(pass_from_name("nonsense").has_value());
}

TEST(PassSelectionTest, ValidationRules) {
  PassSelection empty;
  EXPECT_THROW(empty.validate(), std::invalid_argument);

  PassSelection misc_as_baseline;
  misc_as_baseline.baseline = {PassId::Split2QUnitaries};
  EXPECT_THROW(misc_as_baseline.validate(), std::invalid_argument);

  PassSelection ok;
  ok.baseline = {PassId::InverseCancellation};
  ok.misc = {PassId::OptimizeCliffords};
  EXPECT_NO_THROW(ok.validate());
}

// ---- optimize_1q_gates ----

TEST(Optimize1qTest, IdentityRunVanishes) {
  const Circuit c = make_circuit(1, {g1(GateKind::H, 0), g1(GateKind::H, 0)});
  EXPECT_EQ(optimize_1q_gates(c).size(), 0u);
}

TEST(Optimize1qTest, TTBecomesU1HalfPi) {
  const Circuit c = make_circuit(1, {g1(GateKind::T, 0), g1(GateKind::T, 0)});
  const Circuit out = optimize_1q_gates(c);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.gates[0].kind, GateKind::U1);
  const Eigen::MatrixXcd got = gate_matrix(out.gates[0]);
  const Eigen::MatrixXcd want = gate_matrix(g1(GateKind::U1, 0, {M_PI / 2}));
  EXPECT_LT((got - want).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Optimize1qTest, SingleHBecomesU2) {
  const Circuit c = make_circuit(1, {g1(GateKind::H, 0)});
  const Circuit out = optimize_1q_gates(c);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.gates[0].kind, GateKind::U2);
  EXPECT_NEAR(out.gates[0].params[0], 0.0, 1e-10);
  EXPECT_NEAR(out.gates[0].params[1], M_PI, 1e-10);
  EXPECT_TRUE(equivalent_up_to_phase(c, out, 1e-10));
}

TEST(Optimize1qTest, RunsBoundedByTwoQubitGates) {
  const Circuit c = make_circuit(
      2, {g1(GateKind::T, 0), g2(GateKind::Cx, 0, 1), g1(GateKind::T, 0)});
  const Circuit out = optimize_1q_gates(c);
  // The two t gates are separate runs; each canonicalizes to u1.
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out.gates[0].kind, GateKind::U1);
  EXPECT_EQ(out.gates[1].kind, GateKind::Cx);
  EXPECT_EQ(out.gates[2].kind, GateKind::U1);
  EXPECT_TRUE(equivalent_up_to_phase(c, out, 1e-10));
}

TEST(Optimize1qTest, SecondApplicationKeepsGateCount) {
  const Circuit c = test::small_random(4, 20, 7);
  const Circuit once = optimize_1q_gates(c);
  const Circuit twice = optimize_1q_gates(once);
  EXPECT_EQ(once.size(), twice.size());
}

// ---- inverse_cancellation ----

TEST(InverseCancellationTest, PairAcrossDisjointGate) {
  const Circuit c = make_circuit(
      2, {g1(GateKind::H, 0), g1(GateKind::X, 1), g1(GateKind::H, 0)});
  const Circuit out = inverse_cancellation(c);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.gates[0].kind, GateKind::X);
}

TEST(InverseCancellationTest, FixpointCascades) {
  const Circuit c = make_circuit(1, {g1(GateKind::S, 0), g1(GateKind::T, 0),
                                     g1(GateKind::Tdg, 0), g1(GateKind::Sdg, 0)});
  const Circuit out = inverse_cancellation(c);
  EXPECT_EQ(out.size(), 0u);
  EXPECT_TRUE(equivalent_up_to_phase(c, out, 1e-12));
}

TEST(InverseCancellationTest, TupleMismatchBlocksCancellation) {
  const Circuit c = make_circuit(2, {g2(GateKind::Cx, 0, 1), g2(GateKind::Cx, 1, 0)});
  EXPECT_EQ(inverse_cancellation(c).size(), 2u);
}

TEST(InverseCancellationTest, InterveningGateBlocksCancellation) {
  const Circuit c = make_circuit(
      1, {g1(GateKind::H, 0), g1(GateKind::T, 0), g1(GateKind::H, 0)});
  EXPECT_EQ(inverse_cancellation(c).size(), 3u);
}

// ---- commutative_cancellation ----

TEST(CommutativeCancellationTest, ZCommutesThroughControl) {
  const Circuit c = make_circuit(
      2, {g1(GateKind::Z, 0), g2(GateKind::Cx, 0, 1), g1(GateKind::Z, 0)});
  const Circuit out = commutative_cancellation(c);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.gates[0].kind, GateKind::Cx);
  EXPECT_TRUE(equivalent_up_to_phase(c, out, 1e-10));
}

TEST(CommutativeCancellationTest, XCommutesThroughTarget) {
  const Circuit c = make_circuit(
      2, {g1(GateKind::X, 1), g2(GateKind::Cx, 0, 1), g1(GateKind::X, 1)});
  const Circuit out = commutative_cancellation(c);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.gates[0].kind, GateKind::Cx);
  EXPECT_TRUE(equivalent_up_to_phase(c, out, 1e-10));
}

TEST(CommutativeCancellationTest, RotationAdditivity) {
  const Circuit c = make_circuit(
      1, {g1(GateKind::Rz, 0, {0.3}), g1(GateKind::Rz, 0, {0.4})});
  const Circuit out = commutative_cancellation(c);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.gates[0].kind, GateKind::Rz);
  EXPECT_NEAR(out.gates[0].params[0], 0.7, 1e-12);
}

TEST(CommutativeCancellationTest, PhaseRunMergesThroughZContext) {
  // t . cz . s on the same wire form one commuting group: merge to one rz.
  const Circuit c = make_circuit(
      2, {g1(GateKind::T, 0), g2(GateKind::Cz, 0, 1), g1(GateKind::S, 0)});
  const Circuit out = commutative_cancellation(c);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out.gates[0].kind, GateKind::Rz);
  EXPECT_NEAR(out.gates[0].params[0], 3 * M_PI / 4, 1e-12);
  EXPECT_TRUE(equivalent_up_to_phase(c, out, 1e-10));
}

TEST(CommutativeCancellationTest, CxPairCancelsThroughCommutingMiddle) {
  const Circuit c = make_circuit(
      2, {g2(GateKind::Cx, 0, 1), g1(GateKind::Rz, 0, {0.5}), g2(GateKind::Cx, 0, 1)});
  const Circuit out = commutative_cancellation(c);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.gates[0].kind, GateKind::Rz);
  EXPECT_TRUE(equivalent_up_to_phase(c, out, 1e-10));
}

TEST(CommutativeCancellationTest, FullMergeToIdentityDisappears) {
  const Circuit c = make_circuit(1, {g1(GateKind::S, 0), g1(GateKind::S, 0),
                                     g1(GateKind::Z, 0)});
  EXPECT_EQ(commutative_cancellation(c).size(), 0u);
}

// ---- remove_identity_equivalent ----

TEST(RemoveIdentityTest, Examples) {
  const Circuit c = make_circuit(
      1, {g1(GateKind::Rz, 0, {0.0}), g1(GateKind::Rz, 0, {2 * M_PI}),
          g1(GateKind::H, 0)});
  const Circuit out = remove_identity_equivalent(c);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.gates[0].kind, GateKind::H);
}

TEST(RemoveIdentityTest, SecondApplicationIsNoop) {
  const Circuit c = test::small_random(4, 15, 17);
  const Circuit once = remove_identity_equivalent(c);
  const Circuit twice = remove_identity_equivalent(once);
  EXPECT_EQ(emit_qasm(once), emit_qasm(twice));
}

// ---- consolidate_blocks ----

TEST(ConsolidateBlocksTest, CxPairBecomesIdentityUnitary) {
  const Circuit c = make_circuit(2, {g2(GateKind::Cx, 0, 1), g2(GateKind::Cx, 0, 1)});
  const Circuit out = consolidate_blocks(c);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.gates[0].kind, GateKind::Unitary2);
  EXPECT_LT((*out.gates[0].matrix - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff(),
            1e-12);
}

TEST(ConsolidateBlocksTest, MixedBlockIsOracleEquivalent) {
  const Circuit c = make_circuit(
      2, {g1(GateKind::H, 0), g2(GateKind::Cx, 0, 1), g1(GateKind::Rz, 1, {0.5})});
  const Circuit out = consolidate_blocks(c);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.gates[0].kind, GateKind::Unitary2);
  EXPECT_EQ(out.gates[0].qubits, (std::vector<int>{0, 1}));
  EXPECT_TRUE(equivalent_up_to_phase(c, out, 1e-10));
}

TEST(ConsolidateBlocksTest, PureOneQubitBlockLeftAlone) {
  const Circuit c = make_circuit(2, {g1(GateKind::H, 0), g1(GateKind::H, 1)});
  const Circuit out = consolidate_blocks(c);
  EXPECT_EQ(out.size(), 2u);
  EXPECT_EQ(opaque_2q_count(out), 0);
}

TEST(ConsolidateBlocksTest, SingleGateGuard) {
  const Circuit c = make_circuit(2, {g2(GateKind::Cx, 0, 1)});
  const Circuit out = consolidate_blocks(c);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.gates[0].kind, GateKind::Cx);
}

TEST(ConsolidateBlocksTest, BlockBoundaryOnThirdQubit) {
  const Circuit c = make_circuit(
      3, {g2(GateKind::Cx, 0, 1), g1(GateKind::T, 1), g2(GateKind::Cx, 1, 2)});
  const Circuit out = consolidate_blocks(c);
  // First two gates form a block on {0,1}; cx(1,2) breaks the support.
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out.gates[0].kind, GateKind::Unitary2);
  EXPECT_EQ(out.gates[1].kind, GateKind::Cx);
  EXPECT_TRUE(equivalent_up_to_phase(c, out, 1e-10));
}

// ---- template_optimization ----

TEST(TemplateOptimizationTest, CxRzCxBecomesRzz) {
  const Circuit c = make_circuit(
      2, {g2(GateKind::Cx, 0, 1), g1(GateKind::Rz, 1, {0.7}), g2(GateKind::Cx, 0, 1)});
  const Circuit out = template_optimization(c);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.gates[0].kind, GateKind::Rzz);
  EXPECT_NEAR(out.gates[0].params[0], 0.7, 1e-15);
  EXPECT_TRUE(equivalent_up_to_phase(c, out, 1e-10));
}

TEST(TemplateOptimizationTest, RzOnControlDoesNotMatch) {
  const Circuit c = make_circuit(
      2, {g2(GateKind::Cx, 0, 1), g1(GateKind::Rz, 0, {0.7}), g2(GateKind::Cx, 0, 1)});
  EXPECT_EQ(template_optimization(c).size(), 3u);
}

TEST(TemplateOptimizationTest, HadamardSandwichReversesCx) {
  const Circuit c = make_circuit(
      2, {g1(GateKind::H, 0), g1(GateKind::H, 1), g2(GateKind::Cx, 0, 1),
          g1(GateKind::H, 0), g1(GateKind::H, 1)});
  const Circuit out = template_optimization(c);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.gates[0].kind, GateKind::Cx);
  EXPECT_EQ(out.gates[0].qubits, (std::vector<int>{1, 0}));
  EXPECT_TRUE(equivalent_up_to_phase(c, out, 1e-10));
}

TEST(TemplateOptimizationTest, TSquareIsS) {
  const Circuit c = make_circuit(1, {g1(GateKind::T, 0), g1(GateKind::T, 0)});
  const Circuit out = template_optimization(c);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.gates[0].kind, GateKind::S);
}

TEST(TemplateOptimizationTest, SquareChainReachesFixpoint) {
  // t t t t -> s s -> z
  const Circuit c = make_circuit(1, {g1(GateKind::T, 0), g1(GateKind::T, 0),
                                     g1(GateKind::T, 0), g1(GateKind::T, 0)});
  const Circuit out = template_optimization(c);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.gates[0].kind, GateKind::Z);
  EXPECT_TRUE(equivalent_up_to_phase(c, out, 1e-10));
}

TEST(TemplateOptimizationTest, HadamardConjugations) {
  const Circuit hxh = make_circuit(
      1, {g1(GateKind::H, 0), g1(GateKind::X, 0), g1(GateKind::H, 0)});
  const Circuit out1 = template_optimization(hxh);
  ASSERT_EQ(out1.size(), 1u);
  EXPECT_EQ(out1.gates[0].kind, GateKind::Z);

  const Circuit hzh = make_circuit(
      1, {g1(GateKind::H, 0), g1(GateKind::Z, 0), g1(GateKind::H, 0)});
  const Circuit out2 = template_optimization(hzh);
  ASSERT_EQ(out2.size(), 1u);
  EXPECT_EQ(out2.gates[0].kind, GateKind::X);
}

TEST(TemplateOptimizationTest, SecondApplicationIsNoop) {
  const Circuit c = test::small_random(5, 20, 23);
  const Circuit once = template_optimization(c);
  const Circuit twice = template_optimization(once);
  EXPECT_EQ(emit_qasm(once), emit_qasm(twice));
}

// ---- split_2q_unitaries ----

TEST(Split2qTest, ProductUnitarySplits) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  const Eigen::Matrix2cd h = gate_matrix(g1(GateKind::H, 0));
  const Eigen::Matrix2cd x = gate_matrix(g1(GateKind::X, 0));
  // kron with the first listed qubit as the low factor: x on qubit 0, h on 1.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.block<2, 2>(2 * i, 2 * j) = h(i, j) * x;

  Circuit c(2);
  c.append(Gate::opaque2(0, 1, m));
  const Circuit out = split_2q_unitaries(c);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out.gates[0].arity(), 1);
  EXPECT_EQ(out.gates[1].arity(), 1);
  EXPECT_TRUE(equivalent_up_to_phase(c, out, 1e-9));
}

TEST(Split2qTest, EntanglingGatesUntouched) {
  const Circuit cx = make_circuit(2, {g2(GateKind::Cx, 0, 1)});
  EXPECT_EQ(emit_qasm(split_2q_unitaries(cx)), emit_qasm(cx));

  const Circuit swap = make_circuit(2, {g2(GateKind::Swap, 0, 1)});
  EXPECT_EQ(emit_qasm(split_2q_unitaries(swap)), emit_qasm(swap));
}

TEST(Split2qTest, IdentityFactorEmitsNothing) {
  Circuit c(2);
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  const Eigen::Matrix2cd h = gate_matrix(g1(GateKind::H, 0));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m.block<2, 2>(2 * i, 2 * j) =
          h(i, j) * Eigen::Matrix2cd::Identity();
    }
  c.append(Gate::opaque2(0, 1, m));  // H on qubit 1, identity on qubit 0
  const Circuit out = split_2q_unitaries(c);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.gates[0].qubits[0], 1);
  EXPECT_TRUE(equivalent_up_to_phase(c, out, 1e-9));
}

TEST(Split2qTest, NamedProductGateSplits) {
  // rzz(2*pi) equals -I, a Schmidt-rank-1 matrix: it must split (to nothing).
  const Circuit c = make_circuit(2, {g2(GateKind::Rzz, 0, 1, {2 * M_PI})});
  const Circuit out = split_2q_unitaries(c);
  EXPECT_EQ(out.size(), 0u);
}

// ---- optimize_cliffords ----

TEST(OptimizeCliffordsTest, DoubleHadamardSegmentVanishes) {
  const Circuit c = make_circuit(1, {g1(GateKind::H, 0), g1(GateKind::H, 0)});
  EXPECT_EQ(optimize_cliffords(c).size(), 0u);
}

TEST(OptimizeCliffordsTest, SSKeptWhenNotShorter) {
  // s.s is z up to synthesis, but the {h,s,cx} resynthesis is not strictly
  // shorter than two gates, so the segment stays.
  const Circuit c = make_circuit(1, {g1(GateKind::S, 0), g1(GateKind::S, 0)});
  const Circuit out = optimize_cliffords(c);
  EXPECT_TRUE(equivalent_up_to_phase(c, out, 1e-6));
  EXPECT_LE(out.size(), 2u);
}

TEST(OptimizeCliffordsTest, NonCliffordUntouched) {
  const Circuit c = make_circuit(1, {g1(GateKind::T, 0)});
  EXPECT_EQ(emit_qasm(optimize_cliffords(c)), emit_qasm(c));
}

TEST(OptimizeCliffordsTest, LongRedundantSegmentShrinks) {
  const Circuit c = make_circuit(
      2, {g2(GateKind::Cx, 0, 1), g1(GateKind::X, 0), g1(GateKind::X, 0),
          g2(GateKind::Cx, 0, 1), g1(GateKind::Z, 1), g1(GateKind::Z, 1)});
  const Circuit out = optimize_cliffords(c);
  EXPECT_LT(out.size(), c.size());
  EXPECT_TRUE(equivalent_up_to_phase(c, out, 1e-6));
}

TEST(OptimizeCliffordsTest, RandomCliffordSegmentsStayEquivalent) {
  GenSpec spec;
  spec.palette = {GateKind::H,  GateKind::S,  GateKind::Sdg, GateKind::X,
                  GateKind::Y,  GateKind::Z,  GateKind::Cx,  GateKind::Cz,
                  GateKind::Swap};
  spec.depth = 12;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    spec.num_qubits = 2 + static_cast<int>(seed % 4);
    spec.seed = 4000 + seed;
    const Circuit c = random_circuit(spec);
    const Circuit out = optimize_cliffords(c);
    EXPECT_TRUE(equivalent_up_to_phase(c, out, 1e-6)) << "seed " << seed;
    EXPECT_LE(out.size(), c.size());
  }
}

// ---- apply_passes ----

TEST(ApplyPassesTest, SingleSelectionExample) {
  const Circuit c = make_circuit(1, {g1(GateKind::H, 0), g1(GateKind::H, 0)});
  PassSelection sel;
  sel.baseline = {PassId::InverseCancellation};
  EXPECT_EQ(apply_passes(c, sel).size(), 0u);
}

TEST(ApplyPassesTest, MinimalCircuitSurvivesAllBaseline) {
  const Circuit c = make_circuit(2, {g2(GateKind::Cx, 0, 1)});
  PassSelection sel;
  for (int i = 0; i < kNumBaselinePasses; ++i) {
    sel.baseline.push_back(static_cast<PassId>(i));
  }
  const Circuit out = apply_passes(c, sel);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.gates[0].kind, GateKind::Cx);
}

TEST(ApplyPassesTest, DeterministicForFixedSelection) {
  const Circuit c = test::small_random(5, 25, 77);
  PassSelection sel;
  sel.baseline = {PassId::Optimize1qGates, PassId::TemplateOptimization};
  sel.misc = {PassId::OptimizeCliffords};
  EXPECT_EQ(emit_qasm_with_sidecar(apply_passes(c, sel)).qasm,
            emit_qasm_with_sidecar(apply_passes(c, sel)).qasm);
}

TEST(ApplyPassesTest, FullSelectionOracleEquivalence) {
  PassSelection sel;
  for (int i = 0; i < kNumBaselinePasses; ++i) {
    sel.baseline.push_back(static_cast<PassId>(i));
  }
  sel.misc = {PassId::Split2QUnitaries, PassId::OptimizeCliffords};
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Circuit c = test::small_random(4 + seed % 3, 15, 2000 + seed);
    const Circuit out = apply_passes(c, sel);
    EXPECT_TRUE(equivalent_up_to_phase(c, out, 1e-6)) << "seed " << seed;
  }
}

// ---- per-pass soundness + structural properties (unit scale) ----

TEST(PassPropertyTest, SoundnessSweep) {
  for (int p = 0; p < kNumPasses; ++p) {
    const PassId id = static_cast<PassId>(p);
    check_pass_on_random_circuits(id, 25, id == PassId::OptimizeCliffords ? 1e-6 : 1e-9);
  }
}

TEST(PassPropertyTest, GateCountMonotonicity) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Circuit c = test::small_random(5, 20, 3000 + seed);
    const GateCounts before = gate_counts(c);
    for (PassId id :
         {PassId::Optimize1qGates, PassId::InverseCancellation,
          PassId::CommutativeCancellation, PassId::RemoveIdentityEquivalent,
          PassId::ConsolidateBlocks, PassId::TemplateOptimization,
          PassId::OptimizeCliffords}) {
      EXPECT_LE(gate_counts(apply_pass(c, id)).total, before.total)
          << pass_name(id) << " seed " << seed;
    }
    EXPECT_LE(gate_counts(split_2q_unitaries(c)).two_qubit, before.two_qubit);
  }
}

TEST(PassPropertyTest, EmptyCircuitFlowsThroughEveryPass) {
  const Circuit empty(3);
  for (int p = 0; p < kNumPasses; ++p) {
    const Circuit out = apply_pass(empty, static_cast<PassId>(p));
    EXPECT_EQ(out.size(), 0u);
    EXPECT_EQ(out.num_qubits, 3);
  }
}

TEST(PassPropertyTest, OpaqueGatesFlowThroughEveryPass) {
  // Circuits read back from sidecar files contain opaque unitaries; every
  // pass must handle them soundly.
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = m(1, 1) = Complex(0, 1);
  m(2, 3) = m(3, 2) = 1.0;
  Eigen::Matrix2cd r;
  const double c = std::cos(0.4), s = std::sin(0.4);
  r << Complex(c, 0), Complex(-s, 0), Complex(s, 0), Complex(c, 0);

  Circuit circ(3);
  circ.append(test::g1(GateKind::H, 0));
  circ.append(Gate::opaque1(1, r));
  circ.append(test::g2(GateKind::Cx, 0, 1));
  circ.append(Gate::opaque2(1, 2, m));
  circ.append(test::g1(GateKind::T, 2));
  circ.append(test::g1(GateKind::T, 2));

  for (int p = 0; p < kNumPasses; ++p) {
    const PassId id = static_cast<PassId>(p);
    const Circuit out = apply_pass(circ, id);
    const double tol = id == PassId::OptimizeCliffords ? 1e-6 : 1e-9;
    EXPECT_TRUE(equivalent_up_to_phase(circ, out, tol)) << pass_name(id);
  }
}

TEST(PassPropertyTest, InverseAndTemplateIdempotent) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Circuit c = test::small_random(4, 20, 4000 + seed);
    const Circuit inv = inverse_cancellation(c);
    EXPECT_EQ(emit_qasm(inverse_cancellation(inv)), emit_qasm(inv));
    const Circuit tpl = template_optimization(c);
    EXPECT_EQ(emit_qasm(template_optimization(tpl)), emit_qasm(tpl));
  }
}

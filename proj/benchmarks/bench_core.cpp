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

#include <benchmark/benchmark.h>

#include "qcf/dataset.hpp"
#include "qcf/passes.hpp"
#include "qcf/qasm.hpp"
#include "qcf/random_circuit.hpp"
#include "qcf/simulator.hpp"

namespace {

qcf::Circuit reference_circuit(int qubits, int depth) {
  qcf::GenSpec spec;
  spec.num_qubits = qubits;
  spec.depth = depth;
  spec.seed = 12345;
  return qcf::random_circuit(spec);
}

void BM_RandomCircuit(benchmark::State& state) {
  qcf::GenSpec spec;
  spec.num_qubits = static_cast<int>(state.range(0));
  spec.depth = 50;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    spec.seed = seed++;
    benchmark::DoNotOptimize(qcf::random_circuit(spec));
  }
}
BENCHMARK(BM_RandomCircuit)->Arg(4)->Arg(8)->Arg(12);

void BM_SinglePass(benchmark::State& state) {
  const auto id = static_cast<qcf::PassId>(state.range(0));
  const qcf::Circuit c = reference_circuit(8, 50);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcf::apply_pass(c, id));
  }
  state.SetLabel(std::string(qcf::pass_name(id)));
}
BENCHMARK(BM_SinglePass)->DenseRange(0, qcf::kNumPasses - 1);

void BM_ApplyAllPasses(benchmark::State& state) {
  const qcf::Circuit c = reference_circuit(8, 50);
  qcf::PassSelection sel;
  for (int i = 0; i < qcf::kNumBaselinePasses; ++i) {
    sel.baseline.push_back(static_cast<qcf::PassId>(i));
  }
  sel.misc = {qcf::PassId::Split2QUnitaries, qcf::PassId::OptimizeCliffords};
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcf::apply_passes(c, sel));
  }
}
BENCHMARK(BM_ApplyAllPasses);

void BM_FullUnitary(benchmark::State& state) {
  const qcf::Circuit c = reference_circuit(static_cast<int>(state.range(0)), 20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcf::full_unitary(c));
  }
}
BENCHMARK(BM_FullUnitary)->Arg(4)->Arg(6)->Arg(8);

void BM_ExtractFeatures(benchmark::State& state) {
  const qcf::Circuit orig = reference_circuit(10, 50);
  const qcf::Circuit opt = qcf::optimize_1q_gates(orig);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcf::extract_features(orig, opt));
  }
}
BENCHMARK(BM_ExtractFeatures);

void BM_QasmRoundTrip(benchmark::State& state) {
  const std::string text = qcf::emit_qasm(reference_circuit(10, 50));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcf::parse_qasm(text));
  }
}
BENCHMARK(BM_QasmRoundTrip);

void BM_DatasetBuild(benchmark::State& state) {
  qcf::BuilderConfig cfg;
  cfg.num_samples = static_cast<int>(state.range(0));
  cfg.seed = 99;
  cfg.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcf::build_dataset(cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DatasetBuild)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

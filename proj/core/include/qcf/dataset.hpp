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

#include <cstdint>
#include <string>
#include <vector>

#include "qcf/features.hpp"

namespace qcf {

struct SampleMeta {
  std::uint64_t seed = 0;          // per-sample circuit seed
  int qubits = 0;
  std::vector<PassId> passes;      // applied passes in canonical order
};

/// Labeled sample matrix: X rows are 46-feature fingerprints, Y rows the
/// 7 binary labels.
struct Dataset {
  std::vector<FeatureVector> X;
  std::vector<LabelVector> Y;
  std::vector<SampleMeta> meta;

  std::size_t size() const { return X.size(); }
};

/// Synthetic dataset builder configuration. Defaults reproduce the standard
/// run: 10000 samples, 4..12 qubits, depth 50, misc probability 0.25.
struct BuilderConfig {
  int num_samples = 10000;
  int q_min = 4;
  int q_max = 12;
  int depth = 50;
  double misc_probability = 0.25;
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = hardware concurrency

  void validate() const;  // throws std::invalid_argument
};

/// Builds the dataset: per sample, draw a qubit count, generate a random
/// circuit, draw a non-empty baseline subset and (with probability p) a
/// possibly-empty misc subset, apply the passes and record features and
/// labels. Deterministic for a fixed seed; samples derive independent
/// per-index seeds so generation may run in parallel.
Dataset build_dataset(const BuilderConfig& cfg);

/// JSON-lines persistence: one record per sample,
/// {"x":[..46..],"y":[..7..],"meta":{"v":1,"seed":...,"qubits":...,"passes":[...]}}.
void save_dataset(const Dataset& ds, const std::string& path);
Dataset load_dataset(const std::string& path);

/// CSV export with a header row of feature and label names.
void export_csv(const Dataset& ds, const std::string& path);

}  // namespace qcf

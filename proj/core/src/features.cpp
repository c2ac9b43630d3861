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

#include "qcf/features.hpp"

namespace qcf {

namespace {

// Histogram slots in report order.
constexpr std::array<GateKind, 14> kHistogramKinds = {
    GateKind::U1, GateKind::U2,  GateKind::U3, GateKind::Rz, GateKind::X,
    GateKind::H,  GateKind::S,   GateKind::Sdg, GateKind::T, GateKind::Tdg,
    GateKind::Cx, GateKind::Cz,  GateKind::Swap, GateKind::Rzz};

constexpr std::array<std::string_view, kFeaturesPerSide> kSideNames = {
    "depth", "total_gates", "width", "qubits", "size",
    "u1",    "u2",          "u3",    "rz",     "x",
    "h",     "s",           "sdg",   "t",      "tdg",
    "cx",    "cz",          "swap",  "rzz",    "sum_1q",
    "sum_2q", "ratio_1q",   "ratio_2q"};

const std::array<std::string, kNumFeatures> kFeatureNames = [] {
  std::array<std::string, kNumFeatures> names;
  for (int i = 0; i < kFeaturesPerSide; ++i) {
    names[i] = "orig_" + std::string(kSideNames[i]);
    names[kFeaturesPerSide + i] = "opt_" + std::string(kSideNames[i]);
  }
  return names;
}();

constexpr std::array<std::string_view, kNumLabels> kLabelNames = {
    "opt1q", "inverse", "commutative", "remove-id", "consolidate",
    "template", "misc"};

}  // namespace

std::array<double, kFeaturesPerSide> side_features(const Circuit& c) {
  const GateCounts counts = gate_counts(c);
  std::array<double, kFeaturesPerSide> f{};
  int i = 0;
  f[i++] = static_cast<double>(depth(c));
  f[i++] = static_cast<double>(counts.total);
  f[i++] = static_cast<double>(c.num_qubits);  // register width
  f[i++] = static_cast<double>(c.num_qubits);  // qubit count
  f[i++] = static_cast<double>(counts.total);  // circuit size
  for (GateKind k : kHistogramKinds) f[i++] = static_cast<double>(counts.of(k));
  f[i++] = static_cast<double>(counts.one_qubit);
  f[i++] = static_cast<double>(counts.two_qubit);
  f[i++] = counts.total > 0 ? static_cast<double>(counts.one_qubit) / counts.total : 0.0;
  f[i++] = counts.total > 0 ? static_cast<double>(counts.two_qubit) / counts.total : 0.0;
  return f;
}

FeatureVector extract_features(const Circuit& original, const Circuit& optimized) {
  FeatureVector out{};
  const auto orig = side_features(original);
  const auto opt = side_features(optimized);
  for (int i = 0; i < kFeaturesPerSide; ++i) {
    out[i] = orig[i];
    out[kFeaturesPerSide + i] = opt[i];
  }
  return out;
}

std::string_view feature_name(int i) { return kFeatureNames[i]; }

std::string_view label_name(int i) { return kLabelNames[i]; }

LabelVector labels_from_selection(const PassSelection& sel) {
  LabelVector y{};
  for (PassId id : sel.baseline) y[static_cast<int>(id)] = 1;
  if (!sel.misc.empty()) y[kNumLabels - 1] = 1;
  return y;
}

}  // namespace qcf

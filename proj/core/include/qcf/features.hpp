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
#include <string_view>

#include "qcf/circuit.hpp"
#include "qcf/passes.hpp"

namespace qcf {

/// 23 statistics per circuit: five global descriptors (depth, total gate
/// count, register width, qubit count, circuit size), the 14-gate histogram
/// {u1,u2,u3,rz,x,h,s,sdg,t,tdg,cx,cz,swap,rzz}, then 1q/2q sums and ratios.
inline constexpr int kFeaturesPerSide = 23;

/// Fingerprint of an (original, optimized) pair: the original side's 23
/// statistics followed by the optimized side's.
inline constexpr int kNumFeatures = 2 * kFeaturesPerSide;

using FeatureVector = std::array<double, kNumFeatures>;

/// 7 binary flags: the six baseline passes in canonical order, then the
/// Miscellaneous flag.
inline constexpr int kNumLabels = 7;
using LabelVector = std::array<std::uint8_t, kNumLabels>;

std::array<double, kFeaturesPerSide> side_features(const Circuit& c);
FeatureVector extract_features(const Circuit& original, const Circuit& optimized);

/// Column name of feature i ("orig_depth", "opt_cx", ...), for CSV headers
/// and reports.
std::string_view feature_name(int i);

/// Label column name ("opt1q" .. "template", "misc").
std::string_view label_name(int i);

/// Builds the label vector from a pass selection: baseline flags plus the
/// Miscellaneous flag when any misc pass was applied.
LabelVector labels_from_selection(const PassSelection& sel);

}  // namespace qcf

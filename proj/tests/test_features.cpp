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

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace qcf;
using test::g1;
using test::g2;
using test::make_circuit;

TEST(FeaturesTest, EmptyPairHasOnlyWidthEntries) {
  const Circuit empty(2);
  const FeatureVector f = extract_features(empty, empty);
  for (int side = 0; side < 2; ++side) {
    const int at = side * kFeaturesPerSide;
    EXPECT_EQ(f[at + 0], 0.0);  // depth
    EXPECT_EQ(f[at + 1], 0.0);  // total
    EXPECT_EQ(f[at + 2], 2.0);  // width
    EXPECT_EQ(f[at + 3], 2.0);  // qubits
    EXPECT_EQ(f[at + 4], 0.0);  // size
    for (int h = 5; h < 19; ++h) EXPECT_EQ(f[at + h], 0.0);
    EXPECT_EQ(f[at + 19], 0.0);  // 1q sum
    EXPECT_EQ(f[at + 20], 0.0);  // 2q sum
    EXPECT_EQ(f[at + 21], 0.0);  // ratios defined as 0 on empty circuits
    EXPECT_EQ(f[at + 22], 0.0);
  }
}

TEST(FeaturesTest, HCxSideFeatures) {
  const Circuit c = make_circuit(2, {g1(GateKind::H, 0), g2(GateKind::Cx, 0, 1)});
  const auto f = side_features(c);
  EXPECT_EQ(f[0], 2.0);  // depth
  EXPECT_EQ(f[1], 2.0);  // total
  EXPECT_EQ(f[2], 2.0);  // width
  EXPECT_EQ(f[3], 2.0);  // qubits
  EXPECT_EQ(f[4], 2.0);  // size
  EXPECT_EQ(f[10], 1.0);  // h slot
  EXPECT_EQ(f[15], 1.0);  // cx slot
  EXPECT_EQ(f[19], 1.0);  // 1q sum
  EXPECT_EQ(f[20], 1.0);  // 2q sum
  EXPECT_EQ(f[21], 0.5);
  EXPECT_EQ(f[22], 0.5);
}

TEST(FeaturesTest, VectorLengthIsAlways46) {
  const Circuit a = test::small_random(4, 10, 1);
  const Circuit b = test::small_random(4, 10, 2);
  const FeatureVector f = extract_features(a, b);
  EXPECT_EQ(f.size(), 46u);
  EXPECT_EQ(kNumFeatures, 46);
}

TEST(FeaturesTest, OpaqueCountsOnlyInAggregates) {
  Circuit c(2);
  c.append(Gate::opaque2(0, 1, Eigen::Matrix4cd::Identity()));
  const auto f = side_features(c);
  EXPECT_EQ(f[1], 1.0);   // total
  for (int h = 5; h < 19; ++h) EXPECT_EQ(f[h], 0.0);
  EXPECT_EQ(f[20], 1.0);  // 2q sum
  EXPECT_EQ(f[22], 1.0);  // 2q ratio
}

TEST(FeaturesTest, FeatureNamesAreStable) {
  EXPECT_EQ(feature_name(0), "orig_depth");
  EXPECT_EQ(feature_name(23), "opt_depth");
  EXPECT_EQ(feature_name(15), "orig_cx");
  EXPECT_EQ(feature_name(45), "opt_ratio_2q");
  EXPECT_EQ(label_name(0), "opt1q");
  EXPECT_EQ(label_name(6), "misc");
}

TEST(LabelsTest, FromSelection) {
  PassSelection sel;
  sel.baseline = {PassId::InverseCancellation, PassId::TemplateOptimization};
  LabelVector y = labels_from_selection(sel);
  EXPECT_EQ(y[1], 1);
  EXPECT_EQ(y[5], 1);
  EXPECT_EQ(y[6], 0);
  sel.misc = {PassId::Split2QUnitaries};
  y = labels_from_selection(sel);
  EXPECT_EQ(y[6], 1);
}

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

#include <cmath>
#include <stdexcept>

#include "qcf/ml.hpp"

namespace qcf::ml {

Normalizer Normalizer::fit(const std::vector<FeatureVector>& X) {
  if (X.empty()) throw std::invalid_argument("Normalizer::fit: empty training set");
  Normalizer n;
  const double count = static_cast<double>(X.size());
  for (const FeatureVector& row : X) {
    for (int i = 0; i < kNumFeatures; ++i) n.mean[i] += row[i];
  }
  for (int i = 0; i < kNumFeatures; ++i) n.mean[i] /= count;
  for (const FeatureVector& row : X) {
    for (int i = 0; i < kNumFeatures; ++i) {
      const double d = row[i] - n.mean[i];
      n.stddev[i] += d * d;
    }
  }
  for (int i = 0; i < kNumFeatures; ++i) {
    n.stddev[i] = std::sqrt(n.stddev[i] / count);
    if (n.stddev[i] < 1e-12) n.stddev[i] = 1.0;  // constant feature: pass through
  }
  return n;
}

std::array<double, kNumFeatures> Normalizer::apply(const FeatureVector& x) const {
  std::array<double, kNumFeatures> out;
  for (int i = 0; i < kNumFeatures; ++i) out[i] = (x[i] - mean[i]) / stddev[i];
  return out;
}

}  // namespace qcf::ml

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

#include <stdexcept>

#include "qcf/ml.hpp"

namespace qcf::ml {

namespace {

double safe_div(double num, double den) { return den > 0.0 ? num / den : 0.0; }

double f1_of(double p, double r) { return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0; }

}  // namespace

EvalReport compute_metrics(const std::vector<LabelVector>& predicted,
                           const std::vector<LabelVector>& truth) {
  if (predicted.size() != truth.size() || predicted.empty()) {
    throw std::invalid_argument("compute_metrics: size mismatch or empty input");
  }

  std::array<long, kNumLabels> tp{}, fp{}, fn{};
  double jaccard_sum = 0.0;
  for (std::size_t s = 0; s < predicted.size(); ++s) {
    int inter = 0, uni = 0;
    for (int l = 0; l < kNumLabels; ++l) {
      const bool p = predicted[s][l] != 0;
      const bool t = truth[s][l] != 0;
      inter += (p && t) ? 1 : 0;
      uni += (p || t) ? 1 : 0;
      tp[l] += (p && t) ? 1 : 0;
      fp[l] += (p && !t) ? 1 : 0;
      fn[l] += (!p && t) ? 1 : 0;
    }
    jaccard_sum += uni == 0 ? 1.0 : static_cast<double>(inter) / uni;
  }

  EvalReport rep;
  long tp_all = 0, fp_all = 0, fn_all = 0;
  double f1_sum = 0.0;
  for (int l = 0; l < kNumLabels; ++l) {
    const double p = safe_div(static_cast<double>(tp[l]), static_cast<double>(tp[l] + fp[l]));
    const double r = safe_div(static_cast<double>(tp[l]), static_cast<double>(tp[l] + fn[l]));
    rep.per_label[l] = {p, r, f1_of(p, r)};
    f1_sum += rep.per_label[l].f1;
    tp_all += tp[l];
    fp_all += fp[l];
    fn_all += fn[l];
  }
  rep.avg_f1 = f1_sum / kNumLabels;
  const double micro_p = safe_div(static_cast<double>(tp_all), static_cast<double>(tp_all + fp_all));
  const double micro_r = safe_div(static_cast<double>(tp_all), static_cast<double>(tp_all + fn_all));
  rep.micro_f1 = f1_of(micro_p, micro_r);
  rep.hamming_score = jaccard_sum / static_cast<double>(predicted.size());
  return rep;
}

EvalReport evaluate(const TrainedModel& model, const Dataset& test_set) {
  if (test_set.size() == 0) throw std::invalid_argument("evaluate: empty test set");
  std::vector<LabelVector> pred;
  pred.reserve(test_set.size());
  for (const FeatureVector& x : test_set.X) {
    pred.push_back(LabelVector{});
    const Prediction p = model.predict(x);
    for (int l = 0; l < kNumLabels; ++l) pred.back()[l] = p.decisions[l];
  }
  return compute_metrics(pred, test_set.Y);
}

}  // namespace qcf::ml

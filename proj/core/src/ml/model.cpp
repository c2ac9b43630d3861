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

#include "ml/model_impls.hpp"

namespace qcf::ml {

namespace {

constexpr std::array<std::string_view, 5> kKindNames = {"nn", "logreg", "gboost",
                                                        "rforest", "knn"};

}  // namespace

std::string_view model_kind_name(ModelKind k) {
  return kKindNames[static_cast<int>(k)];
}

std::optional<ModelKind> model_kind_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return static_cast<ModelKind>(i);
  }
  return std::nullopt;
}

TrainedModel::TrainedModel() { thresholds.fill(0.5); }

Prediction TrainedModel::predict(const FeatureVector& x) const {
  if (!impl) throw std::logic_error("predict: model not trained");
  const auto normalized = norm.apply(x);
  Eigen::VectorXd xv(kNumFeatures);
  for (int i = 0; i < kNumFeatures; ++i) xv[i] = normalized[i];
  const Eigen::VectorXd probs = impl->predict_proba(xv);

  Prediction p;
  for (int l = 0; l < kNumLabels; ++l) {
    p.probabilities[l] = probs[l];
    p.decisions[l] = probs[l] >= thresholds[l] ? 1 : 0;
  }
  return p;
}

TrainedModel train(ModelKind kind, const Dataset& train_set,
                   const TrainOptions& options, std::uint64_t seed, TrainLog* log) {
  if (train_set.size() == 0) {
    throw std::invalid_argument("train: empty training set");
  }

  TrainedModel model;
  model.kind = kind;
  model.norm = Normalizer::fit(train_set.X);

  const int n = static_cast<int>(train_set.size());
  Eigen::MatrixXd x(n, kNumFeatures);
  Eigen::MatrixXd y(n, kNumLabels);
  for (int i = 0; i < n; ++i) {
    const auto normalized = model.norm.apply(train_set.X[i]);
    for (int f = 0; f < kNumFeatures; ++f) x(i, f) = normalized[f];
    for (int l = 0; l < kNumLabels; ++l) y(i, l) = train_set.Y[i][l];
  }

  if (log) {
    for (int l = 0; l < kNumLabels; ++l) {
      const double prevalence = y.col(l).mean();
      if (prevalence == 0.0 || prevalence == 1.0) {
        log->lines.push_back("degenerate label '" + std::string(label_name(l)) +
                             "': single class in training set, predictor is constant");
      }
    }
  }

  switch (kind) {
    case ModelKind::NeuralNetwork:
      model.impl = train_neural_net(x, y, options, seed, log);
      break;
    case ModelKind::LogisticRegression:
      model.impl = train_logistic(x, y, options, seed, log);
      break;
    case ModelKind::GradientBoosting:
      model.impl = train_boosting(x, y, options, seed, log);
      break;
    case ModelKind::RandomForest:
      model.impl = train_forest(x, y, options, seed, log);
      break;
    case ModelKind::KNearestNeighbors:
      model.impl = train_knn(x, y, options, seed, log);
      break;
  }
  return model;
}

}  // namespace qcf::ml

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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcf/dataset.hpp"

namespace qcf::ml {

enum class ModelKind : std::uint8_t {
  NeuralNetwork,
  LogisticRegression,
  GradientBoosting,
  RandomForest,
  KNearestNeighbors,
};

/// CLI string for a model kind ("nn", "logreg", "gboost", "rforest", "knn").
std::string_view model_kind_name(ModelKind k);
std::optional<ModelKind> model_kind_from_name(std::string_view name);

/// Training hyperparameters. The defaults are the reference configuration;
/// every run logs the resolved values.
struct TrainOptions {
  // neural network: 46 -> 128 -> 64 -> 7, relu hidden, sigmoid out
  int nn_hidden1 = 128;
  int nn_hidden2 = 64;
  int nn_epochs = 100;
  int nn_batch = 64;
  double nn_learning_rate = 1e-3;

  // per-label binary logistic regression, full-batch gradient descent
  int logreg_iterations = 500;
  double logreg_learning_rate = 0.05;
  double logreg_l2 = 1e-4;

  // per-label gradient boosting on logistic loss
  int gb_rounds = 100;
  int gb_max_depth = 3;
  double gb_shrinkage = 0.1;
  int gb_min_leaf = 5;

  // per-label random forest, Gini splits, ceil(sqrt(46)) features per split
  int rf_trees = 300;
  int rf_min_split = 2;
  int rf_max_depth = 25;

  int knn_k = 5;

  int threads = 0;  // 0 = hardware concurrency (forest/boosting training)
};

/// Per-feature z-score statistics, always fit on the training split only.
struct Normalizer {
  std::array<double, kNumFeatures> mean{};
  std::array<double, kNumFeatures> stddev{};

  static Normalizer fit(const std::vector<FeatureVector>& X);
  std::array<double, kNumFeatures> apply(const FeatureVector& x) const;
};

struct Prediction {
  std::array<double, kNumLabels> probabilities{};
  std::array<std::uint8_t, kNumLabels> decisions{};
};

/// Type-erased trained predictor; concrete parameterizations live in the
/// implementation.
class ModelImpl;

struct TrainedModel {
  ModelKind kind = ModelKind::RandomForest;
  Normalizer norm;
  std::array<double, kNumLabels> thresholds;
  std::shared_ptr<const ModelImpl> impl;

  TrainedModel();
  Prediction predict(const FeatureVector& x) const;
};

struct TrainLog {
  std::vector<std::string> lines;
  std::vector<double> nn_epoch_losses;  // full-train loss after each epoch
};

/// Trains a model of the given kind. Deterministic for a fixed seed, also
/// when tree training runs on multiple threads.
TrainedModel train(ModelKind kind, const Dataset& train_set,
                   const TrainOptions& options, std::uint64_t seed,
                   TrainLog* log = nullptr);

/// Seeded shuffle followed by a ratio split into (train, test).
/// Throws std::invalid_argument unless 0 < ratio < 1 and both sides end up
/// non-empty.
std::pair<Dataset, Dataset> split_dataset(const Dataset& ds, double ratio,
                                          std::uint64_t seed);

struct LabelScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct EvalReport {
  std::array<LabelScore, kNumLabels> per_label;
  double hamming_score = 0.0;  // mean per-sample Jaccard index
  double avg_f1 = 0.0;         // unweighted mean of the 7 per-label F1s
  double micro_f1 = 0.0;       // from globally summed TP/FP/FN
};

/// Metrics from prediction/truth pairs; zero-denominator scores are 0 and a
/// sample with empty prediction and truth contributes Jaccard 1.
EvalReport compute_metrics(const std::vector<LabelVector>& predicted,
                           const std::vector<LabelVector>& truth);

EvalReport evaluate(const TrainedModel& model, const Dataset& test_set);

/// Versioned JSON model persistence; loaded models predict bit-identically.
void save_model(const TrainedModel& model, const std::string& path);
TrainedModel load_model(const std::string& path);

}  // namespace qcf::ml

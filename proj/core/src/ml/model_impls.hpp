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

#include <nlohmann/json.hpp>

#include "qcf/ml.hpp"
#include "qcf/ml/neural_net.hpp"

namespace qcf::ml {

using json = nlohmann::json;

class ModelImpl {
 public:
  virtual ~ModelImpl() = default;
  virtual ModelKind kind() const = 0;
  /// x is already normalized; returns kNumLabels probabilities.
  virtual Eigen::VectorXd predict_proba(const Eigen::VectorXd& x) const = 0;
  virtual void serialize(json& params) const = 0;
};

// ---- trees shared by the forest and boosting models ----

/// Flat binary tree; leaves have feature == -1 and carry `value`.
struct Tree {
  struct Node {
    int feature = -1;
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    double value = 0.0;
  };
  std::vector<Node> nodes;

  double predict(const Eigen::VectorXd& x) const {
    int n = 0;
    while (nodes[n].feature >= 0) {
      n = x[nodes[n].feature] <= nodes[n].threshold ? nodes[n].left : nodes[n].right;
    }
    return nodes[n].value;
  }

  json to_json() const;
  static Tree from_json(const json& j);
};

/// Gini-split classification tree for the random forest.
Tree grow_gini_tree(const Eigen::MatrixXd& x, const std::vector<std::uint8_t>& y,
                    const std::vector<int>& sample_indices, int mtry,
                    int min_split, int max_depth, std::uint64_t seed);

/// Least-squares/Newton regression tree on gradient-hessian targets for
/// boosting.
Tree grow_regression_tree(const Eigen::MatrixXd& x, const Eigen::VectorXd& grad,
                          const Eigen::VectorXd& hess, int max_depth, int min_leaf);

// ---- concrete models ----

class NeuralNetModel final : public ModelImpl {
 public:
  explicit NeuralNetModel(MlpNetwork net) : net_(std::move(net)) {}
  ModelKind kind() const override { return ModelKind::NeuralNetwork; }
  Eigen::VectorXd predict_proba(const Eigen::VectorXd& x) const override;
  void serialize(json& params) const override;

  MlpNetwork net_;
};

class LogisticModel final : public ModelImpl {
 public:
  ModelKind kind() const override { return ModelKind::LogisticRegression; }
  Eigen::VectorXd predict_proba(const Eigen::VectorXd& x) const override;
  void serialize(json& params) const override;

  Eigen::MatrixXd w;  // labels x features
  Eigen::VectorXd b;  // labels
};

class BoostingModel final : public ModelImpl {
 public:
  ModelKind kind() const override { return ModelKind::GradientBoosting; }
  Eigen::VectorXd predict_proba(const Eigen::VectorXd& x) const override;
  void serialize(json& params) const override;

  std::array<double, kNumLabels> f0{};
  double shrinkage = 0.1;
  std::array<std::vector<Tree>, kNumLabels> trees;
};

class ForestModel final : public ModelImpl {
 public:
  ModelKind kind() const override { return ModelKind::RandomForest; }
  Eigen::VectorXd predict_proba(const Eigen::VectorXd& x) const override;
  void serialize(json& params) const override;

  std::array<std::vector<Tree>, kNumLabels> trees;
};

class KnnModel final : public ModelImpl {
 public:
  ModelKind kind() const override { return ModelKind::KNearestNeighbors; }
  Eigen::VectorXd predict_proba(const Eigen::VectorXd& x) const override;
  void serialize(json& params) const override;

  int k = 5;
  Eigen::MatrixXd train_x;  // normalized
  Eigen::MatrixXi train_y;
};

// per-kind trainers (train.X already normalized)
std::shared_ptr<ModelImpl> train_neural_net(const Eigen::MatrixXd& x,
                                            const Eigen::MatrixXd& y,
                                            const TrainOptions& opt,
                                            std::uint64_t seed, TrainLog* log);
std::shared_ptr<ModelImpl> train_logistic(const Eigen::MatrixXd& x,
                                          const Eigen::MatrixXd& y,
                                          const TrainOptions& opt,
                                          std::uint64_t seed, TrainLog* log);
std::shared_ptr<ModelImpl> train_boosting(const Eigen::MatrixXd& x,
                                          const Eigen::MatrixXd& y,
                                          const TrainOptions& opt,
                                          std::uint64_t seed, TrainLog* log);
std::shared_ptr<ModelImpl> train_forest(const Eigen::MatrixXd& x,
                                        const Eigen::MatrixXd& y,
                                        const TrainOptions& opt,
                                        std::uint64_t seed, TrainLog* log);
std::shared_ptr<ModelImpl> train_knn(const Eigen::MatrixXd& x,
                                     const Eigen::MatrixXd& y,
                                     const TrainOptions& opt, std::uint64_t seed,
                                     TrainLog* log);

std::shared_ptr<ModelImpl> model_from_json(ModelKind kind, const json& params);

}  // namespace qcf::ml

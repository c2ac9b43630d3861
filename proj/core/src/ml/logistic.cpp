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

#include "ml/model_impls.hpp"

namespace qcf::ml {

Eigen::VectorXd LogisticModel::predict_proba(const Eigen::VectorXd& x) const {
  const Eigen::VectorXd z = w * x + b;
  return ((-z.array()).exp() + 1.0).inverse().matrix();
}

void LogisticModel::serialize(json& params) const {
  json weights = json::array();
  for (Eigen::Index l = 0; l < w.rows(); ++l) {
    json row = json::array();
    for (Eigen::Index f = 0; f < w.cols(); ++f) row.push_back(w(l, f));
    weights.push_back(std::move(row));
  }
  json bias = json::array();
  for (Eigen::Index l = 0; l < b.size(); ++l) bias.push_back(b[l]);
  params["w"] = std::move(weights);
  params["b"] = std::move(bias);
}

// Independent per-label binary logistic models; expressed as one weight
// matrix and trained with full-batch gradient descent plus L2.
std::shared_ptr<ModelImpl> train_logistic(const Eigen::MatrixXd& x,
                                          const Eigen::MatrixXd& y,
                                          const TrainOptions& opt,
                                          std::uint64_t /*seed*/, TrainLog* log) {
  const double n = static_cast<double>(x.rows());
  auto model = std::make_shared<LogisticModel>();
  model->w = Eigen::MatrixXd::Zero(y.cols(), x.cols());
  model->b = Eigen::VectorXd::Zero(y.cols());

  for (int it = 0; it < opt.logreg_iterations; ++it) {
    Eigen::MatrixXd z = (x * model->w.transpose()).rowwise() + model->b.transpose();
    Eigen::MatrixXd p = ((-z.array()).exp() + 1.0).inverse().matrix();
    Eigen::MatrixXd err = p - y;
    Eigen::MatrixXd grad_w = err.transpose() * x / n + opt.logreg_l2 * model->w;
    Eigen::VectorXd grad_b = err.colwise().mean().transpose();
    model->w -= opt.logreg_learning_rate * grad_w;
    model->b -= opt.logreg_learning_rate * grad_b;
  }

  if (log) {
    log->lines.push_back("logreg: iterations=" + std::to_string(opt.logreg_iterations) +
                         " lr=" + std::to_string(opt.logreg_learning_rate) +
                         " l2=" + std::to_string(opt.logreg_l2));
  }
  return model;
}

}  // namespace qcf::ml

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

#include <algorithm>

#include "ml/model_impls.hpp"

namespace qcf::ml {

Eigen::VectorXd KnnModel::predict_proba(const Eigen::VectorXd& x) const {
  const int n = static_cast<int>(train_x.rows());
  const int kk = std::min(k, n);
  const Eigen::VectorXd d2 =
      (train_x.rowwise() - x.transpose()).rowwise().squaredNorm();

  // k nearest with deterministic tie-breaking by train index.
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::partial_sort(idx.begin(), idx.begin() + kk, idx.end(), [&](int a, int b) {
    if (d2[a] != d2[b]) return d2[a] < d2[b];
    return a < b;
  });

  Eigen::VectorXd out = Eigen::VectorXd::Zero(kNumLabels);
  for (int i = 0; i < kk; ++i) {
    for (int l = 0; l < kNumLabels; ++l) out[l] += train_y(idx[i], l);
  }
  return out / static_cast<double>(kk);
}

void KnnModel::serialize(json& params) const {
  params["k"] = k;
  json xs = json::array();
  for (Eigen::Index i = 0; i < train_x.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < train_x.cols(); ++j) row.push_back(train_x(i, j));
    xs.push_back(std::move(row));
  }
  json ys = json::array();
  for (Eigen::Index i = 0; i < train_y.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < train_y.cols(); ++j) row.push_back(train_y(i, j));
    ys.push_back(std::move(row));
  }
  params["x"] = std::move(xs);
  params["y"] = std::move(ys);
}

std::shared_ptr<ModelImpl> train_knn(const Eigen::MatrixXd& x,
                                     const Eigen::MatrixXd& y,
                                     const TrainOptions& opt,
                                     std::uint64_t /*seed*/, TrainLog* log) {
  auto model = std::make_shared<KnnModel>();
  model->k = opt.knn_k;
  model->train_x = x;
  model->train_y = y.cast<int>();
  if (log) {
    log->lines.push_back("knn: k=" + std::to_string(opt.knn_k) +
                         " stored=" + std::to_string(x.rows()));
  }
  return model;
}

}  // namespace qcf::ml

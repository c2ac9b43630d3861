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
#include <thread>

#include "ml/model_impls.hpp"

namespace qcf::ml {

namespace {

double sigmoid1(double z) { return 1.0 / (1.0 + std::exp(-z)); }

double clipped_logit(double p) {
  const double c = std::min(1.0 - 1e-6, std::max(1e-6, p));
  return std::log(c / (1.0 - c));
}

}  // namespace

Eigen::VectorXd BoostingModel::predict_proba(const Eigen::VectorXd& x) const {
  Eigen::VectorXd out(kNumLabels);
  for (int l = 0; l < kNumLabels; ++l) {
    double f = f0[l];
    for (const Tree& t : trees[l]) f += shrinkage * t.predict(x);
    out[l] = sigmoid1(f);
  }
  return out;
}

void BoostingModel::serialize(json& params) const {
  params["f0"] = f0;
  params["shrinkage"] = shrinkage;
  json labels = json::array();
  for (int l = 0; l < kNumLabels; ++l) {
    json arr = json::array();
    for (const Tree& t : trees[l]) arr.push_back(t.to_json());
    labels.push_back(std::move(arr));
  }
  params["trees"] = std::move(labels);
}

std::shared_ptr<ModelImpl> train_boosting(const Eigen::MatrixXd& x,
                                          const Eigen::MatrixXd& y,
                                          const TrainOptions& opt,
                                          std::uint64_t /*seed*/, TrainLog* log) {
  const int n = static_cast<int>(x.rows());
  auto model = std::make_shared<BoostingModel>();
  model->shrinkage = opt.gb_shrinkage;

  auto train_label = [&](int l) {
    const Eigen::VectorXd yl = y.col(l);
    model->f0[l] = clipped_logit(yl.mean());
    Eigen::VectorXd f = Eigen::VectorXd::Constant(n, model->f0[l]);
    model->trees[l].reserve(opt.gb_rounds);
    Eigen::VectorXd grad(n), hess(n);
    for (int round = 0; round < opt.gb_rounds; ++round) {
      for (int i = 0; i < n; ++i) {
        const double p = sigmoid1(f[i]);
        grad[i] = p - yl[i];
        hess[i] = std::max(p * (1.0 - p), 1e-12);
      }
      Tree t = grow_regression_tree(x, grad, hess, opt.gb_max_depth, opt.gb_min_leaf);
      for (int i = 0; i < n; ++i) {
        f[i] += opt.gb_shrinkage * t.predict(x.row(i).transpose());
      }
      model->trees[l].push_back(std::move(t));
    }
  };

  unsigned n_threads = opt.threads > 0 ? opt.threads : std::thread::hardware_concurrency();
  n_threads = std::min<unsigned>(std::max<unsigned>(n_threads, 1), kNumLabels);
  if (n_threads <= 1) {
    for (int l = 0; l < kNumLabels; ++l) train_label(l);
  } else {
    std::atomic<int> next{0};
    auto worker = [&]() {
      for (;;) {
        const int l = next.fetch_add(1);
        if (l >= kNumLabels) return;
        train_label(l);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  if (log) {
    log->lines.push_back("gboost: rounds=" + std::to_string(opt.gb_rounds) +
                         " depth=" + std::to_string(opt.gb_max_depth) +
                         " shrinkage=" + std::to_string(opt.gb_shrinkage) +
                         " min_leaf=" + std::to_string(opt.gb_min_leaf));
  }
  return model;
}

}  // namespace qcf::ml

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

#include <atomic>
#include <cmath>
#include <thread>

#include "ml/model_impls.hpp"
#include "qcf/rng.hpp"

namespace qcf::ml {

Eigen::VectorXd ForestModel::predict_proba(const Eigen::VectorXd& x) const {
  Eigen::VectorXd out(kNumLabels);
  for (int l = 0; l < kNumLabels; ++l) {
    double votes = 0.0;
    for (const Tree& t : trees[l]) votes += t.predict(x);
    out[l] = trees[l].empty() ? 0.0 : votes / static_cast<double>(trees[l].size());
  }
  return out;
}

void ForestModel::serialize(json& params) const {
  json labels = json::array();
  for (int l = 0; l < kNumLabels; ++l) {
    json arr = json::array();
    for (const Tree& t : trees[l]) arr.push_back(t.to_json());
    labels.push_back(std::move(arr));
  }
  params["trees"] = std::move(labels);
}

std::shared_ptr<ModelImpl> train_forest(const Eigen::MatrixXd& x,
                                        const Eigen::MatrixXd& y,
                                        const TrainOptions& opt,
                                        std::uint64_t seed, TrainLog* log) {
  const int n = static_cast<int>(x.rows());
  const int mtry = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(x.cols()))));

  auto model = std::make_shared<ForestModel>();
  for (int l = 0; l < kNumLabels; ++l) model->trees[l].resize(opt.rf_trees);

  std::array<std::vector<std::uint8_t>, kNumLabels> labels;
  for (int l = 0; l < kNumLabels; ++l) {
    labels[l].resize(n);
    for (int i = 0; i < n; ++i) labels[l][i] = y(i, l) > 0.5 ? 1 : 0;
  }

  const int total_tasks = kNumLabels * opt.rf_trees;
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int task = next.fetch_add(1);
      if (task >= total_tasks) return;
      const int l = task / opt.rf_trees;
      const int t = task % opt.rf_trees;
      RngStream rng(derive_seed(seed, 7919ULL * l + t));
      std::vector<int> bootstrap(n);
      for (int i = 0; i < n; ++i) {
        bootstrap[i] = static_cast<int>(rng.next_below(n));
      }
      model->trees[l][t] =
          grow_gini_tree(x, labels[l], bootstrap, mtry, opt.rf_min_split,
                         opt.rf_max_depth, rng.next_u64());
    }
  };

  unsigned n_threads = opt.threads > 0 ? opt.threads : std::thread::hardware_concurrency();
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  if (log) {
    log->lines.push_back("rforest: trees_per_label=" + std::to_string(opt.rf_trees) +
                         " mtry=" + std::to_string(mtry) +
                         " min_split=" + std::to_string(opt.rf_min_split) +
                         " max_depth=" + std::to_string(opt.rf_max_depth));
  }
  return model;
}

}  // namespace qcf::ml

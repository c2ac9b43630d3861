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
#include <cmath>

#include "ml/model_impls.hpp"
#include "qcf/rng.hpp"

namespace qcf::ml {

json Tree::to_json() const {
  json feat = json::array(), thr = json::array(), left = json::array(),
       right = json::array(), val = json::array();
  for (const Node& n : nodes) {
    feat.push_back(n.feature);
    thr.push_back(n.threshold);
    left.push_back(n.left);
    right.push_back(n.right);
    val.push_back(n.value);
  }
  return json{{"feat", feat}, {"thresh", thr}, {"left", left},
              {"right", right}, {"value", val}};
}

Tree Tree::from_json(const json& j) {
  Tree t;
  const std::size_t n = j.at("feat").size();
  if (j.at("thresh").size() != n || j.at("left").size() != n ||
      j.at("right").size() != n || j.at("value").size() != n) {
    throw std::runtime_error("model: inconsistent tree node arrays");
  }
  t.nodes.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    t.nodes[i] = {j["feat"][i].get<int>(), j["thresh"][i].get<double>(),
                  j["left"][i].get<int>(), j["right"][i].get<int>(),
                  j["value"][i].get<double>()};
  }
  return t;
}

namespace {

struct GiniFrame {
  std::vector<int> samples;
  int depth;
  int node;
};

}  // namespace

Tree grow_gini_tree(const Eigen::MatrixXd& x, const std::vector<std::uint8_t>& y,
                    const std::vector<int>& sample_indices, int mtry,
                    int min_split, int max_depth, std::uint64_t seed) {
  Tree tree;
  RngStream rng(seed);
  const int num_features = static_cast<int>(x.cols());
  std::vector<int> feature_pool(num_features);

  std::vector<GiniFrame> stack;
  tree.nodes.emplace_back();
  stack.push_back({sample_indices, 0, 0});

  std::vector<std::pair<double, std::uint8_t>> sorted;
  while (!stack.empty()) {
    GiniFrame frame = std::move(stack.back());
    stack.pop_back();
    const std::vector<int>& samples = frame.samples;
    const int n = static_cast<int>(samples.size());

    int pos = 0;
    for (int idx : samples) pos += y[idx];
    const bool pure = pos == 0 || pos == n;

    auto make_leaf = [&]() {
      tree.nodes[frame.node].feature = -1;
      tree.nodes[frame.node].value = 2 * pos >= n ? 1.0 : 0.0;
    };
    if (pure || n < min_split || frame.depth >= max_depth) {
      make_leaf();
      continue;
    }

    // Draw mtry distinct candidate features.
    for (int f = 0; f < num_features; ++f) feature_pool[f] = f;
    const int draws = std::min(mtry, num_features);
    for (int d = 0; d < draws; ++d) {
      const int pick = d + static_cast<int>(rng.next_below(num_features - d));
      std::swap(feature_pool[d], feature_pool[pick]);
    }

    double best_score = -1.0;
    int best_feature = -1;
    double best_threshold = 0.0;
    for (int d = 0; d < draws; ++d) {
      const int f = feature_pool[d];
      sorted.clear();
      sorted.reserve(n);
      for (int idx : samples) sorted.emplace_back(x(idx, f), y[idx]);
      std::sort(sorted.begin(), sorted.end());

      int left_n = 0, left_pos = 0;
      for (int i = 0; i + 1 < n; ++i) {
        left_n += 1;
        left_pos += sorted[i].second;
        if (sorted[i].first == sorted[i + 1].first) continue;
        const int right_n = n - left_n;
        const int right_pos = pos - left_pos;
        const double pl = static_cast<double>(left_pos) / left_n;
        const double pr = static_cast<double>(right_pos) / right_n;
        // Weighted negative Gini impurity of the children; larger is better.
        const double score = left_n * (pl * pl + (1 - pl) * (1 - pl)) +
                             right_n * (pr * pr + (1 - pr) * (1 - pr));
        if (score > best_score + 1e-12) {
          best_score = score;
          best_feature = f;
          best_threshold = 0.5 * (sorted[i].first + sorted[i + 1].first);
        }
      }
    }

    if (best_feature < 0) {
      make_leaf();
      continue;
    }

    std::vector<int> left, right;
    for (int idx : samples) {
      (x(idx, best_feature) <= best_threshold ? left : right).push_back(idx);
    }
    if (left.empty() || right.empty()) {
      make_leaf();
      continue;
    }

    const int li = static_cast<int>(tree.nodes.size());
    tree.nodes.emplace_back();
    const int ri = static_cast<int>(tree.nodes.size());
    tree.nodes.emplace_back();
    tree.nodes[frame.node].feature = best_feature;
    tree.nodes[frame.node].threshold = best_threshold;
    tree.nodes[frame.node].left = li;
    tree.nodes[frame.node].right = ri;
    stack.push_back({std::move(right), frame.depth + 1, ri});
    stack.push_back({std::move(left), frame.depth + 1, li});
  }
  return tree;
}

namespace {

struct RegFrame {
  std::vector<int> samples;
  int depth;
  int node;
};

constexpr double kRegLambda = 1.0;

}  // namespace

Tree grow_regression_tree(const Eigen::MatrixXd& x, const Eigen::VectorXd& grad,
                          const Eigen::VectorXd& hess, int max_depth, int min_leaf) {
  Tree tree;
  const int num_features = static_cast<int>(x.cols());

  std::vector<RegFrame> stack;
  tree.nodes.emplace_back();
  {
    std::vector<int> all(x.rows());
    for (int i = 0; i < static_cast<int>(x.rows()); ++i) all[i] = i;
    stack.push_back({std::move(all), 0, 0});
  }

  struct Entry {
    double value;
    double g;
    double h;
  };
  std::vector<Entry> sorted;
  while (!stack.empty()) {
    RegFrame frame = std::move(stack.back());
    stack.pop_back();
    const std::vector<int>& samples = frame.samples;
    const int n = static_cast<int>(samples.size());

    double g_sum = 0.0, h_sum = 0.0;
    for (int idx : samples) {
      g_sum += grad[idx];
      h_sum += hess[idx];
    }
    const double parent_obj = g_sum * g_sum / (h_sum + kRegLambda);

    auto make_leaf = [&]() {
      tree.nodes[frame.node].feature = -1;
      tree.nodes[frame.node].value = -g_sum / (h_sum + kRegLambda);  // Newton step
    };
    if (frame.depth >= max_depth || n < 2 * min_leaf) {
      make_leaf();
      continue;
    }

    double best_gain = 1e-12;
    int best_feature = -1;
    double best_threshold = 0.0;
    for (int f = 0; f < num_features; ++f) {
      sorted.clear();
      sorted.reserve(n);
      for (int idx : samples) sorted.push_back({x(idx, f), grad[idx], hess[idx]});
      std::sort(sorted.begin(), sorted.end(),
                [](const Entry& a, const Entry& b) { return a.value < b.value; });

      double gl = 0.0, hl = 0.0;
      for (int i = 0; i + 1 < n; ++i) {
        gl += sorted[i].g;
        hl += sorted[i].h;
        if (sorted[i].value == sorted[i + 1].value) continue;
        const int left_n = i + 1;
        const int right_n = n - left_n;
        if (left_n < min_leaf || right_n < min_leaf) continue;
        const double gr = g_sum - gl, hr = h_sum - hl;
        const double gain = gl * gl / (hl + kRegLambda) +
                            gr * gr / (hr + kRegLambda) - parent_obj;
        if (gain > best_gain + 1e-12) {
          best_gain = gain;
          best_feature = f;
          best_threshold = 0.5 * (sorted[i].value + sorted[i + 1].value);
        }
      }
    }

    if (best_feature < 0) {
      make_leaf();
      continue;
    }

    std::vector<int> left, right;
    for (int idx : samples) {
      (x(idx, best_feature) <= best_threshold ? left : right).push_back(idx);
    }
    if (left.empty() || right.empty()) {
      make_leaf();
      continue;
    }

    const int li = static_cast<int>(tree.nodes.size());
    tree.nodes.emplace_back();
    const int ri = static_cast<int>(tree.nodes.size());
    tree.nodes.emplace_back();
    tree.nodes[frame.node].feature = best_feature;
    tree.nodes[frame.node].threshold = best_threshold;
    tree.nodes[frame.node].left = li;
    tree.nodes[frame.node].right = ri;
    stack.push_back({std::move(right), frame.depth + 1, ri});
    stack.push_back({std::move(left), frame.depth + 1, li});
  }
  return tree;
}

}  // namespace qcf::ml

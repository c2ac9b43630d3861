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

#include <cstdint>

#include <Eigen/Dense>

namespace qcf::ml {

/// Three-layer MLP with relu hidden activations and sigmoid outputs,
/// trained on binary cross-entropy summed over output labels and averaged
/// over the batch. Exposed so gradients can be checked against finite
/// differences.
struct MlpNetwork {
  Eigen::MatrixXd w1, w2, w3;
  Eigen::VectorXd b1, b2, b3;

  static MlpNetwork init(int in, int h1, int h2, int out, std::uint64_t seed);

  /// Row-wise forward pass; returns output probabilities (batch x out).
  Eigen::MatrixXd forward(const Eigen::MatrixXd& x) const;

  /// Mean over the batch of per-sample BCE summed over labels.
  double loss(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) const;

  struct Gradients {
    Eigen::MatrixXd w1, w2, w3;
    Eigen::VectorXd b1, b2, b3;
  };

  Gradients gradients(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) const;

  /// Parameter vector round-trip, used by the finite-difference check.
  Eigen::VectorXd flatten() const;
  void unflatten(const Eigen::VectorXd& theta);
  Eigen::VectorXd flatten_gradients(const Gradients& g) const;
};

}  // namespace qcf::ml

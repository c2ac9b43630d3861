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
#include <numeric>

#include "ml/model_impls.hpp"
#include "qcf/rng.hpp"

namespace qcf::ml {

namespace {

Eigen::MatrixXd xavier(int rows, int cols, RngStream& rng) {
  const double limit = std::sqrt(6.0 / (rows + cols));
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      m(i, j) = rng.uniform(-limit, limit);
    }
  }
  return m;
}

Eigen::MatrixXd relu(const Eigen::MatrixXd& z) { return z.cwiseMax(0.0); }

Eigen::MatrixXd sigmoid(const Eigen::MatrixXd& z) {
  return ((-z.array()).exp() + 1.0).inverse().matrix();
}

// Numerically stable BCE from logits: max(z,0) - z*y + log(1 + exp(-|z|)).
double bce_from_logits(const Eigen::MatrixXd& z, const Eigen::MatrixXd& y) {
  const auto za = z.array();
  const auto ya = y.array();
  const Eigen::ArrayXXd term =
      za.max(0.0) - za * ya + ((-za.abs()).exp() + 1.0).log();
  return term.rowwise().sum().mean();
}

struct ForwardState {
  Eigen::MatrixXd z1, a1, z2, a2, z3;
};

ForwardState run_forward(const MlpNetwork& n, const Eigen::MatrixXd& x) {
  ForwardState s;
  s.z1 = (x * n.w1.transpose()).rowwise() + n.b1.transpose();
  s.a1 = relu(s.z1);
  s.z2 = (s.a1 * n.w2.transpose()).rowwise() + n.b2.transpose();
  s.a2 = relu(s.z2);
  s.z3 = (s.a2 * n.w3.transpose()).rowwise() + n.b3.transpose();
  return s;
}

struct AdamState {
  Eigen::MatrixXd m, v;
  explicit AdamState(const Eigen::MatrixXd& shape)
      : m(Eigen::MatrixXd::Zero(shape.rows(), shape.cols())),
        v(Eigen::MatrixXd::Zero(shape.rows(), shape.cols())) {}
};

void adam_update(Eigen::MatrixXd& param, AdamState& st, const Eigen::MatrixXd& grad,
                 double lr, int t) {
  constexpr double beta1 = 0.9, beta2 = 0.999, eps = 1e-8;
  st.m = beta1 * st.m + (1.0 - beta1) * grad;
  st.v = beta2 * st.v.array().matrix() + (1.0 - beta2) * grad.cwiseProduct(grad);
  const double bc1 = 1.0 - std::pow(beta1, t);
  const double bc2 = 1.0 - std::pow(beta2, t);
  param.array() -=
      lr * (st.m.array() / bc1) / ((st.v.array() / bc2).sqrt() + eps);
}

}  // namespace

MlpNetwork MlpNetwork::init(int in, int h1, int h2, int out, std::uint64_t seed) {
  RngStream rng(seed);
  MlpNetwork n;
  n.w1 = xavier(h1, in, rng);
  n.b1 = Eigen::VectorXd::Zero(h1);
  n.w2 = xavier(h2, h1, rng);
  n.b2 = Eigen::VectorXd::Zero(h2);
  n.w3 = xavier(out, h2, rng);
  n.b3 = Eigen::VectorXd::Zero(out);
  return n;
}

Eigen::MatrixXd MlpNetwork::forward(const Eigen::MatrixXd& x) const {
  return sigmoid(run_forward(*this, x).z3);
}

double MlpNetwork::loss(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) const {
  return bce_from_logits(run_forward(*this, x).z3, y);
}

MlpNetwork::Gradients MlpNetwork::gradients(const Eigen::MatrixXd& x,
                                            const Eigen::MatrixXd& y) const {
  const ForwardState s = run_forward(*this, x);
  const double batch = static_cast<double>(x.rows());

  // dL/dz3 for sigmoid + BCE, averaged over the batch.
  Eigen::MatrixXd d3 = (sigmoid(s.z3) - y) / batch;
  Eigen::MatrixXd d2 =
      (d3 * w3).cwiseProduct((s.z2.array() > 0.0).cast<double>().matrix());
  Eigen::MatrixXd d1 =
      (d2 * w2).cwiseProduct((s.z1.array() > 0.0).cast<double>().matrix());

  Gradients g;
  g.w3 = d3.transpose() * s.a2;
  g.b3 = d3.colwise().sum().transpose();
  g.w2 = d2.transpose() * s.a1;
  g.b2 = d2.colwise().sum().transpose();
  g.w1 = d1.transpose() * x;
  g.b1 = d1.colwise().sum().transpose();
  return g;
}

Eigen::VectorXd MlpNetwork::flatten() const {
  std::vector<const Eigen::MatrixXd*> ws = {&w1, &w2, &w3};
  std::vector<const Eigen::VectorXd*> bs = {&b1, &b2, &b3};
  Eigen::Index total = 0;
  for (auto* w : ws) total += w->size();
  for (auto* b : bs) total += b->size();
  Eigen::VectorXd theta(total);
  Eigen::Index at = 0;
  for (int i = 0; i < 3; ++i) {
    theta.segment(at, ws[i]->size()) =
        Eigen::Map<const Eigen::VectorXd>(ws[i]->data(), ws[i]->size());
    at += ws[i]->size();
    theta.segment(at, bs[i]->size()) = *bs[i];
    at += bs[i]->size();
  }
  return theta;
}

void MlpNetwork::unflatten(const Eigen::VectorXd& theta) {
  std::vector<Eigen::MatrixXd*> ws = {&w1, &w2, &w3};
  std::vector<Eigen::VectorXd*> bs = {&b1, &b2, &b3};
  Eigen::Index at = 0;
  for (int i = 0; i < 3; ++i) {
    Eigen::Map<Eigen::VectorXd>(ws[i]->data(), ws[i]->size()) =
        theta.segment(at, ws[i]->size());
    at += ws[i]->size();
    *bs[i] = theta.segment(at, bs[i]->size());
    at += bs[i]->size();
  }
}

Eigen::VectorXd MlpNetwork::flatten_gradients(const Gradients& g) const {
  MlpNetwork tmp = *this;
  tmp.w1 = g.w1;
  tmp.w2 = g.w2;
  tmp.w3 = g.w3;
  tmp.b1 = g.b1;
  tmp.b2 = g.b2;
  tmp.b3 = g.b3;
  return tmp.flatten();
}

Eigen::VectorXd NeuralNetModel::predict_proba(const Eigen::VectorXd& x) const {
  return net_.forward(x.transpose()).row(0).transpose();
}

void NeuralNetModel::serialize(json& params) const {
  auto mat = [](const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  auto vec = [](const Eigen::VectorXd& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
    return out;
  };
  params["dims"] = {net_.w1.cols(), net_.w1.rows(), net_.w2.rows(), net_.w3.rows()};
  params["w1"] = mat(net_.w1);
  params["b1"] = vec(net_.b1);
  params["w2"] = mat(net_.w2);
  params["b2"] = vec(net_.b2);
  params["w3"] = mat(net_.w3);
  params["b3"] = vec(net_.b3);
}

std::shared_ptr<ModelImpl> train_neural_net(const Eigen::MatrixXd& x,
                                            const Eigen::MatrixXd& y,
                                            const TrainOptions& opt,
                                            std::uint64_t seed, TrainLog* log) {
  const int n = static_cast<int>(x.rows());
  MlpNetwork net = MlpNetwork::init(static_cast<int>(x.cols()), opt.nn_hidden1,
                                    opt.nn_hidden2, static_cast<int>(y.cols()),
                                    derive_seed(seed, 1));

  AdamState mw1(net.w1), mw2(net.w2), mw3(net.w3);
  AdamState mb1(net.b1), mb2(net.b2), mb3(net.b3);

  RngStream shuffle_rng(derive_seed(seed, 2));
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);

  int step = 0;
  for (int epoch = 0; epoch < opt.nn_epochs; ++epoch) {
    shuffle_rng.shuffle(order);
    for (int start = 0; start < n; start += opt.nn_batch) {
      const int bs = std::min(opt.nn_batch, n - start);
      Eigen::MatrixXd bx(bs, x.cols()), by(bs, y.cols());
      for (int i = 0; i < bs; ++i) {
        bx.row(i) = x.row(order[start + i]);
        by.row(i) = y.row(order[start + i]);
      }
      const MlpNetwork::Gradients g = net.gradients(bx, by);
      ++step;
      adam_update(net.w1, mw1, g.w1, opt.nn_learning_rate, step);
      adam_update(net.w2, mw2, g.w2, opt.nn_learning_rate, step);
      adam_update(net.w3, mw3, g.w3, opt.nn_learning_rate, step);
      Eigen::MatrixXd b1 = net.b1, gb1 = g.b1;
      adam_update(b1, mb1, gb1, opt.nn_learning_rate, step);
      net.b1 = b1;
      Eigen::MatrixXd b2 = net.b2, gb2 = g.b2;
      adam_update(b2, mb2, gb2, opt.nn_learning_rate, step);
      net.b2 = b2;
      Eigen::MatrixXd b3 = net.b3, gb3 = g.b3;
      adam_update(b3, mb3, gb3, opt.nn_learning_rate, step);
      net.b3 = b3;
    }
    if (log) log->nn_epoch_losses.push_back(net.loss(x, y));
  }
  if (log) {
    log->lines.push_back("nn: epochs=" + std::to_string(opt.nn_epochs) +
                         " batch=" + std::to_string(opt.nn_batch) +
                         " lr=" + std::to_string(opt.nn_learning_rate) +
                         " layers=" + std::to_string(x.cols()) + "-" +
                         std::to_string(opt.nn_hidden1) + "-" +
                         std::to_string(opt.nn_hidden2) + "-" +
                         std::to_string(y.cols()) +
                         " final_loss=" + std::to_string(net.loss(x, y)));
  }
  return std::make_shared<NeuralNetModel>(std::move(net));
}

}  // namespace qcf::ml

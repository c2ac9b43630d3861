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

#include <fstream>

#include "ml/model_impls.hpp"

namespace qcf::ml {

namespace {

constexpr const char* kSchema = "qcf.model";
constexpr int kVersion = 1;

Eigen::MatrixXd matrix_from_json(const json& j) {
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  if (rows == 0) return {};
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j[i].size()) != cols) {
      throw std::runtime_error("model: ragged matrix in file");
    }
    for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = j[i][c].get<double>();
  }
  return m;
}

Eigen::VectorXd vector_from_json(const json& j) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = j[i].get<double>();
  return v;
}

std::array<std::vector<Tree>, kNumLabels> trees_from_json(const json& j) {
  if (j.size() != kNumLabels) {
    throw std::runtime_error("model: expected one tree list per label");
  }
  std::array<std::vector<Tree>, kNumLabels> out;
  for (int l = 0; l < kNumLabels; ++l) {
    for (const json& t : j[l]) out[l].push_back(Tree::from_json(t));
  }
  return out;
}

}  // namespace

std::shared_ptr<ModelImpl> model_from_json(ModelKind kind, const json& params) {
  switch (kind) {
    case ModelKind::NeuralNetwork: {
      MlpNetwork net;
      net.w1 = matrix_from_json(params.at("w1"));
      net.b1 = vector_from_json(params.at("b1"));
      net.w2 = matrix_from_json(params.at("w2"));
      net.b2 = vector_from_json(params.at("b2"));
      net.w3 = matrix_from_json(params.at("w3"));
      net.b3 = vector_from_json(params.at("b3"));
      return std::make_shared<NeuralNetModel>(std::move(net));
    }
    case ModelKind::LogisticRegression: {
      auto m = std::make_shared<LogisticModel>();
      m->w = matrix_from_json(params.at("w"));
      m->b = vector_from_json(params.at("b"));
      return m;
    }
    case ModelKind::GradientBoosting: {
      auto m = std::make_shared<BoostingModel>();
      const auto f0 = params.at("f0");
      if (f0.size() != kNumLabels) throw std::runtime_error("model: bad f0 length");
      for (int l = 0; l < kNumLabels; ++l) m->f0[l] = f0[l].get<double>();
      m->shrinkage = params.at("shrinkage").get<double>();
      m->trees = trees_from_json(params.at("trees"));
      return m;
    }
    case ModelKind::RandomForest: {
      auto m = std::make_shared<ForestModel>();
      m->trees = trees_from_json(params.at("trees"));
      return m;
    }
    case ModelKind::KNearestNeighbors: {
      auto m = std::make_shared<KnnModel>();
      m->k = params.at("k").get<int>();
      m->train_x = matrix_from_json(params.at("x"));
      m->train_y = matrix_from_json(params.at("y")).cast<int>();
      return m;
    }
  }
  throw std::runtime_error("model: unknown kind tag");
}

void save_model(const TrainedModel& model, const std::string& path) {
  if (!model.impl) throw std::logic_error("save_model: model not trained");
  json doc;
  doc["schema"] = kSchema;
  doc["version"] = kVersion;
  doc["kind"] = std::string(model_kind_name(model.kind));
  doc["thresholds"] = model.thresholds;
  doc["norm"] = {{"mean", model.norm.mean}, {"std", model.norm.stddev}};
  json params;
  model.impl->serialize(params);
  doc["params"] = std::move(params);

  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("model: cannot open for writing: " + path);
  f << doc.dump() << "\n";
  if (!f) throw std::runtime_error("model: write failed: " + path);
}

TrainedModel load_model(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("model: cannot open: " + path);
  json doc;
  try {
    f >> doc;
  } catch (const json::exception& e) {
    throw std::runtime_error("model: malformed JSON in " + path + ": " + e.what());
  }
  if (doc.value("schema", "") != kSchema) {
    throw std::runtime_error("model: not a model file (schema tag mismatch): " + path);
  }
  if (doc.value("version", -1) != kVersion) {
    throw std::runtime_error("model: unsupported version in " + path);
  }
  const auto kind = model_kind_from_name(doc.value("kind", ""));
  if (!kind) throw std::runtime_error("model: unknown kind in " + path);

  TrainedModel model;
  model.kind = *kind;
  if (!doc.contains("norm") || !doc["norm"].contains("mean") ||
      !doc["norm"].contains("std")) {
    throw std::runtime_error("model: missing normalization stats in " + path);
  }
  const json& mean = doc["norm"]["mean"];
  const json& stddev = doc["norm"]["std"];
  if (mean.size() != kNumFeatures || stddev.size() != kNumFeatures) {
    throw std::runtime_error("model: normalization stats must have length " +
                             std::to_string(kNumFeatures));
  }
  for (int i = 0; i < kNumFeatures; ++i) {
    model.norm.mean[i] = mean[i].get<double>();
    model.norm.stddev[i] = stddev[i].get<double>();
  }
  const json& thr = doc.at("thresholds");
  if (thr.size() != kNumLabels) throw std::runtime_error("model: bad threshold length");
  for (int l = 0; l < kNumLabels; ++l) model.thresholds[l] = thr[l].get<double>();

  model.impl = model_from_json(*kind, doc.at("params"));
  return model;
}

}  // namespace qcf::ml

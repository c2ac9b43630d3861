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

#include "qcf/dataset.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "qcf/random_circuit.hpp"
#include "qcf/rng.hpp"

namespace qcf {

namespace {

using json = nlohmann::json;

struct Sample {
  FeatureVector x;
  LabelVector y;
  SampleMeta meta;
};

Sample build_sample(const BuilderConfig& cfg, int index) {
  RngStream rs(derive_seed(cfg.seed, static_cast<std::uint64_t>(index)));

  const int n_q = static_cast<int>(rs.uniform_int(cfg.q_min, cfg.q_max));
  const std::uint64_t circuit_seed = rs.next_u64();

  // Uniformly random non-empty subset of the six baseline passes.
  std::uint64_t base_mask = 0;
  while (base_mask == 0) base_mask = rs.next_below(64);
  // Misc subset (possibly empty) drawn only with probability p.
  std::uint64_t misc_mask = 0;
  if (rs.uniform01() < cfg.misc_probability) misc_mask = rs.next_below(4);

  PassSelection sel;
  for (int b = 0; b < kNumBaselinePasses; ++b) {
    if (base_mask & (1ULL << b)) sel.baseline.push_back(static_cast<PassId>(b));
  }
  for (int m = 0; m < 2; ++m) {
    if (misc_mask & (1ULL << m)) {
      sel.misc.push_back(static_cast<PassId>(kNumBaselinePasses + m));
    }
  }

  GenSpec gen;
  gen.num_qubits = n_q;
  gen.depth = cfg.depth;
  gen.seed = circuit_seed;
  const Circuit original = random_circuit(gen);
  const Circuit optimized = apply_passes(original, sel);

  Sample s;
  s.x = extract_features(original, optimized);
  s.y = labels_from_selection(sel);
  s.meta.seed = circuit_seed;
  s.meta.qubits = n_q;
  s.meta.passes = sel.baseline;
  s.meta.passes.insert(s.meta.passes.end(), sel.misc.begin(), sel.misc.end());
  return s;
}

}  // namespace

void BuilderConfig::validate() const {
  if (num_samples <= 0) throw std::invalid_argument("builder: num_samples must be positive");
  if (q_min < 2 || q_min > q_max) {
    throw std::invalid_argument("builder: need 2 <= q_min <= q_max");
  }
  if (depth < 1) throw std::invalid_argument("builder: depth must be >= 1");
  if (misc_probability < 0.0 || misc_probability > 1.0) {
    throw std::invalid_argument("builder: misc probability must be in [0, 1]");
  }
}

Dataset build_dataset(const BuilderConfig& cfg) {
  cfg.validate();

  std::vector<Sample> samples(cfg.num_samples);
  unsigned n_threads = cfg.threads > 0 ? cfg.threads : std::thread::hardware_concurrency();
  if (n_threads == 0) n_threads = 1;
  n_threads = std::min<unsigned>(n_threads, cfg.num_samples);

  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= cfg.num_samples) return;
      samples[i] = build_sample(cfg, i);
    }
  };
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  Dataset ds;
  ds.X.reserve(samples.size());
  ds.Y.reserve(samples.size());
  ds.meta.reserve(samples.size());
  for (Sample& s : samples) {
    ds.X.push_back(s.x);
    ds.Y.push_back(s.y);
    ds.meta.push_back(std::move(s.meta));
  }
  return ds;
}

void save_dataset(const Dataset& ds, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("dataset: cannot open for writing: " + path);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    json rec;
    rec["x"] = ds.X[i];
    rec["y"] = ds.Y[i];
    json meta;
    meta["v"] = 1;
    meta["seed"] = ds.meta[i].seed;
    meta["qubits"] = ds.meta[i].qubits;
    json passes = json::array();
    for (PassId id : ds.meta[i].passes) passes.push_back(std::string(pass_name(id)));
    meta["passes"] = std::move(passes);
    rec["meta"] = std::move(meta);
    f << rec.dump() << "\n";
  }
  if (!f) throw std::runtime_error("dataset: write failed: " + path);
}

Dataset load_dataset(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("dataset: cannot open: " + path);
  Dataset ds;
  std::string line;
  int line_no = 0;
  while (std::getline(f, line)) {
    ++line_no;
    if (line.empty()) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::exception& e) {
      throw std::runtime_error("dataset: parse error at line " +
                               std::to_string(line_no) + ": " + e.what());
    }
    if (!rec.contains("x") || !rec.contains("y") || !rec.contains("meta")) {
      throw std::runtime_error("dataset: schema error at line " +
                               std::to_string(line_no) + ": missing x/y/meta");
    }
    if (rec["meta"].value("v", -1) != 1) {
      throw std::runtime_error("dataset: schema version mismatch at line " +
                               std::to_string(line_no));
    }
    if (rec["x"].size() != kNumFeatures) {
      throw std::runtime_error("dataset: schema error at line " +
                               std::to_string(line_no) + ": feature vector must have " +
                               std::to_string(kNumFeatures) + " entries");
    }
    if (rec["y"].size() != kNumLabels) {
      throw std::runtime_error("dataset: schema error at line " +
                               std::to_string(line_no) + ": label vector must have " +
                               std::to_string(kNumLabels) + " entries");
    }
    FeatureVector x;
    for (int i = 0; i < kNumFeatures; ++i) x[i] = rec["x"][i].get<double>();
    LabelVector y;
    for (int i = 0; i < kNumLabels; ++i) {
      const int v = rec["y"][i].get<int>();
      if (v != 0 && v != 1) {
        throw std::runtime_error("dataset: schema error at line " +
                                 std::to_string(line_no) + ": labels must be 0/1");
      }
      y[i] = static_cast<std::uint8_t>(v);
    }
    SampleMeta meta;
    meta.seed = rec["meta"].value("seed", std::uint64_t{0});
    meta.qubits = rec["meta"].value("qubits", 0);
    if (rec["meta"].contains("passes")) {
      for (const auto& name : rec["meta"]["passes"]) {
        auto id = pass_from_name(name.get<std::string>());
        if (!id) {
          throw std::runtime_error("dataset: schema error at line " +
                                   std::to_string(line_no) + ": unknown pass name");
        }
        meta.passes.push_back(*id);
      }
    }
    ds.X.push_back(x);
    ds.Y.push_back(y);
    ds.meta.push_back(std::move(meta));
  }
  if (ds.size() == 0) throw std::runtime_error("dataset: no records in " + path);
  return ds;
}

void export_csv(const Dataset& ds, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("dataset: cannot open for writing: " + path);
  for (int i = 0; i < kNumFeatures; ++i) {
    if (i) f << ",";
    f << feature_name(i);
  }
  for (int i = 0; i < kNumLabels; ++i) f << "," << label_name(i);
  f << "\n";
  std::ostringstream row;
  for (std::size_t r = 0; r < ds.size(); ++r) {
    row.str("");
    for (int i = 0; i < kNumFeatures; ++i) {
      if (i) row << ",";
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.17g", ds.X[r][i]);
      row << buf;
    }
    for (int i = 0; i < kNumLabels; ++i) row << "," << static_cast<int>(ds.Y[r][i]);
    f << row.str() << "\n";
  }
  if (!f) throw std::runtime_error("dataset: write failed: " + path);
}

}  // namespace qcf

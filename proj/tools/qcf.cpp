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

// qcf: build circuit-pair datasets with known optimization passes, train
// multi-label detectors, and fingerprint which passes a black-box optimizer
// ran on an (original, optimized) circuit pair.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qcf/dataset.hpp"
#include "qcf/ml.hpp"
#include "qcf/qasm.hpp"
#include "qcf/random_circuit.hpp"
#include "qcf/rng.hpp"
#include "qcf/simulator.hpp"

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr const char* kToolVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitVerification = 3;

std::uint64_t fnv1a64_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot hash missing file: " + path);
  std::uint64_t h = 1469598103934665603ULL;
  char buf[1 << 14];
  while (f.read(buf, sizeof(buf)) || f.gcount() > 0) {
    for (std::streamsize i = 0; i < f.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 1099511628211ULL;
    }
  }
  return h;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path);
}

// Reproducibility record written next to every produced file.
void write_manifest(const std::string& primary_output, const std::string& command,
                    const json& config, double duration_s,
                    const std::vector<std::string>& outputs,
                    const json& extra = json::object()) {
  json m;
  m["tool"] = "qcf";
  m["version"] = kToolVersion;
  m["command"] = command;
  m["config"] = config;
  m["duration_s"] = duration_s;
  json outs = json::object();
  for (const std::string& path : outputs) {
    char hex[32];
    std::snprintf(hex, sizeof(hex), "0x%016llx",
                  static_cast<unsigned long long>(fnv1a64_file(path)));
    outs[path] = {{"fnv1a64", hex}};
  }
  m["outputs"] = std::move(outs);
  if (!extra.empty()) m["run"] = extra;
  write_text(primary_output + ".manifest.json", m.dump(2) + "\n");
}

json report_to_json(const qcf::ml::EvalReport& rep) {
  json labels = json::array();
  for (int l = 0; l < qcf::kNumLabels; ++l) {
    labels.push_back({{"label", std::string(qcf::label_name(l))},
                      {"precision", rep.per_label[l].precision},
                      {"recall", rep.per_label[l].recall},
                      {"f1", rep.per_label[l].f1}});
  }
  return json{{"per_label", labels},
              {"hamming", rep.hamming_score},
              {"avg_f1", rep.avg_f1},
              {"micro_f1", rep.micro_f1}};
}

void print_report(const qcf::ml::EvalReport& rep) {
  std::printf("%-14s %9s %7s %7s\n", "pass", "precision", "recall", "f1");
  for (int l = 0; l < qcf::kNumLabels; ++l) {
    std::printf("%-14s %9.3f %7.3f %7.3f\n",
                std::string(qcf::label_name(l)).c_str(),
                rep.per_label[l].precision, rep.per_label[l].recall,
                rep.per_label[l].f1);
  }
  std::printf("hamming %.3f  avg-f1 %.3f  micro-f1 %.3f\n", rep.hamming_score,
              rep.avg_f1, rep.micro_f1);
}

qcf::PassSelection selection_from_names(const std::string& comma_list) {
  qcf::PassSelection sel;
  std::stringstream ss(comma_list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto id = qcf::pass_from_name(item);
    if (!id) {
      std::string valid;
      for (int i = 0; i < qcf::kNumPasses; ++i) {
        valid += std::string(i ? ", " : "") + std::string(qcf::pass_name(static_cast<qcf::PassId>(i)));
      }
      throw CLI::ValidationError("--passes", "unknown pass '" + item +
                                                 "'; valid names: " + valid);
    }
    (qcf::is_baseline(*id) ? sel.baseline : sel.misc).push_back(*id);
  }
  return sel;
}

// ---- gen ----

struct GenArgs {
  qcf::BuilderConfig cfg;
  std::string out;
  std::string csv;
};

int run_gen(const GenArgs& args) {
  const auto t0 = Clock::now();
  const qcf::Dataset ds = qcf::build_dataset(args.cfg);
  qcf::save_dataset(ds, args.out);
  std::vector<std::string> outputs = {args.out};
  if (!args.csv.empty()) {
    qcf::export_csv(ds, args.csv);
    outputs.push_back(args.csv);
  }
  const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  json config = {{"samples", args.cfg.num_samples}, {"qmin", args.cfg.q_min},
                 {"qmax", args.cfg.q_max},          {"depth", args.cfg.depth},
                 {"misc_prob", args.cfg.misc_probability},
                 {"seed", args.cfg.seed},           {"out", args.out}};
  if (!args.csv.empty()) config["csv"] = args.csv;
  write_manifest(args.out, "gen", config, dt, outputs);
  std::printf("wrote %d samples to %s (%.2fs)\n", args.cfg.num_samples,
              args.out.c_str(), dt);
  return kExitOk;
}

// ---- train ----

struct TrainArgs {
  std::string data;
  std::string model_kind = "rforest";
  double split = 0.8;
  std::uint64_t seed = 0;
  std::string out;
  std::string json_out;
  int threads = 0;
};

int run_train(const TrainArgs& args) {
  const auto kind = qcf::ml::model_kind_from_name(args.model_kind);
  if (!kind) {
    throw CLI::ValidationError("--model", "unknown model '" + args.model_kind +
                                              "'; valid: nn, logreg, gboost, rforest, knn");
  }
  const auto t0 = Clock::now();
  const qcf::Dataset ds = qcf::load_dataset(args.data);
  const auto [train_set, test_set] = qcf::ml::split_dataset(ds, args.split, args.seed);

  qcf::ml::TrainOptions options;
  options.threads = args.threads;
  qcf::ml::TrainLog log;
  const qcf::ml::TrainedModel model =
      qcf::ml::train(*kind, train_set, options, args.seed, &log);
  const qcf::ml::EvalReport rep = qcf::ml::evaluate(model, test_set);

  qcf::ml::save_model(model, args.out);
  const double dt = std::chrono::duration<double>(Clock::now() - t0).count();

  const json config = {{"data", args.data},   {"model", args.model_kind},
                       {"split", args.split}, {"seed", args.seed},
                       {"out", args.out},     {"threads", args.threads}};
  json extra;
  extra["train_samples"] = train_set.size();
  extra["test_samples"] = test_set.size();
  extra["training_log"] = log.lines;
  extra["report"] = report_to_json(rep);
  write_manifest(args.out, "train", config, dt, {args.out}, extra);

  if (!args.json_out.empty()) {
    write_text(args.json_out, report_to_json(rep).dump(2) + "\n");
  } else {
    for (const auto& line : log.lines) std::printf("# %s\n", line.c_str());
    print_report(rep);
  }
  std::printf("model saved to %s (%.2fs)\n", args.out.c_str(), dt);
  return kExitOk;
}

// ---- eval ----

struct EvalArgs {
  std::string data;
  std::string model_file;
  double split = 0.0;  // 0 = evaluate on the whole file
  std::uint64_t seed = 0;
  std::string json_out;
};

int run_eval(const EvalArgs& args) {
  const qcf::Dataset ds = qcf::load_dataset(args.data);
  const qcf::ml::TrainedModel model = qcf::ml::load_model(args.model_file);
  qcf::ml::EvalReport rep;
  if (args.split > 0.0) {
    const auto [train_set, test_set] = qcf::ml::split_dataset(ds, args.split, args.seed);
    rep = qcf::ml::evaluate(model, test_set);
  } else {
    rep = qcf::ml::evaluate(model, ds);
  }
  if (!args.json_out.empty()) {
    write_text(args.json_out, report_to_json(rep).dump(2) + "\n");
  } else {
    print_report(rep);
  }
  return kExitOk;
}

// ---- optimize ----

struct OptimizeArgs {
  std::string in;
  std::string passes;
  std::string out;
};

int run_optimize(const OptimizeArgs& args) {
  const qcf::PassSelection sel = selection_from_names(args.passes);
  sel.validate();

  const auto t0 = Clock::now();
  const qcf::Circuit original = qcf::read_circuit(args.in);
  const qcf::Circuit optimized = qcf::apply_passes(original, sel);
  qcf::write_circuit(optimized, args.out);
  const double dt = std::chrono::duration<double>(Clock::now() - t0).count();

  const json config = {{"in", args.in}, {"passes", args.passes}, {"out", args.out}};
  write_manifest(args.out, "optimize", config, dt, {args.out});
  std::printf("gates %zu -> %zu, depth %d -> %d\n", original.size(),
              optimized.size(), qcf::depth(original), qcf::depth(optimized));
  return kExitOk;
}

// ---- predict ----

struct PredictArgs {
  std::string original;
  std::string optimized;
  std::string model_file;
  std::string json_out;
};

int run_predict(const PredictArgs& args) {
  const qcf::Circuit original = qcf::read_circuit(args.original);
  const qcf::Circuit optimized = qcf::read_circuit(args.optimized);
  if (original.num_qubits != optimized.num_qubits) {
    throw std::runtime_error("qubit-count mismatch: original has " +
                             std::to_string(original.num_qubits) +
                             ", optimized has " +
                             std::to_string(optimized.num_qubits));
  }
  const qcf::ml::TrainedModel model = qcf::ml::load_model(args.model_file);
  const qcf::FeatureVector x = qcf::extract_features(original, optimized);
  const qcf::ml::Prediction p = model.predict(x);

  if (!args.json_out.empty()) {
    json out;
    json passes = json::array();
    for (int l = 0; l < qcf::kNumBaselinePasses; ++l) {
      passes.push_back({{"pass", std::string(qcf::label_name(l))},
                        {"probability", p.probabilities[l]},
                        {"detected", p.decisions[l] != 0}});
    }
    out["passes"] = std::move(passes);
    out["miscellaneous"] = {{"probability", p.probabilities[6]},
                            {"detected", p.decisions[6] != 0}};
    write_text(args.json_out, out.dump(2) + "\n");
  } else {
    std::printf("%-14s %11s %s\n", "pass", "probability", "detected");
    for (int l = 0; l < qcf::kNumBaselinePasses; ++l) {
      std::printf("%-14s %11.3f %s\n", std::string(qcf::label_name(l)).c_str(),
                  p.probabilities[l], p.decisions[l] ? "yes" : "no");
    }
    std::printf("unrecognized-transform flag (misc): %.3f %s\n",
                p.probabilities[6], p.decisions[6] ? "yes" : "no");
  }
  return kExitOk;
}

// ---- verify ----

struct VerifyArgs {
  std::string pass = "all";
  int trials = 200;
  int qubits = 5;
  int depth = 20;
  std::uint64_t seed = 0;
  std::string json_out;
};

int run_verify(const VerifyArgs& args) {
  std::vector<qcf::PassId> to_check;
  if (args.pass == "all") {
    for (int i = 0; i < qcf::kNumPasses; ++i) {
      to_check.push_back(static_cast<qcf::PassId>(i));
    }
  } else {
    const auto id = qcf::pass_from_name(args.pass);
    if (!id) {
      throw CLI::ValidationError("--pass", "unknown pass '" + args.pass + "'");
    }
    to_check.push_back(*id);
  }
  if (args.qubits < 2 || args.qubits > 10) {
    throw CLI::ValidationError("--qubits", "oracle verification needs 2..10 qubits");
  }

  json results = json::array();
  bool all_ok = true;
  for (const qcf::PassId id : to_check) {
    int failures = 0;
    double max_dev = 0.0;
    const double tol = id == qcf::PassId::OptimizeCliffords ? 1e-6 : 1e-9;
    for (int t = 0; t < args.trials; ++t) {
      qcf::GenSpec spec;
      spec.num_qubits = args.qubits;
      spec.depth = args.depth;
      spec.seed = qcf::derive_seed(args.seed, 1000003ULL * static_cast<int>(id) + t);
      const qcf::Circuit c = qcf::random_circuit(spec);
      const qcf::Circuit opt = qcf::apply_pass(c, id);
      const qcf::PhaseEquivalence eq = qcf::compare_up_to_phase(c, opt);
      max_dev = std::max(max_dev, eq.max_deviation);
      failures += eq.max_deviation < tol ? 0 : 1;
    }
    all_ok &= failures == 0;
    std::printf("%-12s %4d/%d ok, max deviation %.3g (tol %.0e)\n",
                std::string(qcf::pass_name(id)).c_str(), args.trials - failures,
                args.trials, max_dev, tol);
    results.push_back({{"pass", std::string(qcf::pass_name(id))},
                       {"trials", args.trials},
                       {"failures", failures},
                       {"max_deviation", max_dev},
                       {"tolerance", tol}});
  }
  if (!args.json_out.empty()) {
    const json doc = {{"qubits", args.qubits}, {"depth", args.depth},
                      {"seed", args.seed},     {"results", results},
                      {"ok", all_ok}};
    write_text(args.json_out, doc.dump(2) + "\n");
  }
  return all_ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compiler forensics for quantum circuit optimization passes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate a labeled circuit-pair dataset");
  gen->add_option("--samples", gen_args.cfg.num_samples, "sample count")->capture_default_str();
  gen->add_option("--qmin", gen_args.cfg.q_min, "minimum qubit count")->capture_default_str();
  gen->add_option("--qmax", gen_args.cfg.q_max, "maximum qubit count")->capture_default_str();
  gen->add_option("--depth", gen_args.cfg.depth, "generated layers per circuit")->capture_default_str();
  gen->add_option("--misc-prob", gen_args.cfg.misc_probability,
                  "probability of drawing a miscellaneous subset")->capture_default_str();
  gen->add_option("--seed", gen_args.cfg.seed, "run seed")->capture_default_str();
  gen->add_option("--threads", gen_args.cfg.threads, "worker threads (0 = auto)")->capture_default_str();
  gen->add_option("--out", gen_args.out, "output dataset (JSON lines)")->required();
  gen->add_option("--csv", gen_args.csv, "also export CSV with header row");

  TrainArgs train_args;
  CLI::App* train = app.add_subcommand("train", "train a pass detector on a dataset");
  train->add_option("--data", train_args.data, "dataset file")->required();
  train->add_option("--model", train_args.model_kind,
                    "model kind: nn, logreg, gboost, rforest, knn")->capture_default_str();
  train->add_option("--split", train_args.split, "train fraction")->capture_default_str();
  train->add_option("--seed", train_args.seed, "split/train seed")->capture_default_str();
  train->add_option("--threads", train_args.threads, "training threads (0 = auto)")->capture_default_str();
  train->add_option("--out", train_args.out, "output model file")->required();
  train->add_option("--json", train_args.json_out, "write the metrics report as JSON");

  EvalArgs eval_args;
  CLI::App* eval = app.add_subcommand("eval", "evaluate a saved model on a dataset");
  eval->add_option("--data", eval_args.data, "dataset file")->required();
  eval->add_option("--model-file", eval_args.model_file, "trained model file")->required();
  eval->add_option("--split", eval_args.split,
                   "evaluate on the test side of this split (default: whole file)");
  eval->add_option("--seed", eval_args.seed, "split seed")->capture_default_str();
  eval->add_option("--json", eval_args.json_out, "write the metrics report as JSON");

  OptimizeArgs opt_args;
  CLI::App* optimize = app.add_subcommand("optimize", "apply passes to a QASM circuit");
  optimize->add_option("--in", opt_args.in, "input OpenQASM 2.0 file")->required();
  optimize->add_option("--passes", opt_args.passes,
                       "comma list of passes (opt1q, inverse, commutative, remove-id, "
                       "consolidate, template, split2q, cliffords)")->required();
  optimize->add_option("--out", opt_args.out, "output QASM file")->required();

  PredictArgs pred_args;
  CLI::App* predict =
      app.add_subcommand("predict", "fingerprint the passes behind a circuit pair");
  predict->add_option("--original", pred_args.original, "original QASM file")->required();
  predict->add_option("--optimized", pred_args.optimized, "optimized QASM file")->required();
  predict->add_option("--model", pred_args.model_file, "trained model file")->required();
  predict->add_option("--json", pred_args.json_out, "write the fingerprint as JSON");

  VerifyArgs verify_args;
  CLI::App* verify =
      app.add_subcommand("verify", "check pass soundness against the statevector oracle");
  verify->add_option("--pass", verify_args.pass, "pass name or 'all'")->capture_default_str();
  verify->add_option("--trials", verify_args.trials, "random circuits per pass")->capture_default_str();
  verify->add_option("--qubits", verify_args.qubits, "qubits per trial circuit")->capture_default_str();
  verify->add_option("--depth", verify_args.depth, "layers per trial circuit")->capture_default_str();
  verify->add_option("--seed", verify_args.seed, "trial seed")->capture_default_str();
  verify->add_option("--json", verify_args.json_out, "write the verification report as JSON");

  try {
    app.parse(argc, argv);
    if (gen->parsed()) return run_gen(gen_args);
    if (train->parsed()) return run_train(train_args);
    if (eval->parsed()) return run_eval(eval_args);
    if (optimize->parsed()) return run_optimize(opt_args);
    if (predict->parsed()) return run_predict(pred_args);
    if (verify->parsed()) return run_verify(verify_args);
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const qcf::QasmError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

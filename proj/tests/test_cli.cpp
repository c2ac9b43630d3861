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

// Exercises the installed command surface end to end through the real
// binary: exit codes, file outputs, manifests and reproducibility.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#ifndef QCF_BIN
#error "QCF_BIN must point at the qcf executable"
#endif

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / "qcf_cli_test";
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(const std::string& args) const {
    const std::string cmd =
        std::string(QCF_BIN) + " " + args + " >" + path("stdout.txt") + " 2>" +
        path("stderr.txt");
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
  }

  std::string stdout_text() const { return slurp(path("stdout.txt")); }

  static std::string slurp(const std::string& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

TEST_F(CliTest, GenProducesRequestedLineCountAndManifest) {
  ASSERT_EQ(run("gen --samples 100 --seed 7 --out " + path("d.jsonl")), 0);
  std::ifstream f(path("d.jsonl"));
  int lines = 0;
  std::string line;
  while (std::getline(f, line)) ++lines;
  EXPECT_EQ(lines, 100);
  EXPECT_TRUE(fs::exists(path("d.jsonl.manifest.json")));
  const json manifest = json::parse(slurp(path("d.jsonl.manifest.json")));
  EXPECT_EQ(manifest["command"], "gen");
  EXPECT_EQ(manifest["config"]["samples"], 100);
}

TEST_F(CliTest, GenIsBitReproducible) {
  ASSERT_EQ(run("gen --samples 50 --seed 9 --out " + path("a.jsonl")), 0);
  ASSERT_EQ(run("gen --samples 50 --seed 9 --out " + path("b.jsonl")), 0);
  EXPECT_EQ(slurp(path("a.jsonl")), slurp(path("b.jsonl")));
}

TEST_F(CliTest, TrainEvalPredictFlow) {
  ASSERT_EQ(run("gen --samples 300 --qmin 4 --qmax 6 --depth 25 --seed 3 --out " +
                path("d.jsonl")),
            0);
  ASSERT_EQ(run("train --data " + path("d.jsonl") +
                " --model knn --seed 1 --out " + path("m.json") + " --json " +
                path("report.json")),
            0);
  const json report = json::parse(slurp(path("report.json")));
  EXPECT_EQ(report["per_label"].size(), 7u);
  EXPECT_TRUE(report.contains("hamming"));
  EXPECT_TRUE(report.contains("avg_f1"));
  EXPECT_TRUE(report.contains("micro_f1"));

  ASSERT_EQ(run("eval --data " + path("d.jsonl") + " --model-file " +
                path("m.json") + " --split 0.8 --seed 1 --json " +
                path("eval.json")),
            0);
  EXPECT_EQ(json::parse(slurp(path("eval.json")))["per_label"].size(), 7u);

  // Build a pair via optimize, then fingerprint it.
  {
    std::ofstream q(path("orig.qasm"));
    q << "OPENQASM 2.0;\nqreg q[4];\nh q[0];\nh q[0];\ncx q[0],q[1];\nrz(0.5) "
         "q[1];\ncx q[0],q[1];\nt q[2];\nt q[2];\n";
  }
  ASSERT_EQ(run("optimize --in " + path("orig.qasm") +
                " --passes inverse,template --out " + path("opt.qasm")),
            0);
  ASSERT_EQ(run("predict --original " + path("orig.qasm") + " --optimized " +
                path("opt.qasm") + " --model " + path("m.json") + " --json " +
                path("pred.json")),
            0);
  const json pred = json::parse(slurp(path("pred.json")));
  EXPECT_EQ(pred["passes"].size(), 6u);
  for (const auto& row : pred["passes"]) {
    EXPECT_GE(row["probability"].get<double>(), 0.0);
    EXPECT_LE(row["probability"].get<double>(), 1.0);
  }
  EXPECT_TRUE(pred.contains("miscellaneous"));
}

TEST_F(CliTest, PredictAcceptsIdenticalPair) {
  ASSERT_EQ(run("gen --samples 150 --qmin 4 --qmax 5 --depth 15 --seed 4 --out " +
                path("d.jsonl")),
            0);
  ASSERT_EQ(run("train --data " + path("d.jsonl") + " --model knn --out " +
                path("m.json")),
            0);
  {
    std::ofstream q(path("same.qasm"));
    q << "OPENQASM 2.0;\nqreg q[3];\nh q[0];\ncx q[0],q[1];\nt q[2];\n";
  }
  // A no-op optimization is a legal input pair.
  EXPECT_EQ(run("predict --original " + path("same.qasm") + " --optimized " +
                path("same.qasm") + " --model " + path("m.json") + " --json " +
                path("same.json")),
            0);
  const json pred = json::parse(slurp(path("same.json")));
  EXPECT_EQ(pred["passes"].size(), 6u);
}

TEST_F(CliTest, TrainReportIsSeedReproducible) {
  ASSERT_EQ(run("gen --samples 200 --qmin 4 --qmax 5 --depth 20 --seed 5 --out " +
                path("d.jsonl")),
            0);
  ASSERT_EQ(run("train --data " + path("d.jsonl") +
                " --model logreg --seed 11 --out " + path("m1.json") +
                " --json " + path("r1.json")),
            0);
  ASSERT_EQ(run("train --data " + path("d.jsonl") +
                " --model logreg --seed 11 --out " + path("m2.json") +
                " --json " + path("r2.json")),
            0);
  EXPECT_EQ(slurp(path("r1.json")), slurp(path("r2.json")));
  EXPECT_EQ(slurp(path("m1.json")), slurp(path("m2.json")));
}

TEST_F(CliTest, OptimizeOnSelfInversePairEmptiesBody) {
  {
    std::ofstream q(path("hh.qasm"));
    q << "OPENQASM 2.0;\nqreg q[1];\nh q[0];\nh q[0];\n";
  }
  ASSERT_EQ(run("optimize --in " + path("hh.qasm") + " --passes inverse --out " +
                path("empty.qasm")),
            0);
  const std::string out = slurp(path("empty.qasm"));
  EXPECT_NE(out.find("qreg q[1];"), std::string::npos);
  EXPECT_EQ(out.find("h q[0];"), std::string::npos);
  // Output re-parses: feeding it back through optimize must succeed.
  EXPECT_EQ(run("optimize --in " + path("empty.qasm") + " --passes opt1q --out " +
                path("empty2.qasm")),
            0);
}

TEST_F(CliTest, ConsolidateWritesSidecarAndPredictReadsIt) {
  ASSERT_EQ(run("gen --samples 150 --qmin 4 --qmax 5 --depth 15 --seed 6 --out " +
                path("d.jsonl")),
            0);
  ASSERT_EQ(run("train --data " + path("d.jsonl") + " --model knn --out " +
                path("m.json")),
            0);
  {
    std::ofstream q(path("block.qasm"));
    q << "OPENQASM 2.0;\nqreg q[2];\ncx q[0],q[1];\nrz(0.3) q[1];\ncx "
         "q[0],q[1];\nh q[0];\n";
  }
  ASSERT_EQ(run("optimize --in " + path("block.qasm") +
                " --passes consolidate --out " + path("blockopt.qasm")),
            0);
  EXPECT_TRUE(fs::exists(path("blockopt.qasm.unitaries.json")));
  EXPECT_EQ(run("predict --original " + path("block.qasm") + " --optimized " +
                path("blockopt.qasm") + " --model " + path("m.json") + " --json " +
                path("blockpred.json")),
            0);
  EXPECT_EQ(json::parse(slurp(path("blockpred.json")))["passes"].size(), 6u);
}

TEST_F(CliTest, ExitCodes) {
  // usage: unknown pass name (message lists the valid ones)
  {
    std::ofstream q(path("x.qasm"));
    q << "OPENQASM 2.0;\nqreg q[1];\nh q[0];\n";
  }
  EXPECT_EQ(run("optimize --in " + path("x.qasm") + " --passes bogus --out " +
                path("y.qasm")),
            1);
  const std::string err = slurp(path("stderr.txt"));
  EXPECT_NE(err.find("opt1q"), std::string::npos);

  // usage: missing required flag
  EXPECT_EQ(run("gen"), 1);

  // io/schema: missing input file
  EXPECT_EQ(run("train --data " + path("absent.jsonl") + " --model knn --out " +
                path("m.json")),
            2);

  // io/schema: malformed qasm
  {
    std::ofstream q(path("bad.qasm"));
    q << "OPENQASM 2.0;\nqreg q[1];\nh q[4];\n";
  }
  EXPECT_EQ(run("optimize --in " + path("bad.qasm") + " --passes inverse --out " +
                path("out.qasm")),
            2);
}

TEST_F(CliTest, PredictRejectsMismatchedQubitCounts) {
  {
    std::ofstream a(path("a2.qasm"));
    a << "OPENQASM 2.0;\nqreg q[2];\nh q[0];\n";
    std::ofstream b(path("b3.qasm"));
    b << "OPENQASM 2.0;\nqreg q[3];\nh q[0];\n";
  }
  ASSERT_EQ(run("gen --samples 120 --qmin 4 --qmax 5 --depth 15 --seed 2 --out " +
                path("d.jsonl")),
            0);
  ASSERT_EQ(run("train --data " + path("d.jsonl") + " --model knn --out " +
                path("m.json")),
            0);
  EXPECT_EQ(run("predict --original " + path("a2.qasm") + " --optimized " +
                path("b3.qasm") + " --model " + path("m.json")),
            2);
}

TEST_F(CliTest, VerifyReportsAndExitCodes) {
  ASSERT_EQ(run("verify --pass inverse --trials 10 --qubits 4 --depth 10 --seed 1 "
                "--json " + path("v.json")),
            0);
  const json v = json::parse(slurp(path("v.json")));
  EXPECT_TRUE(v["ok"].get<bool>());
  ASSERT_EQ(v["results"].size(), 1u);
  EXPECT_TRUE(v["results"][0].contains("max_deviation"));
  EXPECT_EQ(run("verify --pass bogus"), 1);
}

}  // namespace

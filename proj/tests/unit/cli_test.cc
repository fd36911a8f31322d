// Copyright 2026 The VulnGraph Authors. All Rights Reserved.
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
#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "temp_dir.h"
#include "vulngraph/cli/commands.h"
#include "vulngraph/cli/config.h"
#include "vulngraph/dataset/dataset.h"
#include "vulngraph/dataset/synthetic.h"
#include "vulngraph/embed/skipgram.h"
#include "vulngraph/error.h"
#include "vulngraph/io.h"
#include "vulngraph/rng.h"

namespace vulngraph::cli {
namespace {

namespace fs = std::filesystem;
using testing::TempDir;

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "vulngraph");
  std::ostringstream out, err;
  Outcome o;
  o.code = RunCli(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::size_t CountLines(const std::string& text) {
  std::size_t n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

// Straight-line CFG with n blocks: entry, n - 2 body blocks, exit.
std::string ChainDot(const std::string& name, int n) {
  std::string dot = "digraph \"" + name + "\" {\n";
  dot += "  N0 [role=\"entry\", code=\"\"];\n  N1 [role=\"exit\", code=\"\"];\n";
  for (int i = 2; i < n; ++i) {
    dot += "  N" + std::to_string(i) + " [role=\"body\", code=\"x = x + " +
           std::to_string(i) + ";\"];\n";
  }
  int prev = 0;
  for (int i = 2; i < n; ++i) {
    dot += "  N" + std::to_string(prev) + " -> N" + std::to_string(i) + ";\n";
    prev = i;
  }
  dot += "  N" + std::to_string(prev) + " -> N1;\n}\n";
  return dot;
}

void WriteTinyTable(const std::string& path) {
  embed::EmbedConfig config;
  config.dim = 3;
  Matrix v(2, 3);
  v << 1, 0, 0, 0, 1, 0;
  embed::SaveEmbeddingTable(embed::EmbeddingTable({"x", "="}, v, config), path);
}

// Writes DOTs of the given sizes and labels plus a manifest into dir.
void WriteDotSet(const TempDir& dir, const std::vector<int>& sizes,
                 const std::vector<int>& labels) {
  fs::create_directories(dir / "dots");
  std::string manifest = "path,label,origin\n";
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const std::string name = "g" + std::to_string(i);
    WriteFile(dir / ("dots/" + name + ".dot"), ChainDot(name, sizes[i]));
    manifest += name + ".dot," + std::to_string(labels[i]) + ",test\n";
  }
  WriteFile(dir / "manifest.csv", manifest);
  WriteTinyTable(dir / "table.txt");
}

// ---------------------------------------------------------------- config

TEST(ConfigTest, ParsesKeysCommentsAndWidths) {
  const PipelineConfig c = ParseConfigText(
      "# comment\nseed = 42\n\nembed-dim=50  # trailing\n"
      "gat-widths = 8, 8,4\nbalance = yes\nlr = 0.01\n");
  EXPECT_EQ(c.seed, 42u);
  EXPECT_EQ(c.embed.dim, 50);
  EXPECT_EQ(c.model.gat_widths, (std::vector<int>{8, 8, 4}));
  EXPECT_TRUE(c.balance);
  EXPECT_DOUBLE_EQ(c.lr, 0.01);
  EXPECT_EQ(c.batch_size, 128);
}

TEST(ConfigTest, ErrorsNameTheLine) {
  try {
    ParseConfigText("seed = 1\nwidth = 3\n");
    FAIL() << "expected UsageError";
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("width"), std::string::npos);
  }
  EXPECT_THROW(ParseConfigText("epochs = ten\n"), UsageError);
  EXPECT_THROW(ParseConfigText("epochs = 10x\n"), UsageError);
  EXPECT_THROW(ParseConfigText("just text\n"), UsageError);
  EXPECT_THROW(ParseConfigText("balance = maybe\n"), UsageError);
  EXPECT_THROW(ParseConfigText("subset = half\n"), UsageError);
}

TEST(ConfigTest, EveryKeyIsSettable) {
  for (const ConfigKey& key : ConfigKeys()) {
    PipelineConfig c;
    std::string value = key.boolean ? "true" : "1";
    if (key.name == "subset") value = "all";
    EXPECT_NO_THROW(c.Set(key.name, value)) << key.name;
  }
}

TEST(ConfigTest, CheckpointDefaultsIntoRunDir) {
  PipelineConfig c;
  EXPECT_EQ(c.CheckpointPath(), "");
  c.run = "out";
  EXPECT_EQ(c.CheckpointPath(), (fs::path("out") / "checkpoint.bin").string());
  c.checkpoint = "x.bin";
  EXPECT_EQ(c.CheckpointPath(), "x.bin");
}

TEST(CliTest, FlagsOverrideConfigFile) {
  TempDir dir("vulngraph_cli");
  WriteFile(dir / "a.cfg", "corpus = " + (dir / "corpus") +
                               "\nsynth-per-class = 3\nseed = 1\n");
  Outcome o = Invoke({"synth", "--config", dir / "a.cfg", "--synth-per-class", "2"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("functions 4"), std::string::npos);
}

// ---------------------------------------------------------------- exit codes

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(Invoke({"--help"}).code, 0);
  EXPECT_EQ(Invoke({}).code, 1);
  EXPECT_EQ(Invoke({"train", "--no-such-flag"}).code, 1);
  EXPECT_EQ(Invoke({"train"}).code, 1);
  EXPECT_EQ(ExitCodeFor(DatasetError("x")), kExitUser);
  EXPECT_EQ(ExitCodeFor(IoError("x")), kExitUser);
  EXPECT_EQ(ExitCodeFor(std::invalid_argument("x")), kExitUser);
  EXPECT_EQ(ExitCodeFor(ShapeError("x")), kExitInternal);
  EXPECT_EQ(ExitCodeFor(NumericError("x")), kExitInternal);
  EXPECT_EQ(ExitCodeFor(std::logic_error("x")), kExitInternal);
}

TEST(CliTest, MissingSettingIsNamed) {
  Outcome o = Invoke({"train"});
  EXPECT_NE(o.err.find("'dataset'"), std::string::npos);
}

// ---------------------------------------------------------------- extract

TEST(ExtractTest, TwoFilesThreeFunctions) {
  TempDir dir("vulngraph_cli");
  fs::create_directories(dir / "src");
  WriteFile(dir / "src/a.c",
            "int f(int x) {\n  if (x) {\n    return 1;\n  }\n  return 0;\n}\n"
            "void g(void) {\n  h();\n}\n");
  WriteFile(dir / "src/b.c", "int k(int y) {\n  return y;\n}\n");
  WriteFile(dir / "src/notes.txt", "ignored");
  Outcome o = Invoke({"extract", "--corpus", dir / "src", "--dots", dir / "dots"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("files 2"), std::string::npos);
  EXPECT_NE(o.out.find("functions 3"), std::string::npos);
  for (const char* name : {"a__f.dot", "a__g.dot", "b__k.dot"}) {
    EXPECT_TRUE(fs::exists(dir / ("dots/" + std::string(name)))) << name;
  }
  const std::string index = ReadFile(dir / "dots/index.csv");
  EXPECT_EQ(CountLines(index), 4u);
  EXPECT_NE(index.find("a__g.dot,a.c,g,7,"), std::string::npos);
}

TEST(ExtractTest, ParseFailureNeedsKeepGoing) {
  TempDir dir("vulngraph_cli");
  fs::create_directories(dir / "src");
  WriteFile(dir / "src/good.c", "int f(void) {\n  return 0;\n}\n");
  WriteFile(dir / "src/bad.c",
            "int ok(void) {\n  return 1;\n}\nint broken(void) {\n"
            "  x = ;\n}\n");
  Outcome o = Invoke({"extract", "--corpus", dir / "src", "--dots", dir / "dots"});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find((dir / "src/bad.c") + ":5:"), std::string::npos) << o.err;

  o = Invoke({"extract", "--corpus", dir / "src", "--dots", dir / "dots",
           "--keep-going"});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("parse failures 1"), std::string::npos);
  EXPECT_NE(o.out.find("functions 2"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir / "dots/bad__ok.dot"));
  EXPECT_FALSE(fs::exists(dir / "dots/bad__broken.dot"));
}

TEST(ExtractTest, EmptyDirectory) {
  TempDir dir("vulngraph_cli");
  fs::create_directories(dir / "src");
  Outcome o = Invoke({"extract", "--corpus", dir / "src", "--dots", dir / "dots"});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find("no input files"), std::string::npos);
}

// ---------------------------------------------------------------- embed

TEST(EmbedTest, DimOverrideAndDeterminism) {
  TempDir dir("vulngraph_cli");
  ASSERT_EQ(Invoke({"synth", "--corpus", dir / "c", "--synth-per-class", "5"}).code, 0);
  for (const char* name : {"t1.txt", "t2.txt"}) {
    Outcome o = Invoke({"embed", "--corpus", dir / "c", "--table", dir / name,
                     "--embed-dim", "12", "--seed", "9"});
    ASSERT_EQ(o.code, 0) << o.err;
  }
  const std::string a = ReadFile(dir / "t1.txt");
  EXPECT_EQ(a, ReadFile(dir / "t2.txt"));
  EXPECT_EQ(a.substr(0, 3), "12 ");
  EXPECT_GT(embed::LoadEmbeddingTable(dir / "t1.txt").size(), 0);

  Outcome o = Invoke({"embed", "--corpus", dir / "c", "--table", dir / "t3.txt",
                   "--embed-dim", "12", "--seed", "10"});
  ASSERT_EQ(o.code, 0);
  EXPECT_NE(a, ReadFile(dir / "t3.txt"));
}

TEST(EmbedTest, DefaultDim) {
  TempDir dir("vulngraph_cli");
  ASSERT_EQ(Invoke({"synth", "--corpus", dir / "c", "--synth-per-class", "2"}).code, 0);
  Outcome o = Invoke({"embed", "--corpus", dir / "c", "--table", dir / "t.txt",
                   "--embed-epochs", "1"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(embed::LoadEmbeddingTable(dir / "t.txt").dim(), 100);
}

// ---------------------------------------------------------------- build

TEST(BuildTest, FiltersSmallGraphs) {
  TempDir dir("vulngraph_cli");
  WriteDotSet(dir, {11, 12, 5, 20, 10, 13, 11, 3, 14, 15},
              {0, 1, 0, 1, 0, 1, 0, 1, 0, 1});
  Outcome o = Invoke({"build", "--dots", dir / "dots", "--table", dir / "table.txt",
                   "--manifest", dir / "manifest.csv", "--dataset", dir / "ds"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("kept 7\ndropped 3"), std::string::npos) << o.out;
  const dataset::Dataset ds = dataset::LoadDatasetDir(dir / "ds");
  ASSERT_EQ(ds.size(), 7u);
  for (const auto& g : ds.graphs) {
    EXPECT_GE(g.n, 11);
    EXPECT_EQ(g.x.cols(), 6);
  }
}

TEST(BuildTest, BalanceDownsamples) {
  TempDir dir("vulngraph_cli");
  WriteDotSet(dir, {12, 12, 12, 12, 12, 12, 12, 12}, {1, 0, 0, 1, 0, 0, 0, 0});
  Outcome o = Invoke({"build", "--dots", dir / "dots", "--table", dir / "table.txt",
                   "--manifest", dir / "manifest.csv", "--dataset", dir / "ds",
                   "--balance"});
  ASSERT_EQ(o.code, 0) << o.err;
  const dataset::Dataset ds = dataset::LoadDatasetDir(dir / "ds");
  EXPECT_EQ(ds.size(), 4u);
  EXPECT_EQ(ds.CountLabel(1), 2u);
}

TEST(BuildTest, MissingDotNamesRow) {
  TempDir dir("vulngraph_cli");
  WriteDotSet(dir, {12, 12, 12}, {0, 1, 0});
  fs::remove(dir / "dots/g1.dot");
  Outcome o = Invoke({"build", "--dots", dir / "dots", "--table", dir / "table.txt",
                   "--manifest", dir / "manifest.csv", "--dataset", dir / "ds"});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find("manifest row 2 (g1.dot)"), std::string::npos) << o.err;
}

// ---------------------------------------------------------------- train/eval/predict

class PipelineTest : public ::testing::Test {
 protected:
  void SetUp() override {
    WriteFile(dir_ / "run.cfg",
              "seed = 5\ncorpus = " + (dir_ / "corpus") +
                  "\ndots = " + (dir_ / "dots") +
                  "\ntable = " + (dir_ / "table.txt") +
                  "\nmanifest = " + (dir_ / "corpus/manifest.csv") +
                  "\ndataset = " + (dir_ / "data") +
                  "\nrun = " + (dir_ / "run") +
                  "\nsynth-per-class = 60\nembed-dim = 32\nstate-width = 64\n"
                  "gat-widths = 32,32,16\nepochs = 20\nbatch-size = 16\n"
                  "balance = true\n");
    for (const char* cmd : {"synth", "extract", "embed", "build"}) {
      Outcome o = Invoke({cmd, "--config", Config()});
      ASSERT_EQ(o.code, 0) << cmd << ": " << o.err;
    }
  }
  std::string Config() const { return dir_ / "run.cfg"; }

  TempDir dir_{"vulngraph_cli"};
};

TEST_F(PipelineTest, TrainIsReproducible) {
  Outcome a = Invoke({"train", "--config", Config(), "--epochs", "3",
                   "--seed", "7"});
  ASSERT_EQ(a.code, 0) << a.err;
  const std::string metrics = ReadFile(dir_ / "run/metrics.json");
  const std::string curve = ReadFile(dir_ / "run/loss_curve.csv");
  EXPECT_EQ(CountLines(curve), 4u);
  EXPECT_TRUE(fs::exists(dir_ / "run/checkpoint.bin"));

  fs::remove_all(dir_ / "run");
  Outcome b = Invoke({"train", "--config", Config(), "--epochs", "3",
                   "--seed", "7"});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(ReadFile(dir_ / "run/metrics.json"), metrics);
  EXPECT_EQ(ReadFile(dir_ / "run/loss_curve.csv"), curve);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(PipelineTest, ResumeMatchesUninterruptedRun) {
  ASSERT_EQ(Invoke({"train", "--config", Config(), "--epochs", "4"}).code, 0);
  const std::string full = ReadFile(dir_ / "run/metrics.json");
  fs::remove_all(dir_ / "run");
  ASSERT_EQ(Invoke({"train", "--config", Config(), "--epochs", "2"}).code, 0);
  Outcome o = Invoke({"train", "--config", Config(), "--epochs", "4", "--resume"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("resuming after epoch 2"), std::string::npos);
  EXPECT_EQ(ReadFile(dir_ / "run/metrics.json"), full);
}

TEST_F(PipelineTest, ResumeWithOtherSettingsFails) {
  ASSERT_EQ(Invoke({"train", "--config", Config(), "--epochs", "1"}).code, 0);
  Outcome o = Invoke({"train", "--config", Config(), "--epochs", "2", "--resume",
                   "--lr", "0.01"});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find("digest"), std::string::npos) << o.err;
}

TEST_F(PipelineTest, ConvergedRunEvaluatesAndPredicts) {
  ASSERT_EQ(Invoke({"train", "--config", Config()}).code, 0);

  Outcome o = Invoke({"eval", "--config", Config(), "--subset", "train"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto report = nlohmann::json::parse(o.out);
  EXPECT_GE(report["accuracy"].get<double>(), 0.95);
  EXPECT_EQ(report["count"].get<int>(), 96);

  o = Invoke({"eval", "--config", Config(), "--subset", "all"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(nlohmann::json::parse(o.out)["count"].get<int>(), 120);

  // The generator's ground truth: even-indexed functions are vulnerable.
  const dataset::SyntheticCorpus corpus =
      dataset::GenerateSyntheticCorpus(60, DeriveSeed(5, "synth"));
  for (int k : {0, 1}) {
    const auto& fn = corpus.functions[k];
    o = Invoke({"predict", "--config", Config(), "--source",
             dir_ / ("corpus/" + fn.file_stem + ".c")});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(o.out.substr(0, o.out.find('\t') + 2),
              fn.function_name + "\t" + std::to_string(fn.label));
  }
}

TEST_F(PipelineTest, WidthMismatchIsUserError) {
  ASSERT_EQ(Invoke({"train", "--config", Config(), "--epochs", "1"}).code, 0);
  ASSERT_EQ(Invoke({"embed", "--config", Config(), "--table", dir_ / "t8.txt",
                 "--embed-dim", "8"}).code, 0);
  Outcome o = Invoke({"predict", "--config", Config(), "--table", dir_ / "t8.txt",
                   "--source", dir_ / "corpus/synth_00000.c"});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find("16 but the checkpoint expects 64"), std::string::npos)
      << o.err;

  ASSERT_EQ(Invoke({"build", "--config", Config(), "--table", dir_ / "t8.txt",
                 "--dataset", dir_ / "data8"}).code, 0);
  o = Invoke({"eval", "--config", Config(), "--dataset", dir_ / "data8"});
  EXPECT_EQ(o.code, 1);
}

}  // namespace
}  // namespace vulngraph::cli

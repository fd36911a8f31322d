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
// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails. Criterion numbers given on the command line
// restrict the run to those criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cfg_fixtures.h"
#include "planted_corpus.h"
#include "test_random.h"
#include "vulngraph/autodiff/gradcheck.h"
#include "vulngraph/autodiff/ops.h"
#include "vulngraph/autodiff/tape.h"
#include "vulngraph/cli/commands.h"
#include "vulngraph/dataset/dataset.h"
#include "vulngraph/dataset/graph.h"
#include "vulngraph/dataset/synthetic.h"
#include "vulngraph/embed/corpus.h"
#include "vulngraph/embed/skipgram.h"
#include "vulngraph/frontend/cfg.h"
#include "vulngraph/frontend/parser.h"
#include "vulngraph/io.h"
#include "vulngraph/rng.h"
#include "vulngraph/segnn/model.h"
#include "vulngraph/train/adam.h"
#include "vulngraph/train/checkpoint.h"
#include "vulngraph/train/trainer.h"

namespace vulngraph {
namespace {

namespace fs = std::filesystem;
using ad::Tape;
using ad::Tensor;
using dataset::AttributedGraph;
using dataset::Dataset;
using segnn::ModelShape;
using segnn::SegnnParams;
using testing::RandomGraph;
using testing::RandomMatrix;

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::string Fmt(const char* format, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, a);
  return buf;
}

struct Verdict {
  bool pass = false;
  std::string detail;
};

class ScratchDir {
 public:
  explicit ScratchDir(const std::string& name)
      : path_(fs::temp_directory_path() / ("vulngraph_acceptance_" + name)) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~ScratchDir() { fs::remove_all(path_); }
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;
  std::string operator/(const std::string& leaf) const {
    return (path_ / leaf).string();
  }

 private:
  fs::path path_;
};

bool SameMatrices(const SegnnParams& a, const SegnnParams& b) {
  const auto la = segnn::TensorList(a);
  const auto lb = segnn::TensorList(b);
  if (la.size() != lb.size()) return false;
  for (std::size_t i = 0; i < la.size(); ++i) {
    if (la[i]->rows() != lb[i]->rows() || la[i]->cols() != lb[i]->cols() ||
        *la[i] != *lb[i]) {
      return false;
    }
  }
  return true;
}

// Contracting an op's output with a fixed random matrix gives a scalar
// whose gradient reaches every output entry with a distinct weight.
Tensor Contract(Tape& t, const Tensor& y, std::uint64_t seed) {
  Rng rng(seed);
  return ad::Sum(ad::Hadamard(y, t.Constant(RandomMatrix(rng, y.rows(), y.cols()))));
}

// ---------------------------------------------------------------- 1

Verdict GradientFidelity() {
  const auto start = Clock::now();
  std::ostringstream detail;

  double model_err = 0.0;
  std::size_t coords = 0;
  Rng rng(101);
  for (int k = 0; k < 5; ++k) {
    const int n = 8 + static_cast<int>(rng.UniformIndex(9));
    const AttributedGraph g = RandomGraph(rng, n, 200);
    SegnnParams p = segnn::InitParams(ModelShape{}, 200 + k);
    for (Matrix* m : {&p.ggrn.b, &p.ggrn.b_r, &p.ggrn.b_u, &p.ggrn.b_c,
                      &p.dense_b, &p.head_b}) {
      *m = RandomMatrix(rng, m->rows(), m->cols(), 0.1);
    }
    Tape tape;
    const auto vars = segnn::Bind(tape, p);
    tape.Backward(ad::BceWithLogits(segnn::ModelForward(tape, g, vars), g.label));
    const SegnnParams grads = segnn::CollectGradients(vars);
    std::vector<Matrix> analytic;
    for (const Matrix* m : segnn::TensorList(grads)) analytic.push_back(*m);
    ad::GradCheckOptions options;
    options.max_coords_per_tensor = ad::kMinSampledCoords;
    options.seed = 300 + k;
    const auto report = ad::NumericGradientCheck(
        [&] {
          Tape t(false);
          return ad::BceWithLogits(segnn::ModelForward(t, g, segnn::Bind(t, p)),
                                   g.label)
              .scalar();
        },
        segnn::TensorList(p), analytic, options);
    model_err = std::max(model_err, report.max_rel_error);
    coords += report.coords_checked;
  }

  struct OpCheck {
    const char* name;
    ad::TapeFunction f;
    std::vector<Matrix> inputs;
  };
  Rng r(102);
  const auto adj = segnn::MakeAdjacency(
      6, std::vector<frontend::Edge>{{0, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 5},
                                     {5, 1}, {3, 1}});
  ad::Mask mask = ad::Mask::Zero(5, 7);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 7; ++j) mask(i, j) = (i + 2 * j) % 3 != 0 || i == j;
  }
  std::vector<OpCheck> ops = {
      {"matmul",
       [](Tape& t, std::span<const Tensor> in) {
         return Contract(t, ad::MatMul(in[0], in[1]), 1);
       },
       {RandomMatrix(r, 4, 5), RandomMatrix(r, 5, 3)}},
      {"sigmoid",
       [](Tape& t, std::span<const Tensor> in) {
         return Contract(t, ad::Apply(in[0], ad::Activation::Sigmoid()), 2);
       },
       {RandomMatrix(r, 4, 4, 3.0)}},
      {"tanh",
       [](Tape& t, std::span<const Tensor> in) {
         return Contract(t, ad::Apply(in[0], ad::Activation::Tanh()), 3);
       },
       {RandomMatrix(r, 4, 4, 3.0)}},
      {"leaky_relu",
       [](Tape& t, std::span<const Tensor> in) {
         return Contract(t, ad::Apply(in[0], ad::Activation::LeakyRelu(0.2)), 4);
       },
       {RandomMatrix(r, 4, 4, 3.0)}},
      {"elu",
       [](Tape& t, std::span<const Tensor> in) {
         return Contract(t, ad::Apply(in[0], ad::Activation::Elu()), 5);
       },
       {RandomMatrix(r, 4, 4, 3.0)}},
      {"softmax",
       [&mask](Tape& t, std::span<const Tensor> in) {
         return Contract(t, ad::MaskedRowSoftmax(in[0], mask), 6);
       },
       {RandomMatrix(r, 5, 7, 2.0)}},
      {"max_pool",
       [](Tape& t, std::span<const Tensor> in) {
         return Contract(t, ad::ReduceMaxOverRows(in[0]), 7);
       },
       {RandomMatrix(r, 6, 5)}},
      {"gru",
       [&adj](Tape& t, std::span<const Tensor> in) {
         segnn::GgrnVars v{in[1], in[2], in[3],  in[4],  in[5],  in[6],
                           in[7], in[8], in[9], in[10], in[11], in[12]};
         return Contract(t, segnn::GruUpdate(in[0], segnn::GgrnAggregate(in[0], adj, v), v), 8);
       },
       {}},
      {"gat_layer",
       [&adj](Tape& t, std::span<const Tensor> in) {
         return Contract(t, segnn::GatLayer(in[0], adj, {in[1], in[2]}, 0.2), 9);
       },
       {RandomMatrix(r, 6, 5), RandomMatrix(r, 4, 5), RandomMatrix(r, 1, 8)}},
  };
  const int z = 4;
  ops[7].inputs.push_back(RandomMatrix(r, 6, z));
  for (int i = 0; i < 12; ++i) {
    const bool bias = i == 2 || i == 5 || i == 8 || i == 11;
    ops[7].inputs.push_back(RandomMatrix(r, bias ? 1 : z, z, 0.5));
  }

  double op_err = 0.0;
  std::string worst = "none";
  for (OpCheck& op : ops) {
    const auto report = ad::CheckTapeFunction(op.f, op.inputs);
    if (report.max_rel_error >= op_err) {
      op_err = report.max_rel_error;
      worst = op.name;
    }
  }

  const double secs = Seconds(start);
  detail << "full model max rel err " << Fmt("%.3g", model_err) << " over "
         << coords << " coords (< 1e-4); per-op max " << Fmt("%.3g", op_err)
         << " at " << worst << " (< 1e-5); " << Fmt("%.1f", secs) << " s (< 60)";
  return {model_err < 1e-4 && op_err < 1e-5 && secs < 60.0, detail.str()};
}

// ---------------------------------------------------------------- 2

Verdict PermutationInvariance() {
  const auto start = Clock::now();
  Rng rng(201);
  const SegnnParams p = segnn::InitParams(ModelShape{}, 202);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const int n = 3 + static_cast<int>(rng.UniformIndex(18));
    const AttributedGraph g = RandomGraph(rng, n, 200);
    const AttributedGraph h =
        testing::PermuteGraph(g, testing::RandomPermutation(rng, n));
    worst = std::max(worst, std::abs(segnn::PredictLogit(p, g) -
                                     segnn::PredictLogit(p, h)));
  }
  const double secs = Seconds(start);
  return {worst < 1e-9 && secs < 30.0,
          "100 graphs, max |logit difference| " + Fmt("%.3g", worst) +
              " (< 1e-9); " + Fmt("%.1f", secs) + " s (< 30)"};
}

// ---------------------------------------------------------------- 3

Verdict SoftmaxContract() {
  Rng rng(301);
  double worst_sum = 0.0;
  int masked_nonzero = 0;
  for (int k = 0; k < 1000; ++k) {
    const auto rows = static_cast<Eigen::Index>(1 + rng.UniformIndex(12));
    const auto cols = static_cast<Eigen::Index>(1 + rng.UniformIndex(12));
    const double scale = k % 10 == 0 ? 500.0 : 5.0;
    const double density = rng.Uniform(0.05, 1.0);
    ad::Mask mask(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
      bool any = false;
      for (Eigen::Index j = 0; j < cols; ++j) {
        mask(i, j) = rng.Uniform01() < density;
        any = any || mask(i, j);
      }
      if (!any) mask(i, static_cast<Eigen::Index>(rng.UniformIndex(cols))) = true;
    }
    Tape t(false);
    const Matrix a =
        ad::MaskedRowSoftmax(t.Constant(RandomMatrix(rng, rows, cols, scale)), mask)
            .value();
    for (Eigen::Index i = 0; i < rows; ++i) {
      worst_sum = std::max(worst_sum, std::abs(a.row(i).sum() - 1.0));
      for (Eigen::Index j = 0; j < cols; ++j) {
        masked_nonzero += !mask(i, j) && a(i, j) != 0.0;
      }
    }
  }
  return {worst_sum <= 1e-12 && masked_nonzero == 0,
          "1000 matrices, max |row sum - 1| " + Fmt("%.3g", worst_sum) +
              " (<= 1e-12), masked non-zeros " + std::to_string(masked_nonzero)};
}

// ---------------------------------------------------------------- 4

std::vector<frontend::Cfg> FixtureCfgs() {
  std::vector<frontend::Cfg> cfgs;
  for (const auto& fx : testing::GoldenCfgFixtures()) {
    cfgs.push_back(frontend::BuildCfg(frontend::ParseFunction(fx.source)));
  }
  const auto corpus = dataset::GenerateSyntheticCorpus(10, 401);
  for (const auto& fn : corpus.functions) {
    cfgs.push_back(frontend::BuildCfg(frontend::ParseFunction(fn.source)));
  }
  return cfgs;
}

Verdict StateInit() {
  const std::vector<frontend::Cfg> cfgs = FixtureCfgs();
  std::vector<std::string> texts;
  for (const auto& c : cfgs) texts.push_back(c.source);
  const embed::Corpus corpus = embed::BuildCorpus(texts);

  int checked = 0, bad = 0;
  for (int d : {100, 8}) {
    embed::EmbedConfig ec;
    ec.dim = d;
    ec.seed = 402;
    const embed::EmbeddingTable table = embed::TrainSkipgram(corpus, ec);
    for (const auto& cfg : cfgs) {
      const AttributedGraph g = dataset::MakeGraph(cfg, table, 0, "fixture");
      for (int z : {2 * d, 200}) {
        if (z < 2 * d) continue;
        Tape t(false);
        const Matrix h = segnn::InitState(t.Constant(g.x), z).value();
        const auto f = g.x.cols();
        const bool ok = h.rows() == g.x.rows() && h.cols() == z &&
                        h.leftCols(f) == g.x &&
                        (h.rightCols(z - f).array() == 0.0).all();
        bad += !ok;
        ++checked;
      }
    }
  }
  return {checked > 0 && bad == 0,
          std::to_string(checked) + " (graph, z) cases over " +
              std::to_string(cfgs.size()) + " fixture graphs, mismatches " +
              std::to_string(bad)};
}

// ---------------------------------------------------------------- 5

Verdict CfgFixtures() {
  const auto fixtures = testing::GoldenCfgFixtures();
  const std::set<std::string> required = {
      "straight_line", "if_no_else", "if_else",      "nested_if",   "while_loop",
      "for_loop",      "while_break", "for_continue", "early_return"};
  std::set<std::string> names;
  std::string mismatched;
  for (const auto& fx : fixtures) {
    names.insert(fx.name);
    const frontend::Cfg cfg =
        frontend::BuildCfg(frontend::ParseFunction(fx.source));
    bool ok = cfg.blocks.size() == fx.block_code.size() && cfg.edges == fx.edges;
    for (std::size_t i = 0; ok && i < fx.block_code.size(); ++i) {
      ok = cfg.blocks[i].id == static_cast<int>(i) &&
           cfg.blocks[i].code == fx.block_code[i];
    }
    if (!ok) mismatched += " " + fx.name;
  }
  std::string missing;
  for (const auto& r : required) {
    if (!names.count(r)) missing += " " + r;
  }
  return {fixtures.size() >= 10 && mismatched.empty() && missing.empty(),
          std::to_string(fixtures.size()) + " golden functions; mismatched:" +
              (mismatched.empty() ? " none" : mismatched) +
              "; uncovered constructs:" + (missing.empty() ? " none" : missing)};
}

// ---------------------------------------------------------------- 6

Dataset RandomSizedDataset(std::uint64_t seed, int count) {
  Rng rng(seed);
  Dataset ds;
  for (int i = 0; i < count; ++i) {
    const int n = 3 + static_cast<int>(rng.UniformIndex(25));
    AttributedGraph g = RandomGraph(rng, n, 4);
    g.name = "g" + std::to_string(i);
    g.label = rng.Uniform01() < 0.3 ? 1 : 0;
    ds.graphs.push_back(std::move(g));
  }
  return ds;
}

struct PipelineOutput {
  Dataset filtered, balanced, train, test;
};

PipelineOutput RunPipeline(const Dataset& ds, std::uint64_t seed) {
  PipelineOutput out;
  out.filtered = dataset::FilterMinSize(ds, 11);
  out.balanced = dataset::BalanceDataset(out.filtered, DeriveSeed(seed, "balance"));
  std::tie(out.train, out.test) =
      dataset::SplitDataset(out.balanced, {0.8, DeriveSeed(seed, "split")});
  return out;
}

bool SameDataset(const Dataset& a, const Dataset& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!dataset::SameGraph(a.graphs[i], b.graphs[i])) return false;
  }
  return true;
}

Verdict DatasetPipeline() {
  std::vector<std::string> failures;
  int cases = 0;
  for (int count : {40, 97, 300}) {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      ++cases;
      const Dataset ds = RandomSizedDataset(600 + seed * 1000 + count, count);
      const PipelineOutput a = RunPipeline(ds, seed);
      const PipelineOutput b = RunPipeline(ds, seed);
      const std::string tag =
          "n=" + std::to_string(count) + ",seed=" + std::to_string(seed) + ": ";

      std::vector<std::string> expect_kept;
      for (const auto& g : ds.graphs) {
        if (g.n >= 11) expect_kept.push_back(g.name);
      }
      std::vector<std::string> kept;
      for (const auto& g : a.filtered.graphs) kept.push_back(g.name);
      if (kept != expect_kept) failures.push_back(tag + "filter");

      const std::size_t minority =
          std::min(a.filtered.CountLabel(0), a.filtered.CountLabel(1));
      if (a.balanced.CountLabel(0) != minority ||
          a.balanced.CountLabel(1) != minority) {
        failures.push_back(tag + "balance");
      }

      const std::size_t m = a.balanced.size();
      const auto expect_train =
          static_cast<std::size_t>(std::ceil(0.8 * static_cast<double>(m) - 1e-9));
      std::set<std::string> seen;
      for (const auto* part : {&a.train, &a.test}) {
        for (const auto& g : part->graphs) seen.insert(g.name);
      }
      if (a.train.size() != expect_train || a.test.size() != m - expect_train ||
          seen.size() != m) {
        failures.push_back(tag + "split");
      }

      if (!SameDataset(a.filtered, b.filtered) ||
          !SameDataset(a.balanced, b.balanced) || !SameDataset(a.train, b.train) ||
          !SameDataset(a.test, b.test)) {
        failures.push_back(tag + "determinism");
      }
    }
  }
  std::string detail = std::to_string(cases) + " (size, seed) cases; failures:";
  for (const auto& f : failures) detail += " " + f;
  if (failures.empty()) detail += " none";
  return {failures.empty(), detail};
}

// ---------------------------------------------------------------- 7

struct SeedRun {
  int reached_epoch = 0;  // 0 when 0.90 was never reached
  double accuracy = 0.0;
  double initial_loss = 0.0;
  double loss_after_first = 0.0;
};

SeedRun LearnSeed(std::uint64_t seed) {
  const auto corpus =
      dataset::GenerateSyntheticCorpus(500, DeriveSeed(seed, "synth"));
  std::vector<std::string> texts;
  for (const auto& fn : corpus.functions) texts.push_back(fn.source);
  embed::EmbedConfig ec;
  ec.seed = DeriveSeed(seed, "embed");
  const embed::EmbeddingTable table =
      embed::TrainSkipgram(embed::BuildCorpus(texts), ec);

  Dataset ds;
  for (std::size_t i = 0; i < corpus.functions.size(); ++i) {
    const auto& fn = corpus.functions[i];
    ds.graphs.push_back(dataset::LoadGraph(
        frontend::CfgToDot(frontend::BuildCfg(frontend::ParseFunction(fn.source))),
        table, corpus.manifest.rows[i].label, corpus.manifest.rows[i].origin));
  }
  const PipelineOutput data = RunPipeline(ds, seed);

  train::TrainConfig tc;
  tc.seed = DeriveSeed(seed, "train");
  train::TrainOptions options;
  options.test = &data.test;
  SeedRun run;
  options.on_epoch = [&](const train::EpochRecord& r, const SegnnParams& p) {
    if (r.epoch == 1) {
      run.loss_after_first = train::EvaluateModel(p, data.train).mean_loss;
    }
    run.accuracy = r.test_accuracy.value_or(0.0);
    if (run.accuracy >= 0.90) {
      run.reached_epoch = r.epoch;
      return false;
    }
    return true;
  };
  ModelShape shape;
  shape.input_width = 2 * table.dim();
  const auto result = train::TrainModel(data.train, shape, tc, options);
  run.initial_loss = result.history.initial_loss;
  return run;
}

Verdict Learnability() {
  const auto start = Clock::now();
  int reached = 0, decreased = 0;
  std::ostringstream detail;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SeedRun run = LearnSeed(seed);
    reached += run.reached_epoch > 0;
    decreased += run.loss_after_first < run.initial_loss;
    std::printf("      seed %llu: test acc %.3f %s; train loss %.4f -> %.4f after epoch 1\n",
                static_cast<unsigned long long>(seed), run.accuracy,
                run.reached_epoch > 0
                    ? ("at epoch " + std::to_string(run.reached_epoch)).c_str()
                    : "after 30 epochs",
                run.initial_loss, run.loss_after_first);
    std::fflush(stdout);
  }
  const double secs = Seconds(start);
  detail << reached << "/10 seeds reach test acc >= 0.90 within 30 epochs (>= 8); "
         << "first-epoch loss below initial loss for " << decreased
         << "/10 (>= 95%); " << Fmt("%.0f", secs) << " s (< 900)";
  return {reached >= 8 && decreased >= 10 && secs < 900.0, detail.str()};
}

// ---------------------------------------------------------------- 8

int Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "vulngraph");
  std::ostringstream out, err;
  const int code = cli::RunCli(args, out, err);
  if (code != 0) std::fprintf(stderr, "%s", err.str().c_str());
  return code;
}

Verdict DeterminismAndResume() {
  ScratchDir dir("determinism");
  WriteFile(dir / "run.cfg",
            "seed = 11\ncorpus = " + (dir / "corpus") + "\ndots = " + (dir / "dots") +
                "\ntable = " + (dir / "table.txt") + "\nmanifest = " +
                (dir / "corpus/manifest.csv") + "\ndataset = " + (dir / "data") +
                "\nsynth-per-class = 40\nbatch-size = 16\nbalance = true\n");
  const std::string cfg = dir / "run.cfg";
  for (const char* cmd : {"synth", "extract", "embed", "build"}) {
    if (Cli({cmd, "--config", cfg}) != 0) {
      return {false, std::string(cmd) + " failed"};
    }
  }
  auto train = [&](const std::string& run, int epochs, bool resume) {
    std::vector<std::string> args = {"train", "--config", cfg, "--run", dir / run,
                                     "--epochs", std::to_string(epochs)};
    if (resume) args.push_back("--resume");
    return Cli(args);
  };
  if (train("a", 5, false) != 0 || train("b", 5, false) != 0 ||
      train("c", 3, false) != 0 || train("c", 5, true) != 0) {
    return {false, "train failed"};
  }
  auto file = [&](const std::string& run, const char* leaf) {
    return ReadFile(dir / (run + "/" + leaf));
  };
  const bool same_files =
      file("a", "metrics.json") == file("b", "metrics.json") &&
      file("a", "loss_curve.csv") == file("b", "loss_curve.csv") &&
      file("a", "checkpoint.bin") == file("b", "checkpoint.bin");
  const train::Checkpoint full = train::LoadCheckpoint(dir / "a/checkpoint.bin");
  const train::Checkpoint resumed = train::LoadCheckpoint(dir / "c/checkpoint.bin");
  const bool same_resume =
      SameMatrices(full.params, resumed.params) &&
      SameMatrices(full.adam.m, resumed.adam.m) &&
      SameMatrices(full.adam.v, resumed.adam.v) &&
      full.adam.step == resumed.adam.step &&
      file("a", "metrics.json") == file("c", "metrics.json") &&
      file("a", "loss_curve.csv") == file("c", "loss_curve.csv");
  return {same_files && same_resume,
          std::string("repeat run files identical: ") + (same_files ? "yes" : "no") +
              "; resumed at epoch 3 of 5 bitwise equal: " +
              (same_resume ? "yes" : "no")};
}

// ---------------------------------------------------------------- 9

Verdict EmbeddingSanity() {
  const embed::Corpus corpus = testing::PlantedCooccurrenceCorpus();
  int holds = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    embed::EmbedConfig c;
    c.dim = 16;
    c.window = 2;
    c.epochs = 20;
    c.seed = seed;
    const embed::EmbeddingTable t = embed::TrainSkipgram(corpus, c);
    auto vec = [&](const char* w) { return RowVector(t.vectors().row(*t.Find(w))); };
    holds += embed::Cosine(vec("p"), vec("q")) > embed::Cosine(vec("p"), vec("r"));
  }

  double worst = 0.0;
  Rng rng(901);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix input = RandomMatrix(rng, 10, 8), output = RandomMatrix(rng, 10, 8);
    const int center = static_cast<int>(rng.UniformIndex(10));
    const int context = static_cast<int>(rng.UniformIndex(10));
    std::vector<int> negatives;
    for (int k = 0; k < 5; ++k) negatives.push_back(static_cast<int>(rng.UniformIndex(10)));
    // With lr = 1 the update's deltas are the negated gradient.
    Matrix in2 = input, out2 = output;
    RowVector scratch(8);
    embed::SgnsUpdate(in2, out2, center, context, negatives, 1.0, scratch);
    const std::vector<Matrix> analytic = {input - in2, output - out2};
    std::vector<Matrix*> params = {&input, &output};
    const auto report = ad::NumericGradientCheck(
        [&] { return embed::SgnsLoss(input, output, center, context, negatives); },
        params, analytic);
    worst = std::max(worst, report.max_rel_error);
  }
  return {holds >= 4 && worst < 1e-5,
          "cos(p,q) > cos(p,r) for " + std::to_string(holds) +
              "/5 seeds (>= 4); update gradient max rel err " + Fmt("%.3g", worst) +
              " (< 1e-5)"};
}

// ---------------------------------------------------------------- 10

Verdict GradientAccumulation() {
  Rng rng(1001);
  Dataset ds;
  for (int i = 0; i < 6; ++i) ds.graphs.push_back(RandomGraph(rng, 8 + i, 200));
  const SegnnParams params = segnn::InitParams(ModelShape{}, 1002);
  const std::vector<std::size_t> order = {4, 1, 5, 0, 3, 2};

  const train::BatchGradient batch = train::BatchMeanGradient(params, ds, order);

  // Per-graph gradients from independent tapes.
  SegnnParams mean = segnn::ZeroParams(params.shape);
  for (std::size_t i : order) {
    Tape tape;
    const auto vars = segnn::Bind(tape, params);
    tape.Backward(ad::BceWithLogits(segnn::ModelForward(tape, ds.graphs[i], vars),
                                    ds.graphs[i].label));
    segnn::AddGradients(vars, mean);
  }
  for (Matrix* m : segnn::TensorList(mean)) *m /= static_cast<double>(order.size());
  const bool same_grad = SameMatrices(batch.grad, mean);

  SegnnParams a = params, b = params;
  train::AdamState sa = train::AdamState::Zeros(params.shape), sb = sa;
  train::AdamStep(a, batch.grad, sa, {});
  train::AdamStep(b, mean, sb, {});
  const bool same_update = SameMatrices(a, b);
  return {same_grad && same_update,
          std::string("batch of 6 vs mean of per-graph gradients: gradient ") +
              (same_grad ? "identical" : "differs") + ", Adam update " +
              (same_update ? "identical" : "differs")};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Verdict()> run;
};

}  // namespace
}  // namespace vulngraph

int main(int argc, char** argv) {
  using vulngraph::Criterion;
  const std::vector<Criterion> criteria = {
      {1, "gradient fidelity", vulngraph::GradientFidelity},
      {2, "permutation invariance", vulngraph::PermutationInvariance},
      {3, "softmax contract", vulngraph::SoftmaxContract},
      {4, "state initialization", vulngraph::StateInit},
      {5, "CFG fixtures", vulngraph::CfgFixtures},
      {6, "dataset pipeline", vulngraph::DatasetPipeline},
      {7, "end-to-end learnability", vulngraph::Learnability},
      {8, "determinism and resume", vulngraph::DeterminismAndResume},
      {9, "embedding sanity", vulngraph::EmbeddingSanity},
      {10, "gradient accumulation", vulngraph::GradientAccumulation},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const Criterion& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    vulngraph::Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::printf("%s [%d] %s: %s\n", v.pass ? "PASS" : "FAIL", c.id, c.name,
                v.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}

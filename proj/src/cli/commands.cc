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
#include "vulngraph/cli/commands.h"

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <system_error>
#include <vector>

#include "json.hpp"
#include "vulngraph/autodiff/ops.h"
#include "vulngraph/dataset/dataset.h"
#include "vulngraph/dataset/graph.h"
#include "vulngraph/dataset/manifest.h"
#include "vulngraph/dataset/synthetic.h"
#include "vulngraph/embed/corpus.h"
#include "vulngraph/frontend/cfg.h"
#include "vulngraph/frontend/parser.h"
#include "vulngraph/io.h"
#include "vulngraph/rng.h"
#include "vulngraph/train/checkpoint.h"
#include "vulngraph/train/metrics.h"
#include "vulngraph/train/trainer.h"

namespace vulngraph::cli {
namespace fs = std::filesystem;
namespace {

const std::string& Require(const std::string& value, const char* key) {
  if (value.empty()) {
    throw UsageError(std::string("missing setting '") + key + "' (pass --" +
                     key + " or set it in --config)");
  }
  return value;
}

void MakeDirs(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir + ": " + ec.message());
}

std::vector<fs::path> SourceFiles(const std::string& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw UsageError("not a directory: " + dir);
  std::vector<fs::path> files;
  for (const fs::directory_entry& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".c") {
      files.push_back(e.path());
    }
  }
  if (files.empty()) throw UsageError("no input files in " + dir);
  std::sort(files.begin(), files.end());
  return files;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// "file:line[:column]: message" for an error raised in text that starts at
// base_line of file.
std::string Located(const fs::path& file, int base_line,
                    const std::exception& e) {
  const auto* pe = dynamic_cast<const PositionedError*>(&e);
  if (pe == nullptr || pe->line() <= 0) {
    return file.string() + ":" + std::to_string(base_line) + ": " + e.what();
  }
  std::string out =
      file.string() + ":" + std::to_string(base_line + pe->line() - 1);
  if (pe->column() > 0) out += ":" + std::to_string(pe->column());
  return out + ": " + pe->message();
}

struct ParsedFunction {
  frontend::FunctionSource source;
  frontend::Cfg cfg;
};

// Splits and parses every function of one file. Failures are reported on err
// and counted; the successfully parsed functions are returned.
std::vector<ParsedFunction> ParseFile(const fs::path& file, std::ostream& err,
                                      int& failures) {
  std::vector<ParsedFunction> out;
  std::vector<frontend::FunctionSource> functions;
  try {
    functions = frontend::SplitSourceIntoFunctions(ReadFile(file.string()));
  } catch (const IoError&) {
    throw;
  } catch (const Error& e) {
    err << "error: " << Located(file, 1, e) << '\n';
    ++failures;
    return out;
  }
  for (frontend::FunctionSource& fn : functions) {
    try {
      frontend::Cfg cfg = frontend::BuildCfg(frontend::ParseFunction(fn.text));
      out.push_back({std::move(fn), std::move(cfg)});
    } catch (const Error& e) {
      err << "error: " << Located(file, fn.line, e) << '\n';
      ++failures;
    }
  }
  return out;
}

int FailureExit(const PipelineConfig& config, int failures,
                std::ostream& err) {
  if (failures == 0 || config.keep_going) return kExitOk;
  err << "error: " << failures
      << " input(s) failed to parse; pass --keep-going to skip them\n";
  return kExitUser;
}

int FeatureWidth(const dataset::Dataset& ds) {
  const int width = static_cast<int>(ds.graphs.front().x.cols());
  for (const dataset::AttributedGraph& g : ds.graphs) {
    if (g.x.cols() != width) {
      throw DatasetError("graph " + g.name + " has feature width " +
                         std::to_string(g.x.cols()) + ", expected " +
                         std::to_string(width));
    }
  }
  return width;
}

void CheckInputWidth(int data_width, const segnn::ModelShape& shape,
                     const char* what) {
  if (data_width != shape.input_width) {
    throw UsageError(std::string(what) + " " + std::to_string(data_width) +
                     " but the checkpoint expects " +
                     std::to_string(shape.input_width));
  }
}

dataset::Dataset LoadNonEmpty(const std::string& dir) {
  dataset::Dataset ds = dataset::LoadDatasetDir(dir);
  if (ds.empty()) throw DatasetError("dataset " + dir + " is empty");
  return ds;
}

train::TrainConfig MakeTrainConfig(const PipelineConfig& config) {
  train::TrainConfig tc;
  tc.batch_size = config.batch_size;
  tc.epochs = config.epochs;
  tc.seed = DeriveSeed(config.seed, "train");
  tc.adam.learning_rate = config.lr;
  tc.checkpoint_path = config.CheckpointPath();
  return tc;
}

dataset::SplitSpec MakeSplit(const PipelineConfig& config) {
  return {config.train_fraction, DeriveSeed(config.seed, "split")};
}

}  // namespace

int CmdExtract(const PipelineConfig& config, std::ostream& out,
               std::ostream& err) {
  const std::vector<fs::path> files = SourceFiles(Require(config.corpus, "corpus"));
  const fs::path dots = Require(config.dots, "dots");
  MakeDirs(dots.string());

  int failures = 0;
  std::size_t written = 0;
  std::string index = "dot,file,function,line,blocks\n";
  std::set<std::string> seen;
  for (const fs::path& file : files) {
    for (const ParsedFunction& pf : ParseFile(file, err, failures)) {
      const std::string name =
          file.stem().string() + "__" + pf.source.name + ".dot";
      if (!seen.insert(name).second) {
        err << "error: " << file.string() << ":" << pf.source.line
            << ": duplicate function " << pf.source.name << '\n';
        ++failures;
        continue;
      }
      WriteFile((dots / name).string(), frontend::CfgToDot(pf.cfg));
      index += CsvField(name) + "," + CsvField(file.filename().string()) +
               "," + CsvField(pf.source.name) + "," +
               std::to_string(pf.source.line) + "," +
               std::to_string(pf.cfg.blocks.size()) + "\n";
      ++written;
    }
  }
  WriteFile((dots / "index.csv").string(), index);
  out << "files " << files.size() << "\nfunctions " << written
      << "\nparse failures " << failures << '\n';
  return FailureExit(config, failures, err);
}

int CmdEmbed(const PipelineConfig& config, std::ostream& out,
             std::ostream& err) {
  const std::vector<fs::path> files = SourceFiles(Require(config.corpus, "corpus"));
  const std::string& table_path = Require(config.table, "table");

  int failures = 0;
  std::vector<std::string> texts;
  for (const fs::path& file : files) {
    for (ParsedFunction& pf : ParseFile(file, err, failures)) {
      texts.push_back(std::move(pf.source.text));
    }
  }
  if (const int code = FailureExit(config, failures, err); code != kExitOk) {
    return code;
  }

  embed::EmbedConfig ec = config.embed;
  ec.seed = DeriveSeed(config.seed, "embed");
  const embed::Corpus corpus = embed::BuildCorpus(texts);
  const embed::EmbeddingTable table = embed::TrainSkipgram(corpus, ec);
  if (const fs::path parent = fs::path(table_path).parent_path();
      !parent.empty()) {
    MakeDirs(parent.string());
  }
  embed::SaveEmbeddingTable(table, table_path);
  out << "functions " << texts.size() << "\ntokens " << corpus.TotalTokens()
      << "\nvocabulary " << table.size() << "\ndim " << table.dim() << '\n';
  return kExitOk;
}

int CmdBuild(const PipelineConfig& config, std::ostream& out,
             std::ostream& /*err*/) {
  const fs::path dots = Require(config.dots, "dots");
  const embed::EmbeddingTable table =
      embed::LoadEmbeddingTable(Require(config.table, "table"));
  const dataset::Manifest manifest =
      dataset::LoadManifest(Require(config.manifest, "manifest"));
  const std::string& out_dir = Require(config.dataset, "dataset");
  if (config.min_nodes < 0) throw UsageError("min-nodes must be >= 0");

  dataset::Dataset ds;
  ds.provenance.push_back("built from " + config.manifest);
  for (std::size_t i = 0; i < manifest.rows.size(); ++i) {
    const dataset::ManifestRow& row = manifest.rows[i];
    const fs::path path = dots / row.path;
    const std::string where = "manifest row " + std::to_string(i + 1) + " (" +
                              row.path + ")";
    std::error_code ec;
    if (!fs::is_regular_file(path, ec)) {
      throw DatasetError(where + ": no DOT file at " + path.string());
    }
    try {
      ds.graphs.push_back(dataset::LoadGraph(
          ReadFile(path.string()), table, row.label,
          row.origin.empty() ? row.path : row.origin));
    } catch (const Error& e) {
      throw DatasetError(where + ": " + e.what());
    }
  }

  dataset::Dataset kept = dataset::FilterMinSize(ds, config.min_nodes);
  out << "graphs " << ds.size() << "\nkept " << kept.size() << "\ndropped "
      << ds.size() - kept.size() << '\n';
  if (config.balance) {
    kept = dataset::BalanceDataset(kept, DeriveSeed(config.seed, "balance"));
    out << "balanced " << kept.size() << " (" << kept.CountLabel(1)
        << " vulnerable, " << kept.CountLabel(0) << " safe)\n";
  }
  dataset::SaveDatasetDir(kept, out_dir);
  return kExitOk;
}

int CmdSynth(const PipelineConfig& config, std::ostream& out,
             std::ostream& /*err*/) {
  const std::string& dir = Require(config.corpus, "corpus");
  if (config.synth_per_class < 1) {
    throw UsageError("synth-per-class must be >= 1");
  }
  const dataset::SyntheticCorpus corpus = dataset::GenerateSyntheticCorpus(
      config.synth_per_class, DeriveSeed(config.seed, "synth"));
  dataset::WriteSyntheticCorpus(corpus, dir);
  out << "functions " << corpus.functions.size() << "\nmanifest "
      << (fs::path(dir) / "manifest.csv").string() << '\n';
  return kExitOk;
}

int CmdTrain(const PipelineConfig& config, std::ostream& out,
             std::ostream& /*err*/) {
  const dataset::Dataset ds = LoadNonEmpty(Require(config.dataset, "dataset"));
  const fs::path run = Require(config.run, "run");
  MakeDirs(run.string());

  segnn::ModelShape shape = config.model;
  shape.input_width = FeatureWidth(ds);
  shape.Validate();
  const train::TrainConfig tc = MakeTrainConfig(config);
  tc.Validate();
  const auto [train_set, test_set] = dataset::SplitDataset(ds, MakeSplit(config));

  train::TrainOptions options;
  options.test = &test_set;
  std::error_code ec;
  if (config.resume && fs::exists(tc.checkpoint_path, ec)) {
    options.resume = train::LoadCheckpoint(tc.checkpoint_path);
    out << "resuming after epoch " << options.resume->epoch << '\n';
  }
  options.on_epoch = [&out](const train::EpochRecord& r,
                            const segnn::SegnnParams&) {
    out << "epoch " << r.epoch << " loss " << train::FormatDouble(r.train_loss);
    if (r.test_accuracy) {
      out << " test_acc " << train::FormatDouble(*r.test_accuracy);
    }
    out << '\n';
    return true;
  };
  const train::TrainResult result =
      train::TrainModel(train_set, shape, tc, options);

  const train::Metrics train_metrics = train::EvaluateModel(result.params, train_set);
  const train::Metrics test_metrics = train::EvaluateModel(result.params, test_set);
  nlohmann::ordered_json report;
  report["seed"] = config.seed;
  report["epochs"] = result.epochs_completed;
  report["train_size"] = train_set.size();
  report["test_size"] = test_set.size();
  report["initial_loss"] = result.history.initial_loss;
  report["train"] =
      nlohmann::ordered_json::parse(train::MetricsToJson(train_metrics));
  report["test"] =
      nlohmann::ordered_json::parse(train::MetricsToJson(test_metrics));
  WriteFile((run / "metrics.json").string(), report.dump(2) + "\n");
  WriteFile((run / "loss_curve.csv").string(),
            train::LossCurveCsv(result.history));
  out << "test " << train::MetricsToJson(test_metrics) << '\n';
  return kExitOk;
}

int CmdEval(const PipelineConfig& config, std::ostream& out,
            std::ostream& /*err*/) {
  const dataset::Dataset ds = LoadNonEmpty(Require(config.dataset, "dataset"));
  const std::string path = config.CheckpointPath();
  if (path.empty()) Require(path, "checkpoint");
  const train::Checkpoint ckpt = train::LoadCheckpoint(path);
  CheckInputWidth(FeatureWidth(ds), ckpt.params.shape,
                  "dataset has feature width");

  dataset::Dataset subset = ds;
  if (config.subset != "all") {
    auto [train_set, test_set] = dataset::SplitDataset(ds, MakeSplit(config));
    subset = config.subset == "train" ? std::move(train_set)
                                      : std::move(test_set);
  }
  out << train::MetricsToJson(train::EvaluateModel(ckpt.params, subset))
      << '\n';
  return kExitOk;
}

int CmdPredict(const PipelineConfig& config, std::ostream& out,
               std::ostream& err) {
  const fs::path source = Require(config.source, "source");
  const embed::EmbeddingTable table =
      embed::LoadEmbeddingTable(Require(config.table, "table"));
  const std::string path = config.CheckpointPath();
  if (path.empty()) Require(path, "checkpoint");
  const train::Checkpoint ckpt = train::LoadCheckpoint(path);
  // Node features are a block embedding followed by a function embedding.
  CheckInputWidth(2 * table.dim(), ckpt.params.shape,
                  "embedding table gives feature width");

  int failures = 0;
  const std::vector<ParsedFunction> functions = ParseFile(source, err, failures);
  for (const ParsedFunction& pf : functions) {
    const dataset::AttributedGraph g =
        dataset::MakeGraph(pf.cfg, table, 0, source.string());
    const double p = ad::Sigmoid(segnn::PredictLogit(ckpt.params, g));
    out << pf.source.name << '\t' << (p >= 0.5 ? 1 : 0) << '\t'
        << train::FormatDouble(p) << '\n';
  }
  if (functions.empty() && failures == 0) {
    throw UsageError("no functions found in " + source.string());
  }
  return FailureExit(config, failures, err);
}

}  // namespace vulngraph::cli

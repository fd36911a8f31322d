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
#include "vulngraph/cli/config.h"

#include <charconv>
#include <filesystem>
#include <string>
#include <system_error>

namespace vulngraph::cli {
namespace {

std::string Quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T ParseNumber(std::string_view key, std::string_view value) {
  T out{};
  const char* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw UsageError("bad value " + Quoted(value) + " for " + std::string(key));
  }
  return out;
}

bool ParseBool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") {
    return true;
  }
  if (value == "false" || value == "0" || value == "no" || value == "off") {
    return false;
  }
  throw UsageError("bad value " + Quoted(value) + " for " + std::string(key) +
                   " (expected true or false)");
}

std::vector<int> ParseWidths(std::string_view key, std::string_view value) {
  std::vector<int> out;
  while (true) {
    const auto comma = value.find(',');
    out.push_back(ParseNumber<int>(key, Trim(value.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

const std::vector<ConfigKey>& ConfigKeys() {
  static const std::vector<ConfigKey> keys = {
      {"seed", false, "global seed; every stage derives its own seed from it"},
      {"corpus", false, "directory of .c files"},
      {"dots", false, "directory of DOT files"},
      {"table", false, "embedding table file"},
      {"manifest", false, "manifest.csv mapping DOT files to labels"},
      {"dataset", false, "attributed-graph dataset directory"},
      {"run", false, "training output directory"},
      {"checkpoint", false, "checkpoint file (default <run>/checkpoint.bin)"},
      {"source", false, ".c file to classify"},
      {"embed-dim", false, "embedding width"},
      {"embed-window", false, "skip-gram context window"},
      {"embed-negatives", false, "negative samples per pair"},
      {"embed-epochs", false, "passes over the corpus"},
      {"embed-lr", false, "initial skip-gram learning rate"},
      {"embed-min-count", false, "minimum token frequency"},
      {"state-width", false, "recurrent state width"},
      {"steps", false, "recurrent propagation steps"},
      {"gat-widths", false, "comma-separated attention layer widths"},
      {"dense-width", false, "hidden dense layer width"},
      {"attention-slope", false, "leaky ReLU slope in attention scores"},
      {"min-nodes", false, "drop graphs with fewer nodes"},
      {"balance", true, "downsample the majority class"},
      {"batch-size", false, "graphs per optimizer step"},
      {"epochs", false, "training epochs"},
      {"lr", false, "Adam learning rate"},
      {"train-fraction", false, "share of graphs in the training split"},
      {"resume", true, "continue from an existing checkpoint"},
      {"subset", false, "eval subset: all, train or test"},
      {"synth-per-class", false, "synthetic functions per label"},
      {"keep-going", true, "skip unparseable inputs instead of failing"},
  };
  return keys;
}

void PipelineConfig::Set(std::string_view key, std::string_view value) {
  value = Trim(value);
  if (key == "seed") {
    seed = ParseNumber<std::uint64_t>(key, value);
  } else if (key == "corpus") {
    corpus = value;
  } else if (key == "dots") {
    dots = value;
  } else if (key == "table") {
    table = value;
  } else if (key == "manifest") {
    manifest = value;
  } else if (key == "dataset") {
    dataset = value;
  } else if (key == "run") {
    run = value;
  } else if (key == "checkpoint") {
    checkpoint = value;
  } else if (key == "source") {
    source = value;
  } else if (key == "embed-dim") {
    embed.dim = ParseNumber<int>(key, value);
  } else if (key == "embed-window") {
    embed.window = ParseNumber<int>(key, value);
  } else if (key == "embed-negatives") {
    embed.negatives = ParseNumber<int>(key, value);
  } else if (key == "embed-epochs") {
    embed.epochs = ParseNumber<int>(key, value);
  } else if (key == "embed-lr") {
    embed.learning_rate = ParseNumber<double>(key, value);
  } else if (key == "embed-min-count") {
    embed.min_count = ParseNumber<int>(key, value);
  } else if (key == "state-width") {
    model.state_width = ParseNumber<int>(key, value);
  } else if (key == "steps") {
    model.steps = ParseNumber<int>(key, value);
  } else if (key == "gat-widths") {
    model.gat_widths = ParseWidths(key, value);
  } else if (key == "dense-width") {
    model.dense_width = ParseNumber<int>(key, value);
  } else if (key == "attention-slope") {
    model.attention_slope = ParseNumber<double>(key, value);
  } else if (key == "min-nodes") {
    min_nodes = ParseNumber<int>(key, value);
  } else if (key == "balance") {
    balance = ParseBool(key, value);
  } else if (key == "batch-size") {
    batch_size = ParseNumber<int>(key, value);
  } else if (key == "epochs") {
    epochs = ParseNumber<int>(key, value);
  } else if (key == "lr") {
    lr = ParseNumber<double>(key, value);
  } else if (key == "train-fraction") {
    train_fraction = ParseNumber<double>(key, value);
  } else if (key == "resume") {
    resume = ParseBool(key, value);
  } else if (key == "subset") {
    if (value != "all" && value != "train" && value != "test") {
      throw UsageError("subset must be all, train or test, not " +
                       Quoted(value));
    }
    subset = value;
  } else if (key == "synth-per-class") {
    synth_per_class = ParseNumber<int>(key, value);
  } else if (key == "keep-going") {
    keep_going = ParseBool(key, value);
  } else {
    throw UsageError("unknown setting " + Quoted(key));
  }
}

std::string PipelineConfig::CheckpointPath() const {
  if (!checkpoint.empty()) return checkpoint;
  if (run.empty()) return {};
  return (std::filesystem::path(run) / "checkpoint.bin").string();
}

PipelineConfig ParseConfigText(std::string_view text, PipelineConfig base) {
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError("config line " + std::to_string(line_no) +
                       ": expected key = value");
    }
    try {
      base.Set(Trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const UsageError& e) {
      throw UsageError("config line " + std::to_string(line_no) + ": " +
                       e.what());
    }
  }
  return base;
}

}  // namespace vulngraph::cli

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
// Flat key=value pipeline configuration shared by all subcommands.
//
// A config file holds one "key = value" pair per line; '#' starts a comment.
// Every key is also accepted as a command-line flag of the same name
// (--embed-dim 50), and flags take precedence over the file.

#ifndef VULNGRAPH_CLI_CONFIG_H_
#define VULNGRAPH_CLI_CONFIG_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vulngraph/embed/skipgram.h"
#include "vulngraph/error.h"
#include "vulngraph/segnn/model.h"

namespace vulngraph::cli {

// Bad flags, settings or command-line inputs; maps to exit code 1.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct ConfigKey {
  std::string name;
  bool boolean = false;
  std::string help;
};

struct PipelineConfig {
  std::uint64_t seed = 0;

  std::string corpus;      // directory of .c files
  std::string dots;        // directory of DOT files
  std::string table;       // embedding table file
  std::string manifest;    // manifest.csv for build
  std::string dataset;     // attributed-graph dataset directory
  std::string run;         // training output directory
  std::string checkpoint;  // defaults to <run>/checkpoint.bin
  std::string source;      // .c file for predict

  embed::EmbedConfig embed;
  segnn::ModelShape model;  // input_width comes from the data

  int min_nodes = 11;
  bool balance = false;
  int batch_size = 128;
  int epochs = 30;
  double lr = 0.001;
  double train_fraction = 0.8;
  bool resume = false;
  std::string subset = "test";  // eval: all, train or test
  int synth_per_class = 500;
  bool keep_going = false;

  // Throws UsageError for an unknown key or an unparsable value.
  void Set(std::string_view key, std::string_view value);

  std::string CheckpointPath() const;
};

const std::vector<ConfigKey>& ConfigKeys();

// Applies every line of a config file on top of base. Errors name the line.
PipelineConfig ParseConfigText(std::string_view text,
                               PipelineConfig base = {});

}  // namespace vulngraph::cli

#endif  // VULNGRAPH_CLI_CONFIG_H_

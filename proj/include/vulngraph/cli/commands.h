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
// Pipeline subcommands. Each writes its report to out and diagnostics to err
// and returns the process exit code; errors that abort a command are thrown.
//
// Stage seeds are DeriveSeed(config.seed, stage) with stage one of "synth",
// "embed", "balance", "split" and "train".

#ifndef VULNGRAPH_CLI_COMMANDS_H_
#define VULNGRAPH_CLI_COMMANDS_H_

#include <exception>
#include <ostream>
#include <string>
#include <vector>

#include "vulngraph/cli/config.h"

namespace vulngraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUser = 1;
inline constexpr int kExitInternal = 2;

// corpus -> dots: one DOT per function plus index.csv.
int CmdExtract(const PipelineConfig& config, std::ostream& out,
               std::ostream& err);
// corpus -> table (plus table.meta.json).
int CmdEmbed(const PipelineConfig& config, std::ostream& out,
             std::ostream& err);
// dots + table + manifest -> dataset, after the node-count filter and an
// optional class balance.
int CmdBuild(const PipelineConfig& config, std::ostream& out,
             std::ostream& err);
// -> corpus: synthetic .c files plus manifest.csv.
int CmdSynth(const PipelineConfig& config, std::ostream& out,
             std::ostream& err);
// dataset -> run: checkpoint.bin, metrics.json, loss_curve.csv.
int CmdTrain(const PipelineConfig& config, std::ostream& out,
             std::ostream& err);
// dataset + checkpoint -> metrics JSON on out. The train/test subsets are the
// split that train uses for the same seed and train fraction.
int CmdEval(const PipelineConfig& config, std::ostream& out,
            std::ostream& err);
// source + table + checkpoint -> "function<TAB>label<TAB>probability" lines.
int CmdPredict(const PipelineConfig& config, std::ostream& out,
               std::ostream& err);

int ExitCodeFor(const std::exception& e);

// Full command line, args[0] being the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace vulngraph::cli

#endif  // VULNGRAPH_CLI_COMMANDS_H_

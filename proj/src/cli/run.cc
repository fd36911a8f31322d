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
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vulngraph/cli/commands.h"
#include "vulngraph/io.h"

namespace vulngraph::cli {
namespace {

using Command = int (*)(const PipelineConfig&, std::ostream&, std::ostream&);

struct Subcommand {
  const char* name;
  const char* help;
  Command run;
};

constexpr Subcommand kSubcommands[] = {
    {"extract", "parse .c files into one DOT control-flow graph per function",
     CmdExtract},
    {"embed", "train token embeddings on a source corpus", CmdEmbed},
    {"build", "turn DOT files and a manifest into an attributed-graph dataset",
     CmdBuild},
    {"synth", "generate a labeled synthetic corpus", CmdSynth},
    {"train", "train the classifier on a dataset", CmdTrain},
    {"eval", "print metrics of a checkpoint on a dataset", CmdEval},
    {"predict", "classify every function in a .c file", CmdPredict},
};

}  // namespace

int ExitCodeFor(const std::exception& e) {
  if (dynamic_cast<const ShapeError*>(&e) ||
      dynamic_cast<const NumericError*>(&e)) {
    return kExitInternal;
  }
  if (dynamic_cast<const Error*>(&e) ||
      dynamic_cast<const std::invalid_argument*>(&e)) {
    return kExitUser;
  }
  return kExitInternal;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Graph-based vulnerability detection for C functions",
               "vulngraph"};
  app.require_subcommand(1);

  std::string config_file;
  // Flag values as given; applied after the config file.
  std::map<std::string, std::string> values;
  std::map<std::string, bool> switches;
  std::map<std::string, CLI::Option*> options;
  std::map<std::string, Command> commands;
  for (const Subcommand& s : kSubcommands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    commands[s.name] = s.run;
    sub->add_option("--config", config_file, "key = value settings file");
    for (const ConfigKey& key : ConfigKeys()) {
      const std::string flag = "--" + key.name;
      CLI::Option* opt =
          key.boolean ? sub->add_flag(flag, switches[key.name], key.help)
                      : sub->add_option(flag, values[key.name], key.help);
      options[std::string(s.name) + ":" + key.name] = opt;
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUser;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  try {
    PipelineConfig config;
    if (!config_file.empty()) {
      config = ParseConfigText(ReadFile(config_file));
    }
    for (const ConfigKey& key : ConfigKeys()) {
      if (options.at(name + ":" + key.name)->count() == 0) continue;
      config.Set(key.name,
                 key.boolean ? (switches[key.name] ? "true" : "false")
                             : values[key.name]);
    }
    return commands.at(name)(config, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return ExitCodeFor(e);
  }
}

}  // namespace vulngraph::cli

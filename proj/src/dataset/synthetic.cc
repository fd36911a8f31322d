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

#include "vulngraph/dataset/synthetic.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <string_view>

#include "vulngraph/dataset/dataset.h"
#include "vulngraph/error.h"
#include "vulngraph/frontend/cfg.h"
#include "vulngraph/frontend/parser.h"
#include "vulngraph/io.h"
#include "vulngraph/rng.h"

namespace vulngraph::dataset {
namespace {

namespace fs = std::filesystem;

template <std::size_t N>
std::string Pick(Rng& rng, const std::array<std::string_view, N>& pool) {
  return std::string(pool[rng.UniformIndex(N)]);
}

int Between(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng.UniformIndex(
                  static_cast<std::uint64_t>(hi - lo + 1)));
}

struct Names {
  std::string dst, src, size, i, idx, len, p, acc, j;
};

Names DrawNames(Rng& rng) {
  constexpr std::array<std::string_view, 6> kDst = {"dst",  "out",  "buf",
                                                    "dest", "target", "obuf"};
  constexpr std::array<std::string_view, 6> kSrc = {"src",  "in",  "input",
                                                    "data", "raw", "str"};
  constexpr std::array<std::string_view, 6> kSize = {"size", "len_max", "cap",
                                                     "max_len", "limit",
                                                     "capacity"};
  constexpr std::array<std::string_view, 4> kI = {"i", "k", "pos", "n"};
  constexpr std::array<std::string_view, 4> kIdx = {"idx", "slot", "off",
                                                    "index"};
  constexpr std::array<std::string_view, 4> kLen = {"len", "count", "width",
                                                    "total"};
  constexpr std::array<std::string_view, 4> kP = {"p", "ptr", "entry", "node"};
  constexpr std::array<std::string_view, 4> kAcc = {"acc", "sum", "state",
                                                    "flags"};
  constexpr std::array<std::string_view, 3> kJ = {"j", "m", "step"};
  return {Pick(rng, kDst), Pick(rng, kSrc), Pick(rng, kSize), Pick(rng, kI),
          Pick(rng, kIdx), Pick(rng, kLen), Pick(rng, kP),    Pick(rng, kAcc),
          Pick(rng, kJ)};
}

std::string Num(int v) { return std::to_string(v); }

// Filler statements. None of them uses the tokens that distinguish the
// guarded forms (NULL, >=, ||, log_error).
std::string Filler(Rng& rng, const Names& nm) {
  const std::string& a = nm.acc;
  const std::string& j = nm.j;
  constexpr std::array<std::string_view, 4> kCalls = {
      "update_stats", "trace", "record_event", "touch"};
  switch (rng.UniformIndex(6)) {
    case 0:
      return "  " + a + " = " + a + " + " + Num(Between(rng, 1, 9)) + ";\n";
    case 1:
      return "  " + Pick(rng, kCalls) + "(" + a + ", " +
             Num(Between(rng, 0, 99)) + ");\n";
    case 2:
      return "  if (" + a + " > " + Num(Between(rng, 2, 50)) + ") {\n    " +
             a + " = " + a + " - " + Num(Between(rng, 1, 5)) + ";\n  }\n";
    case 3:
      return "  if (" + a + " > " + Num(Between(rng, 2, 50)) + ") {\n    " +
             a + " = 0;\n  } else {\n    " + Pick(rng, kCalls) + "(" + a +
             ", " + Num(Between(rng, 0, 9)) + ");\n  }\n";
    case 4:
      return "  for (" + j + " = 0; " + j + " < " + Num(Between(rng, 2, 8)) +
             "; " + j + " = " + j + " + 1) {\n    " + a + " = " + a + " + " +
             j + ";\n  }\n";
    default:
      return "  while (" + a + " > " + Num(Between(rng, 10, 90)) +
             ") {\n    " + a + " = " + a + " / 2;\n  }\n";
  }
}

std::string CopyPattern(Rng& rng, const Names& nm, bool vulnerable) {
  std::string out = "  " + nm.len + " = strlen(" + nm.src + ");\n";
  if (!vulnerable) {
    out += "  if (" + nm.len + " >= " + nm.size + ") {\n    log_error(" +
           nm.len + ");\n    return -1;\n  }\n";
  }
  if (rng.UniformIndex(2) == 0) {
    return out + "  strcpy(" + nm.dst + ", " + nm.src + ");\n";
  }
  return out + "  " + nm.i + " = 0;\n  while (" + nm.src + "[" + nm.i +
         "] != 0) {\n    " + nm.dst + "[" + nm.i + "] = " + nm.src + "[" +
         nm.i + "];\n    " + nm.i + " = " + nm.i + " + 1;\n  }\n  " + nm.dst +
         "[" + nm.i + "] = 0;\n";
}

std::string IndexPattern(Rng& rng, const Names& nm, bool vulnerable) {
  constexpr std::array<std::string_view, 3> kParse = {"parse_index", "atoi",
                                                      "read_offset"};
  std::string out = "  " + nm.idx + " = " + Pick(rng, kParse) + "(" + nm.src +
                    ");\n";
  if (!vulnerable) {
    out += "  if (" + nm.idx + " < 0 || " + nm.idx + " >= " + nm.size +
           ") {\n    log_error(" + nm.idx + ");\n    return -1;\n  }\n";
  }
  out += "  " + nm.dst + "[" + nm.idx + "] = " + nm.acc + ";\n";
  return out;
}

std::string NullPattern(Rng& rng, const Names& nm, bool vulnerable) {
  constexpr std::array<std::string_view, 3> kLookup = {"lookup", "find_entry",
                                                       "getenv"};
  std::string out =
      "  " + nm.p + " = " + Pick(rng, kLookup) + "(" + nm.src + ");\n";
  if (!vulnerable) {
    out += "  if (" + nm.p + " == NULL) {\n    return -1;\n  }\n";
  }
  out += "  " + nm.len + " = strlen(" + nm.p + ");\n";
  return out;
}

std::size_t BlockCount(const std::string& source) {
  return frontend::BuildCfg(frontend::ParseFunction(source)).blocks.size();
}

SyntheticFunction MakeFunction(Rng& rng, int ordinal, bool vulnerable) {
  constexpr std::array<std::string_view, 8> kVerb = {
      "copy", "handle", "process", "parse", "read", "load", "store", "fill"};
  constexpr std::array<std::string_view, 8> kNoun = {
      "name", "packet", "field", "entry", "record", "buffer", "header", "token"};
  constexpr std::array<std::string_view, 3> kPatterns = {"copy", "index",
                                                         "null"};
  SyntheticFunction fn;
  char stem[32];
  std::snprintf(stem, sizeof stem, "synth_%05d", ordinal);
  fn.file_stem = stem;
  fn.function_name = Pick(rng, kVerb) + "_" + Pick(rng, kNoun) + "_" +
                     Num(ordinal);
  fn.label = vulnerable ? 1 : 0;
  fn.pattern = Pick(rng, kPatterns);
  const Names nm = DrawNames(rng);

  std::string pattern;
  if (fn.pattern == "copy") {
    pattern = CopyPattern(rng, nm, vulnerable);
  } else if (fn.pattern == "index") {
    pattern = IndexPattern(rng, nm, vulnerable);
  } else {
    pattern = NullPattern(rng, nm, vulnerable);
  }

  const std::string head = "int " + fn.function_name + "(char *" + nm.dst +
                           ", char *" + nm.src + ", int " + nm.size +
                           ") {\n  int " + nm.i + " = 0;\n  int " + nm.idx +
                           ";\n  int " + nm.len + " = 0;\n  int " + nm.j +
                           ";\n  int " + nm.acc + " = " +
                           Num(Between(rng, 0, 20)) + ";\n  char *" + nm.p +
                           ";\n";
  std::string before, after;
  const int fillers = Between(rng, 1, 4);
  for (int k = 0; k < fillers; ++k) {
    (rng.UniformIndex(2) == 0 ? before : after) += Filler(rng, nm);
  }
  const std::string tail = "  return " + nm.acc + " + " + nm.len + ";\n}\n";
  auto assemble = [&] { return head + before + pattern + after + tail; };
  fn.source = assemble();
  while (BlockCount(fn.source) < static_cast<std::size_t>(kDefaultMinNodes)) {
    after += Filler(rng, nm);
    fn.source = assemble();
  }
  return fn;
}

}  // namespace

std::string SyntheticFunction::DotName() const {
  return file_stem + "__" + function_name + ".dot";
}

SyntheticCorpus GenerateSyntheticCorpus(int n_per_class, std::uint64_t seed) {
  if (n_per_class < 1) {
    throw std::invalid_argument("n_per_class must be at least 1");
  }
  Rng rng(seed);
  SyntheticCorpus corpus;
  for (int k = 0; k < 2 * n_per_class; ++k) {
    // Alternating labels keep both classes spread over the whole corpus.
    SyntheticFunction fn = MakeFunction(rng, k, k % 2 == 0);
    corpus.manifest.rows.push_back(
        {fn.DotName(), fn.label,
         "synthetic:" + fn.pattern + (fn.label ? ":vulnerable" : ":guarded")});
    corpus.functions.push_back(std::move(fn));
  }
  return corpus;
}

void WriteSyntheticCorpus(const SyntheticCorpus& corpus,
                          const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir + ": " + ec.message());
  for (const SyntheticFunction& fn : corpus.functions) {
    WriteFile((fs::path(dir) / (fn.file_stem + ".c")).string(), fn.source);
  }
  SaveManifest(corpus.manifest, (fs::path(dir) / "manifest.csv").string());
}

}  // namespace vulngraph::dataset

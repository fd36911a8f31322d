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
//
// Seeded generator of labeled C functions for end-to-end experiments.
//
// Each function carries one of three planted patterns in either a
// vulnerable form (label 1) or a guarded form (label 0):
//   copy       unchecked copy of strlen(src)  vs  length check with early return
//   index      unchecked index write          vs  range check first
//   null       strlen on an unchecked lookup  vs  NULL check first
// Identifiers, constants and surrounding filler statements vary per seed.
// Every function yields a CFG of at least kDefaultMinNodes blocks.

#ifndef VULNGRAPH_DATASET_SYNTHETIC_H_
#define VULNGRAPH_DATASET_SYNTHETIC_H_

#include <cstdint>
#include <string>
#include <vector>

#include "vulngraph/dataset/manifest.h"

namespace vulngraph::dataset {

struct SyntheticFunction {
  std::string file_stem;  // source file name without ".c"
  std::string function_name;
  std::string source;
  int label = 0;
  std::string pattern;  // copy, index or null

  // File name used for its extracted CFG: "<stem>__<function>.dot".
  std::string DotName() const;
};

struct SyntheticCorpus {
  std::vector<SyntheticFunction> functions;
  Manifest manifest;  // one row per function, paths = DotName()
};

// Throws std::invalid_argument if n_per_class < 1.
SyntheticCorpus GenerateSyntheticCorpus(int n_per_class, std::uint64_t seed);

// Writes one .c file per function and manifest.csv into dir.
void WriteSyntheticCorpus(const SyntheticCorpus& corpus,
                          const std::string& dir);

}  // namespace vulngraph::dataset

#endif  // VULNGRAPH_DATASET_SYNTHETIC_H_

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
// Label manifests: CSV with header `path,label,origin`. Fields may be
// double-quoted (RFC 4180 style, "" for a literal quote).

#ifndef VULNGRAPH_DATASET_MANIFEST_H_
#define VULNGRAPH_DATASET_MANIFEST_H_

#include <string>
#include <string_view>
#include <vector>

namespace vulngraph::dataset {

struct ManifestRow {
  std::string path;
  int label = 0;
  std::string origin;
};

struct Manifest {
  std::vector<ManifestRow> rows;
};

// Throws FormatError naming the line for a bad header, field count or label.
Manifest ParseManifest(std::string_view csv);
std::string ManifestToCsv(const Manifest& manifest);

Manifest LoadManifest(const std::string& path);
void SaveManifest(const Manifest& manifest, const std::string& path);

}  // namespace vulngraph::dataset

#endif  // VULNGRAPH_DATASET_MANIFEST_H_

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

#include "vulngraph/dataset/manifest.h"

#include "vulngraph/error.h"
#include "vulngraph/io.h"

namespace vulngraph::dataset {
namespace {

// Splits one record. Quoted fields may not span lines.
std::vector<std::string> SplitRecord(std::string_view line, int line_no) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"' && fields.back().empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) {
    throw FormatError("manifest line " + std::to_string(line_no) +
                      ": unterminated quoted field");
  }
  return fields;
}

std::string Quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '\n') {
      throw FormatError("manifest field contains a newline: " + field);
    }
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Manifest ParseManifest(std::string_view csv) {
  Manifest manifest;
  int line_no = 0;
  bool header_seen = false;
  while (!csv.empty()) {
    const std::size_t eol = csv.find('\n');
    std::string_view line = csv.substr(0, eol);
    csv = eol == std::string_view::npos ? std::string_view()
                                        : csv.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    auto fields = SplitRecord(line, line_no);
    if (!header_seen) {
      if (fields != std::vector<std::string>{"path", "label", "origin"}) {
        throw FormatError("manifest line " + std::to_string(line_no) +
                          ": expected header path,label,origin");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 3) {
      throw FormatError("manifest line " + std::to_string(line_no) +
                        ": expected 3 fields, found " +
                        std::to_string(fields.size()));
    }
    if (fields[1] != "0" && fields[1] != "1") {
      throw FormatError("manifest line " + std::to_string(line_no) +
                        ": label '" + fields[1] + "' is not 0 or 1");
    }
    if (fields[0].empty()) {
      throw FormatError("manifest line " + std::to_string(line_no) +
                        ": empty path");
    }
    manifest.rows.push_back({fields[0], fields[1] == "1" ? 1 : 0, fields[2]});
  }
  if (!header_seen) throw FormatError("manifest is empty");
  return manifest;
}

std::string ManifestToCsv(const Manifest& manifest) {
  std::string out = "path,label,origin\n";
  for (const ManifestRow& row : manifest.rows) {
    out += Quote(row.path) + "," + std::to_string(row.label) + "," +
           Quote(row.origin) + "\n";
  }
  return out;
}

Manifest LoadManifest(const std::string& path) {
  try {
    return ParseManifest(ReadFile(path));
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void SaveManifest(const Manifest& manifest, const std::string& path) {
  WriteFile(path, ManifestToCsv(manifest));
}

}  // namespace vulngraph::dataset

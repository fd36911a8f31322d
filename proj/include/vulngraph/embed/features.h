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

#ifndef VULNGRAPH_EMBED_FEATURES_H_
#define VULNGRAPH_EMBED_FEATURES_H_

#include "vulngraph/embed/skipgram.h"
#include "vulngraph/frontend/cfg.h"
#include "vulngraph/matrix.h"

namespace vulngraph::embed {

// Initial node encoding, one row per block:
//   [ mean embedding of the block's tokens | mean embedding of the function ]
// so the width is 2 * table.dim(). The function half comes from cfg.source,
// or from the concatenated block code when the source is unknown.
Matrix BuildNodeFeatures(const frontend::Cfg& cfg, const EmbeddingTable& table);

}  // namespace vulngraph::embed

#endif  // VULNGRAPH_EMBED_FEATURES_H_

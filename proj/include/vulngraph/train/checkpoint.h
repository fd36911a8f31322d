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
// Binary checkpoint layout (little-endian):
//   8 bytes  magic "VGCKPT01"
//   u32      format version
//   u64      length of the JSON header, then the header (shape, epoch,
//            digest, history, Adam step, tensor names and shapes)
//   f64[]    parameters, first moments, second moments, in tensor order
//   u64      FNV-1a checksum of every preceding byte

#ifndef VULNGRAPH_TRAIN_CHECKPOINT_H_
#define VULNGRAPH_TRAIN_CHECKPOINT_H_

#include <string>

#include "vulngraph/train/trainer.h"

namespace vulngraph::train {

inline constexpr std::uint32_t kCheckpointVersion = 1;

std::string SerializeCheckpoint(const Checkpoint& ckpt);
// Throws FormatError for truncated or corrupted bytes and CheckpointError for
// an unsupported version.
Checkpoint DeserializeCheckpoint(const std::string& bytes);

void SaveCheckpoint(const Checkpoint& ckpt, const std::string& path);
Checkpoint LoadCheckpoint(const std::string& path);

}  // namespace vulngraph::train

#endif  // VULNGRAPH_TRAIN_CHECKPOINT_H_

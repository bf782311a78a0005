// Copyright 2026 The etype Authors.
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

#ifndef ETYPE_CHECKPOINT_H_
#define ETYPE_CHECKPOINT_H_

#include <iosfwd>

#include "etype/formats.h"
#include "etype/latent_model.h"
#include "etype/trainer.h"

namespace etype {

// Binary model checkpoint:
//
//   "ETYPECKP" | u32 version | u64 n | n bytes of JSON metadata | tensors
//
// The metadata records the tool version, config hash, seed, training config,
// kappa and the name and shape of every tensor; the tensors follow as raw
// little-endian doubles in the listed order (column-major for matrices).
inline constexpr uint32_t kCheckpointVersion = 1;

struct Checkpoint {
  LatentModel model;
  TrainConfig config;
  OutputMeta meta;
};

void SaveCheckpoint(std::ostream& out, const LatentModel& model,
                    const TrainConfig& config, const OutputMeta& meta);

// Throws InputError on a bad magic, unsupported version or truncated data.
Checkpoint LoadCheckpoint(std::istream& in);

}  // namespace etype

#endif  // ETYPE_CHECKPOINT_H_

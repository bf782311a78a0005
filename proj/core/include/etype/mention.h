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

#ifndef ETYPE_MENTION_H_
#define ETYPE_MENTION_H_

#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "etype/ranked_list.h"

namespace etype {

enum class MentionKind { kPredicate, kObjectHead, kSenseExample };

std::string_view MentionKindName(MentionKind kind);
std::optional<MentionKind> ParseMentionKind(std::string_view name);

// Contextual features of one token occurrence: its contextualized embedding
// and the ranked list of words a masked language model predicts in its place.
struct MentionFeature {
  std::string mention_id;
  std::string sentence_id;
  int token_index = 0;
  std::string term;
  MentionKind kind = MentionKind::kPredicate;
  Eigen::VectorXd embedding;
  RankedList mwp;
};

// Throws InputError unless the embedding is finite with `dim` components and
// the prediction list has exactly `list_length` distinct entries.
void ValidateMention(const MentionFeature& m, Eigen::Index dim,
                     size_t list_length);

}  // namespace etype

#endif  // ETYPE_MENTION_H_

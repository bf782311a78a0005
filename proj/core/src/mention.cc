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

#include "etype/mention.h"

#include <set>

#include "etype/errors.h"

namespace etype {

std::string_view MentionKindName(MentionKind kind) {
  switch (kind) {
    case MentionKind::kPredicate:
      return "predicate";
    case MentionKind::kObjectHead:
      return "object_head";
    case MentionKind::kSenseExample:
      return "sense_example";
  }
  return "predicate";
}

std::optional<MentionKind> ParseMentionKind(std::string_view name) {
  if (name == "predicate") return MentionKind::kPredicate;
  if (name == "object_head") return MentionKind::kObjectHead;
  if (name == "sense_example") return MentionKind::kSenseExample;
  return std::nullopt;
}

void ValidateMention(const MentionFeature& m, Eigen::Index dim,
                     size_t list_length) {
  if (m.embedding.size() != dim) {
    throw InputError("mention " + m.mention_id + ": embedding has " +
                     std::to_string(m.embedding.size()) + " components, " +
                     "expected " + std::to_string(dim));
  }
  if (!m.embedding.allFinite()) {
    throw InputError("mention " + m.mention_id + ": non-finite embedding");
  }
  if (m.mwp.size() != list_length) {
    throw InputError("mention " + m.mention_id + ": prediction list has " +
                     std::to_string(m.mwp.size()) + " entries, expected " +
                     std::to_string(list_length));
  }
  std::set<std::string> distinct(m.mwp.begin(), m.mwp.end());
  if (distinct.size() != m.mwp.size()) {
    throw InputError("mention " + m.mention_id +
                     ": prediction list has repeated entries");
  }
}

}  // namespace etype

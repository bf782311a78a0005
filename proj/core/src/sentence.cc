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

#include "etype/sentence.h"

#include <string>

#include "etype/errors.h"

namespace etype {

std::vector<int> ParsedSentence::Children(int i) const {
  std::vector<int> out;
  for (const Token& t : tokens) {
    if (t.head == i && t.index != i) out.push_back(t.index);
  }
  return out;
}

void ValidateSentence(const ParsedSentence& s) {
  const int n = s.size();
  for (int i = 0; i < n; ++i) {
    const Token& t = s.tokens[i];
    if (t.index != i) {
      throw InputError("sentence " + s.sentence_id + ": token at position " +
                       std::to_string(i) + " has index " +
                       std::to_string(t.index));
    }
    if (t.head != kRootHead && (t.head < 0 || t.head >= n)) {
      throw InputError("sentence " + s.sentence_id + ": token " +
                       std::to_string(i) + " has invalid head " +
                       std::to_string(t.head));
    }
  }
}

}  // namespace etype

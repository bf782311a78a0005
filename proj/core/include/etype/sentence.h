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

#ifndef ETYPE_SENTENCE_H_
#define ETYPE_SENTENCE_H_

#include <string>
#include <vector>

namespace etype {

// Head index used by the root token of a dependency tree.
inline constexpr int kRootHead = -1;

struct Token {
  int index = 0;
  std::string text;
  std::string lemma;
  std::string pos;        // coarse universal POS tag, e.g. VERB, NOUN, AUX
  std::string dep_label;  // dependency label, e.g. nsubj, dobj, auxpass
  int head = kRootHead;   // index of the syntactic head, or kRootHead

  bool is_root() const { return head == kRootHead; }
};

struct ParsedSentence {
  std::string sentence_id;
  std::string text;
  std::vector<Token> tokens;

  int size() const { return static_cast<int>(tokens.size()); }
  const Token& token(int i) const { return tokens.at(i); }

  // Indices of the direct dependents of token `i`, in sentence order.
  std::vector<int> Children(int i) const;
};

// Checks that token indices are 0-based and contiguous and that every head is
// either a valid token index or kRootHead. Throws InputError describing the
// first violation.
void ValidateSentence(const ParsedSentence& s);

}  // namespace etype

#endif  // ETYPE_SENTENCE_H_

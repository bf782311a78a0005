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

#ifndef ETYPE_EXTRACTION_H_
#define ETYPE_EXTRACTION_H_

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "etype/sentence.h"

namespace etype {

enum class Voice { kActive, kPassive };

const char* VoiceName(Voice v);

// One <predicate, object head> occurrence found in a sentence.
struct POOccurrence {
  std::string sentence_id;
  int predicate_index = 0;
  std::string predicate_lemma;
  Voice voice = Voice::kActive;
  int object_head_index = 0;
  std::string object_head_lemma;

  bool operator==(const POOccurrence&) const = default;
};

// Counts keyed by (predicate lemma, object head lemma).
using PairKey = std::pair<std::string, std::string>;
using PairFrequencyTable = std::map<PairKey, long>;

// Label inventories and the partitive-head list. The defaults follow the
// Universal-Dependencies-style labels produced by common English parsers.
struct ExtractionRules {
  std::set<std::string> auxiliary_labels = {"aux", "auxpass"};
  std::string passive_marker = "auxpass";
  // Plain nsubj/csubj are included so that parses without the *pass variant
  // still yield a head for passive predicates.
  std::set<std::string> subject_labels = {"nsubj", "nsubjpass", "csubj",
                                          "csubjpass", "agent", "expl"};
  std::set<std::string> object_labels = {"dobj", "dative", "attr", "oprd"};
  // Quantifier heads that are replaced by the object of their "of" phrase:
  // "hundreds of people" -> "people".
  std::set<std::string> partitive_lemmas = {
      "hundred", "thousand", "million", "dozen",   "number", "group",
      "lot",     "couple",   "majority", "percent", "part",   "series"};
  std::set<std::string> nominal_pos = {"NOUN", "PROPN", "PRON", "NUM"};
};

const ExtractionRules& DefaultRules();

// Non-auxiliary verb tokens, in sentence order.
std::vector<int> FindCandidatePredicates(
    const ParsedSentence& s, const ExtractionRules& rules = DefaultRules());

// PASSIVE iff some dependent of `predicate` carries the passive marker.
// Throws DomainError if `predicate` is not a candidate predicate.
Voice DetectVoice(const ParsedSentence& s, int predicate,
                  const ExtractionRules& rules = DefaultRules());

// Object heads of `predicate`, after the partitive rewrite, in sentence
// order of the originally selected dependents.
std::vector<int> ExtractObjectHeads(
    const ParsedSentence& s, int predicate, Voice voice,
    const ExtractionRules& rules = DefaultRules());

// Resolves "hundreds of people" style quantifier phrases to the nominal
// object of the "of" phrase. Returns `token` unchanged when the rule does not
// apply.
int ResolvePartitiveHead(const ParsedSentence& s, int token,
                         const ExtractionRules& rules = DefaultRules());

// All occurrences of a sentence ordered by (predicate index, head index).
// Predicates without an object head produce nothing.
std::vector<POOccurrence> ExtractPOOccurrences(
    const ParsedSentence& s, const ExtractionRules& rules = DefaultRules());

PairFrequencyTable AggregatePairs(const std::vector<POOccurrence>& occs);

// Associative merge used when sentences are processed in shards.
void MergeInto(PairFrequencyTable& into, const PairFrequencyTable& from);

std::string LowerCase(std::string s);

}  // namespace etype

#endif  // ETYPE_EXTRACTION_H_

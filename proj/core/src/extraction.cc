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

#include "etype/extraction.h"

#include <algorithm>
#include <cctype>

#include "etype/errors.h"

namespace etype {

const char* VoiceName(Voice v) {
  return v == Voice::kPassive ? "passive" : "active";
}

const ExtractionRules& DefaultRules() {
  static const ExtractionRules rules;
  return rules;
}

std::string LowerCase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

namespace {

bool IsCandidate(const Token& t, const ExtractionRules& rules) {
  return t.pos == "VERB" && !rules.auxiliary_labels.contains(t.dep_label);
}

}  // namespace

std::vector<int> FindCandidatePredicates(const ParsedSentence& s,
                                         const ExtractionRules& rules) {
  std::vector<int> out;
  for (const Token& t : s.tokens) {
    if (IsCandidate(t, rules)) out.push_back(t.index);
  }
  return out;
}

Voice DetectVoice(const ParsedSentence& s, int predicate,
                  const ExtractionRules& rules) {
  if (predicate < 0 || predicate >= s.size() ||
      !IsCandidate(s.tokens[predicate], rules)) {
    throw DomainError("token " + std::to_string(predicate) +
                      " is not a candidate predicate");
  }
  for (int child : s.Children(predicate)) {
    if (s.tokens[child].dep_label == rules.passive_marker) {
      return Voice::kPassive;
    }
  }
  return Voice::kActive;
}

int ResolvePartitiveHead(const ParsedSentence& s, int token,
                         const ExtractionRules& rules) {
  // Chains such as "a group of hundreds of people" are followed to the end;
  // the step bound guards against malformed cyclic parses.
  for (int step = 0; step < s.size(); ++step) {
    const Token& t = s.tokens[token];
    const bool quantifier = t.pos == "NUM" ||
                            rules.partitive_lemmas.contains(LowerCase(t.lemma));
    if (!quantifier) return token;
    int next = -1;
    for (int prep : s.Children(token)) {
      const Token& p = s.tokens[prep];
      if (p.dep_label != "prep" || LowerCase(p.lemma) != "of") continue;
      for (int obj : s.Children(prep)) {
        const Token& o = s.tokens[obj];
        if (o.dep_label == "pobj" && rules.nominal_pos.contains(o.pos)) {
          next = obj;
          break;
        }
      }
      if (next >= 0) break;
    }
    if (next < 0) return token;
    token = next;
  }
  return token;
}

std::vector<int> ExtractObjectHeads(const ParsedSentence& s, int predicate,
                                    Voice voice,
                                    const ExtractionRules& rules) {
  std::vector<int> heads;
  for (int child : s.Children(predicate)) {
    const Token& t = s.tokens[child];
    const bool selected =
        voice == Voice::kPassive
            ? child < predicate && rules.subject_labels.contains(t.dep_label)
            : child > predicate && rules.object_labels.contains(t.dep_label);
    if (selected) heads.push_back(ResolvePartitiveHead(s, child, rules));
  }
  return heads;
}

std::vector<POOccurrence> ExtractPOOccurrences(const ParsedSentence& s,
                                               const ExtractionRules& rules) {
  std::vector<POOccurrence> out;
  for (int p : FindCandidatePredicates(s, rules)) {
    const Voice voice = DetectVoice(s, p, rules);
    std::vector<int> heads = ExtractObjectHeads(s, p, voice, rules);
    std::sort(heads.begin(), heads.end());
    heads.erase(std::unique(heads.begin(), heads.end()), heads.end());
    for (int h : heads) {
      // A partitive rewrite may leave the predicate's side; keep the
      // directional contract on the final head.
      if (voice == Voice::kPassive ? h > p : h < p) continue;
      POOccurrence occ;
      occ.sentence_id = s.sentence_id;
      occ.predicate_index = p;
      occ.predicate_lemma = LowerCase(s.tokens[p].lemma);
      occ.voice = voice;
      occ.object_head_index = h;
      occ.object_head_lemma = LowerCase(s.tokens[h].lemma);
      out.push_back(std::move(occ));
    }
  }
  return out;
}

PairFrequencyTable AggregatePairs(const std::vector<POOccurrence>& occs) {
  PairFrequencyTable table;
  for (const POOccurrence& o : occs) {
    ++table[{o.predicate_lemma, o.object_head_lemma}];
  }
  return table;
}

void MergeInto(PairFrequencyTable& into, const PairFrequencyTable& from) {
  for (const auto& [key, count] : from) into[key] += count;
}

}  // namespace etype

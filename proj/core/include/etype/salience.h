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

#ifndef ETYPE_SALIENCE_H_
#define ETYPE_SALIENCE_H_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "etype/extraction.h"

namespace etype {

// Sentence frequencies of words in a large general-domain corpus.
struct BackgroundStats {
  long n_sentences = 0;
  std::map<std::string, long> sentence_freq;
};

struct SalienceEntry {
  std::string word;
  long freq = 0;
  double score = 0.0;
};

// Entries sorted by score descending, ties by word.
using SalienceTable = std::vector<SalienceEntry>;

// (1 + ln(freq)^2) * ln(n_bs / bsf). Throws DomainError unless
// freq >= 1 and 1 <= bsf <= n_bs.
double ComputeSalience(long freq, long bsf, long n_bs);

// Words missing from the background are treated as having bsf = 1.
SalienceTable BuildSalienceTable(const std::map<std::string, long>& counts,
                                 const BackgroundStats& bg);

// The words of the first ceil(keep_fraction * |table|) entries.
std::set<std::string> SelectSalient(const SalienceTable& table,
                                    double keep_fraction);

// Keeps occurrences whose predicate lemma and head lemma are both salient.
std::vector<POOccurrence> FilterOccurrences(
    const std::vector<POOccurrence>& occs,
    const std::set<std::string>& salient_predicates,
    const std::set<std::string>& salient_heads);

// Per-role corpus frequencies derived from a pair table: a predicate lemma's
// frequency is the total count of the pairs it heads, likewise for objects.
std::map<std::string, long> PredicateCounts(const PairFrequencyTable& pairs);
std::map<std::string, long> ObjectHeadCounts(const PairFrequencyTable& pairs);

}  // namespace etype

#endif  // ETYPE_SALIENCE_H_

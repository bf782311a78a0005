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

#include "etype/salience.h"

#include <algorithm>
#include <cmath>

#include "etype/errors.h"

namespace etype {

double ComputeSalience(long freq, long bsf, long n_bs) {
  if (freq < 1 || bsf < 1 || bsf > n_bs) {
    throw DomainError("salience requires freq >= 1 and 1 <= bsf <= n_bs");
  }
  const double lf = std::log(static_cast<double>(freq));
  return (1.0 + lf * lf) *
         std::log(static_cast<double>(n_bs) / static_cast<double>(bsf));
}

SalienceTable BuildSalienceTable(const std::map<std::string, long>& counts,
                                 const BackgroundStats& bg) {
  SalienceTable table;
  table.reserve(counts.size());
  for (const auto& [word, freq] : counts) {
    auto it = bg.sentence_freq.find(word);
    const long bsf = it == bg.sentence_freq.end() ? 1 : it->second;
    table.push_back({word, freq, ComputeSalience(freq, bsf, bg.n_sentences)});
  }
  std::sort(table.begin(), table.end(),
            [](const SalienceEntry& a, const SalienceEntry& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.word < b.word;
            });
  return table;
}

std::set<std::string> SelectSalient(const SalienceTable& table,
                                    double keep_fraction) {
  if (!(keep_fraction > 0.0 && keep_fraction <= 1.0)) {
    throw DomainError("keep_fraction must lie in (0, 1]");
  }
  // The epsilon keeps e.g. 0.8 * 10 from rounding up to 9.
  const double want = keep_fraction * static_cast<double>(table.size());
  const size_t keep =
      std::min(table.size(), static_cast<size_t>(std::ceil(want - 1e-9)));
  std::set<std::string> out;
  for (size_t i = 0; i < keep; ++i) out.insert(table[i].word);
  return out;
}

std::vector<POOccurrence> FilterOccurrences(
    const std::vector<POOccurrence>& occs,
    const std::set<std::string>& salient_predicates,
    const std::set<std::string>& salient_heads) {
  std::vector<POOccurrence> out;
  for (const POOccurrence& o : occs) {
    if (salient_predicates.contains(o.predicate_lemma) &&
        salient_heads.contains(o.object_head_lemma)) {
      out.push_back(o);
    }
  }
  return out;
}

std::map<std::string, long> PredicateCounts(const PairFrequencyTable& pairs) {
  std::map<std::string, long> out;
  for (const auto& [key, count] : pairs) out[key.first] += count;
  return out;
}

std::map<std::string, long> ObjectHeadCounts(const PairFrequencyTable& pairs) {
  std::map<std::string, long> out;
  for (const auto& [key, count] : pairs) out[key.second] += count;
  return out;
}

}  // namespace etype

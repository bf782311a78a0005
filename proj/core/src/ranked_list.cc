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

#include "etype/ranked_list.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_set>

#include "etype/errors.h"

namespace etype {

RankedList AggregateMeanReciprocalRank(std::span<const RankedList> lists,
                                       size_t max_length) {
  if (lists.empty()) throw DomainError("rank aggregation needs >= 1 list");
  std::map<std::string, std::vector<size_t>> ranks;
  for (const RankedList& list : lists) {
    for (size_t r = 0; r < list.size(); ++r) ranks[list[r]].push_back(r + 1);
  }
  // Reciprocal ranks are summed in a canonical order so the result does not
  // depend on the order of the input lists.
  std::vector<std::pair<std::string, double>> ranked;
  ranked.reserve(ranks.size());
  for (auto& [word, rs] : ranks) {
    std::sort(rs.begin(), rs.end());
    double sum = 0.0;
    for (size_t r : rs) sum += 1.0 / static_cast<double>(r);
    ranked.emplace_back(word, sum / static_cast<double>(lists.size()));
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) {
                     return a.second > b.second;
                   });
  RankedList out;
  for (size_t i = 0; i < ranked.size() && i < max_length; ++i) {
    out.push_back(ranked[i].first);
  }
  return out;
}

double RankBiasedOverlap(const RankedList& a, const RankedList& b, double p,
                         int depth) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("rbo: p must lie in (0, 1)");
  if (depth < 1) throw DomainError("rbo: depth must be >= 1");
  if (a.empty() || b.empty()) throw DomainError("rbo: empty ranked list");

  std::unordered_set<std::string> seen_a, seen_b;
  long overlap = 0;
  bool agree = true;
  double sum = 0.0;
  double weight = 1.0;  // p^(d-1)
  for (int d = 1; d <= depth; ++d) {
    const size_t i = static_cast<size_t>(d - 1);
    const bool has_a = i < a.size();
    const bool has_b = i < b.size();
    if (has_a && has_b && a[i] == b[i]) {
      ++overlap;
      seen_a.insert(a[i]);
      seen_b.insert(b[i]);
    } else {
      if (has_a) {
        if (seen_b.contains(a[i])) ++overlap;
        seen_a.insert(a[i]);
      }
      if (has_b) {
        if (seen_a.contains(b[i])) ++overlap;
        seen_b.insert(b[i]);
      }
    }
    agree = agree && overlap == d;
    sum += weight * static_cast<double>(overlap) / d;
    weight *= p;
  }
  if (agree) return 1.0;
  const double value = (1.0 - p) * sum / (1.0 - std::pow(p, depth));
  return std::clamp(value, 0.0, 1.0);
}

}  // namespace etype

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

#ifndef ETYPE_RANKED_LIST_H_
#define ETYPE_RANKED_LIST_H_

#include <span>
#include <string>
#include <vector>

namespace etype {

using RankedList = std::vector<std::string>;

// Fuses ranked lists by mean reciprocal rank. An item's score is the mean over
// lists of 1/rank (1-based, 0 when absent). The result is ordered by score
// descending with lexicographic tie-break and truncated to `max_length`.
RankedList AggregateMeanReciprocalRank(std::span<const RankedList> lists,
                                       size_t max_length);

// Truncated rank-biased overlap normalized so that lists agreeing on their
// first `depth` items score exactly 1:
//
//   (1 - p) * sum_{d=1..depth} p^(d-1) * |a[:d] & b[:d]| / d
//   --------------------------------------------------------
//                        1 - p^depth
//
// Requires 0 < p < 1, depth >= 1 and non-empty lists; throws DomainError
// otherwise.
double RankBiasedOverlap(const RankedList& a, const RankedList& b, double p,
                         int depth);

}  // namespace etype

#endif  // ETYPE_RANKED_LIST_H_

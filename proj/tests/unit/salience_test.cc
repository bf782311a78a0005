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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "etype/errors.h"

namespace etype {
namespace {

TEST(ComputeSalience, HandValues) {
  EXPECT_NEAR(ComputeSalience(1, 10, 1000), std::log(100.0), 1e-12);
  EXPECT_NEAR(ComputeSalience(1, 10, 1000), 4.60517, 1e-5);
  const double l10 = std::log(10.0);
  EXPECT_NEAR(ComputeSalience(10, 1000, 1000000),
              (1 + l10 * l10) * std::log(1000.0), 1e-12);
  EXPECT_NEAR(ComputeSalience(10, 1000, 1000000), 43.53, 5e-3);
}

TEST(ComputeSalience, ZeroWhenWordInEveryBackgroundSentence) {
  for (long f : {1L, 2L, 17L, 100000L}) {
    EXPECT_EQ(ComputeSalience(f, 500, 500), 0.0);
  }
}

TEST(ComputeSalience, RejectsOutOfRange) {
  EXPECT_THROW(ComputeSalience(0, 1, 10), DomainError);
  EXPECT_THROW(ComputeSalience(1, 0, 10), DomainError);
  EXPECT_THROW(ComputeSalience(1, 11, 10), DomainError);
  EXPECT_THROW(ComputeSalience(1, 1, 0), DomainError);
}

TEST(ComputeSalience, MonotoneSweeps) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const long n = 2 + static_cast<long>(rng() % 1000000);
    const long bsf = 1 + static_cast<long>(rng() % (n - 1));  // < n
    const long f = 1 + static_cast<long>(rng() % 100000);
    const long df = 1 + static_cast<long>(rng() % 1000);
    EXPECT_LT(ComputeSalience(f, bsf, n), ComputeSalience(f + df, bsf, n));
    const long bsf2 = bsf + 1 + static_cast<long>(rng() % (n - bsf));
    EXPECT_GT(ComputeSalience(f, bsf, n), ComputeSalience(f, bsf2, n));
    EXPECT_NEAR(ComputeSalience(f, bsf, n), ComputeSalience(f, 2 * bsf, 2 * n),
                1e-9 * std::max(1.0, ComputeSalience(f, bsf, n)));
  }
}

BackgroundStats Background() {
  BackgroundStats bg;
  bg.n_sentences = 1000;
  bg.sentence_freq = {{"say", 900}, {"kill", 20}, {"arrest", 20}};
  return bg;
}

TEST(SalienceTable, SortedWithLexicographicTies) {
  const auto t = BuildSalienceTable(
      {{"say", 50}, {"kill", 5}, {"arrest", 5}, {"quarantine", 1}},
      Background());
  ASSERT_EQ(t.size(), 4u);
  EXPECT_EQ(t[0].word, "arrest");
  EXPECT_EQ(t[1].word, "kill");
  EXPECT_EQ(t[0].score, t[1].score);
  EXPECT_EQ(t[2].word, "quarantine");  // unseen in background: bsf = 1
  EXPECT_DOUBLE_EQ(t[2].score, std::log(1000.0));
  EXPECT_EQ(t[3].word, "say");
  for (size_t i = 1; i < t.size(); ++i) EXPECT_GE(t[i - 1].score, t[i].score);
}

TEST(SalienceTable, SingleWord) {
  const auto t = BuildSalienceTable({{"kill", 3}}, Background());
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].freq, 3);
}

TEST(SalienceTable, MatchesRecomputation) {
  std::mt19937_64 rng(5);
  BackgroundStats bg;
  bg.n_sentences = 50000;
  std::map<std::string, long> counts;
  for (int i = 0; i < 200; ++i) {
    const std::string w = "w" + std::to_string(i);
    counts[w] = 1 + static_cast<long>(rng() % 300);
    if (i % 3) bg.sentence_freq[w] = 1 + static_cast<long>(rng() % 50000);
  }
  const auto t = BuildSalienceTable(counts, bg);
  ASSERT_EQ(t.size(), counts.size());
  for (const auto& e : t) {
    const double f = static_cast<double>(counts.at(e.word));
    const auto it = bg.sentence_freq.find(e.word);
    const double bsf = it == bg.sentence_freq.end() ? 1.0 : it->second;
    const double expect =
        (1 + std::log(f) * std::log(f)) * std::log(50000.0 / bsf);
    EXPECT_NEAR(e.score, expect, 1e-9 * std::max(1.0, expect));
  }
}

SalienceTable TableOf(int n) {
  SalienceTable t;
  for (int i = 0; i < n; ++i) {
    t.push_back({"w" + std::to_string(100 + i), 1, static_cast<double>(n - i)});
  }
  return t;
}

TEST(SelectSalient, CeilArithmetic) {
  EXPECT_EQ(SelectSalient(TableOf(10), 1.0).size(), 10u);
  EXPECT_EQ(SelectSalient(TableOf(10), 0.8).size(), 8u);
  const auto top = SelectSalient(TableOf(5), 0.5);
  EXPECT_EQ(top, (std::set<std::string>{"w100", "w101", "w102"}));
}

TEST(SelectSalient, RejectsBadFraction) {
  EXPECT_THROW(SelectSalient(TableOf(3), 0.0), DomainError);
  EXPECT_THROW(SelectSalient(TableOf(3), 1.5), DomainError);
}

TEST(SelectSalient, NestedInFraction) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(1e-3, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const auto t = TableOf(1 + static_cast<int>(rng() % 60));
    double f1 = u(rng), f2 = u(rng);
    if (f1 > f2) std::swap(f1, f2);
    const auto small = SelectSalient(t, f1), large = SelectSalient(t, f2);
    for (const auto& w : small) EXPECT_TRUE(large.contains(w));
  }
}

TEST(FilterOccurrences, BothRolesMustBeSalient) {
  const std::vector<POOccurrence> occs = {
      {"s1", 1, "kill", Voice::kActive, 2, "people"},
      {"s2", 1, "kill", Voice::kActive, 2, "it"},
      {"s3", 1, "say", Voice::kActive, 2, "people"}};
  const auto kept = FilterOccurrences(occs, {"kill"}, {"people"});
  ASSERT_EQ(kept.size(), 1u);
  EXPECT_EQ(kept[0].sentence_id, "s1");
}

TEST(RoleCounts, SumPairCounts) {
  const PairFrequencyTable pairs = {
      {{"kill", "people"}, 3}, {{"kill", "soldier"}, 2}, {{"arrest", "people"}, 1}};
  EXPECT_EQ(PredicateCounts(pairs),
            (std::map<std::string, long>{{"arrest", 1}, {"kill", 5}}));
  EXPECT_EQ(ObjectHeadCounts(pairs),
            (std::map<std::string, long>{{"people", 4}, {"soldier", 2}}));
}

}  // namespace
}  // namespace etype

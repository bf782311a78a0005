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

#include "etype/featurizer.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "etype/errors.h"
#include "etype/extraction.h"
#include "etype/formats.h"
#include "etype/pca.h"
#include "oracles.h"
#include "test_util.h"

namespace etype {
namespace {

MentionFeature Mention(std::vector<double> emb, RankedList mwp,
                       const std::string& term = "t") {
  MentionFeature m;
  m.term = term;
  m.embedding = Eigen::Map<Eigen::VectorXd>(emb.data(), emb.size());
  m.mwp = std::move(mwp);
  return m;
}

TEST(ContentFeature, Mean) {
  const auto a = Mention({1, 0}, {}), b = Mention({0, 1}, {});
  const MentionFeature* ms[] = {&a, &b};
  const Eigen::VectorXd v = TermContentFeature(ms);
  EXPECT_DOUBLE_EQ(v[0], 0.5);
  EXPECT_DOUBLE_EQ(v[1], 0.5);
  const MentionFeature* one[] = {&a};
  EXPECT_EQ(TermContentFeature(one), a.embedding);
  EXPECT_THROW(TermContentFeature({}), DomainError);
}

TEST(ContentFeature, PermutationInvariant) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  std::vector<MentionFeature> ms;
  for (int i = 0; i < 7; ++i) {
    ms.push_back(Mention({g(rng), g(rng), g(rng)}, {}));
  }
  std::vector<const MentionFeature*> ptrs;
  for (const auto& m : ms) ptrs.push_back(&m);
  const Eigen::VectorXd base = TermContentFeature(ptrs);
  for (int rep = 0; rep < 10; ++rep) {
    std::shuffle(ptrs.begin(), ptrs.end(), rng);
    EXPECT_LT((TermContentFeature(ptrs) - base).norm(), 1e-14);
  }
}

TEST(PseudoDocument, BagUnion) {
  const auto a = Mention({}, {"a", "b"}), b = Mention({}, {"a", "c"});
  const MentionFeature* ms[] = {&a, &b};
  const auto doc = BuildPseudoDocument("t", ms);
  EXPECT_EQ(doc.bag, (std::map<std::string, int>{{"a", 2}, {"b", 1}, {"c", 1}}));
}

TEST(PseudoDocument, FixtureMatchesCounter) {
  std::ifstream in(testing::DataDir() / "pipeline" / "features.jsonl");
  const auto file = ReadMentionFeatures(in, 10);
  std::map<std::string, std::vector<const MentionFeature*>> by_term;
  for (const auto& m : file.mentions) by_term[m.term].push_back(&m);
  for (const auto& [term, ms] : by_term) {
    const auto doc = BuildPseudoDocument(term, ms);
    std::map<std::string, int> expect;
    for (const auto* m : ms) {
      for (const auto& w : std::set<std::string>(m->mwp.begin(), m->mwp.end())) {
        expect[w] += 1;
      }
    }
    EXPECT_EQ(doc.bag, expect) << term;
  }
}

TEST(Tfidf, Weights) {
  std::vector<PseudoDocument> docs = {{"x", {{"w", 3}, {"all", 1}}},
                                      {"y", {{"all", 2}, {"v", 1}}}};
  const auto m = TfidfVectorize(docs);
  EXPECT_EQ(m.vocabulary, (std::vector<std::string>{"all", "v", "w"}));
  EXPECT_NEAR(m.values(0, 2), 3 * std::log(2.0), 1e-15);
  EXPECT_NEAR(m.values(0, 2), 2.079, 1e-3);
  EXPECT_EQ(m.values(0, 0), 0.0);
  EXPECT_EQ(m.values(1, 0), 0.0);
  EXPECT_EQ(m.values(0, 1), 0.0);
  EXPECT_NEAR(m.values(1, 1), std::log(2.0), 1e-15);
}

TEST(Tfidf, DisjointVocabulariesBlockDiagonal) {
  std::vector<PseudoDocument> docs = {{"x", {{"a", 1}, {"b", 2}}},
                                      {"y", {{"c", 1}}},
                                      {"z", {{"d", 4}, {"e", 1}}}};
  const auto m = TfidfVectorize(docs);
  const std::vector<std::vector<int>> nonzero = {
      {1, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 1}};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 5; ++c) {
      EXPECT_EQ(m.values(r, c) != 0.0, nonzero[r][c] == 1) << r << "," << c;
    }
  }
  EXPECT_THROW(TfidfVectorize(std::span(docs).first(1)), DomainError);
}

TEST(Pca, LineIsReconstructedExactly) {
  Eigen::MatrixXd m(5, 3);
  for (int i = 0; i < 5; ++i) {
    m.row(i) = Eigen::RowVector3d(1, 2, -1) + (i - 1.5) * Eigen::RowVector3d(2, -1, 0.5);
  }
  const auto r = PcaReduce(m, 1);
  ASSERT_EQ(r.projected.cols(), 1);
  const Eigen::MatrixXd back =
      (r.projected * r.components.transpose()).rowwise() + r.mean;
  EXPECT_LT((back - m).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Pca, IdenticalRowsProjectToZero) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Ones(4, 3);
  m.col(1) *= 7;
  const auto r = PcaReduce(m, 2);
  EXPECT_LT(r.projected.cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Pca, RankBoundCapsDimension) {
  const auto r = PcaReduce(Eigen::MatrixXd::Random(3, 8), 500);
  EXPECT_EQ(r.projected.cols(), 2);
  EXPECT_THROW(PcaReduce(Eigen::MatrixXd::Random(1, 4), 2), DomainError);
  EXPECT_THROW(PcaReduce(Eigen::MatrixXd::Random(4, 4), 0), DomainError);
}

TEST(Pca, VarianceMatchesCovarianceEigenvalues) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::MatrixXd m(10, 6);
    for (int i = 0; i < 10; ++i) {
      for (int j = 0; j < 6; ++j) m(i, j) = g(rng) * (j + 1);
    }
    const auto r = PcaReduce(m, 3);
    ASSERT_EQ(r.projected.cols(), 3);
    const Eigen::MatrixXd centered = m.rowwise() - m.colwise().mean();
    const Eigen::MatrixXd cov = centered.transpose() * centered / 9.0;
    const auto oracle = testing::JacobiEigen(cov);
    for (int k = 0; k < 3; ++k) {
      const double var = r.projected.col(k).squaredNorm() / 9.0;
      EXPECT_NEAR(var, oracle.values[k], 1e-8 * std::max(1.0, oracle.values[k]));
      // Same direction up to sign.
      EXPECT_NEAR(std::abs(r.components.col(k).dot(oracle.vectors.col(k))), 1.0,
                  1e-8);
    }
  }
}

TEST(Pca, OrthogonalOrderedAndSignFixed) {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> g;
  Eigen::MatrixXd m(30, 12);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) m(i, j) = g(rng);
  }
  const auto r = PcaReduce(m, 8);
  const Eigen::MatrixXd gram = r.projected.transpose() * r.projected;
  for (int a = 0; a < gram.rows(); ++a) {
    for (int b = 0; b < gram.cols(); ++b) {
      if (a != b) EXPECT_LT(std::abs(gram(a, b)), 1e-8);
    }
    if (a > 0) EXPECT_GE(gram(a - 1, a - 1), gram(a, a));
  }
  for (int k = 0; k < r.components.cols(); ++k) {
    Eigen::Index arg = 0;
    r.components.col(k).cwiseAbs().maxCoeff(&arg);
    EXPECT_GT(r.components(arg, k), 0.0);
  }
  const auto again = PcaReduce(m, 8);
  EXPECT_EQ(again.projected, r.projected);
}

TermFeatureSet TwoDimTerms(const std::vector<std::string>& terms) {
  TermFeatureSet s;
  s.content_dim = 2;
  s.context_dim = 2;
  double x = 1;
  for (const auto& t : terms) {
    s.features[t] = {t, Eigen::Vector2d(x, x + 1), Eigen::Vector2d(-x, 0)};
    x += 1;
  }
  return s;
}

TEST(AssemblePairs, ConcatenatesAndSorts) {
  const auto preds = TwoDimTerms({"arrest_0", "kill_0"});
  const auto objs = TwoDimTerms({"people", "he"});
  const auto out = AssemblePairFeatures({{"kill_0", "people", 1, {"s1"}},
                                         {"arrest_0", "he", 3, {"s2"}},
                                         {"arrest_0", "people", 1, {"s3"}},
                                         {"fire_0", "people", 9, {"s4"}}},
                                        preds, objs);
  ASSERT_EQ(out.pairs.size(), 3u);
  ASSERT_EQ(out.dropped.size(), 1u);
  EXPECT_EQ(out.pairs[0].object_head, "he");
  EXPECT_EQ(out.pairs[1].predicate_sense, "arrest_0");
  EXPECT_EQ(out.pairs[2].predicate_sense, "kill_0");
  for (const auto& p : out.pairs) {
    EXPECT_EQ(p.h_p.size(), 4);
    EXPECT_EQ(p.h_o.size(), 4);
  }
  const auto& kill = out.pairs[2];
  EXPECT_EQ(kill.h_p, (Eigen::Vector4d(2, 3, -2, 0)));
}

TEST(FeaturizeOccurrences, FixtureBookkeeping) {
  std::ifstream parses(testing::DataDir() / "fixture_parses.jsonl");
  std::vector<POOccurrence> occs;
  for (const auto& s : ReadParsedSentences(parses)) {
    const auto found = ExtractPOOccurrences(s);
    occs.insert(occs.end(), found.begin(), found.end());
  }
  std::ifstream feats(testing::DataDir() / "pipeline" / "features.jsonl");
  const auto file = ReadMentionFeatures(feats, 10);
  std::map<MentionPosition, std::string> senses;
  for (const auto& m : file.mentions) {
    if (m.kind == MentionKind::kPredicate) {
      senses[{m.sentence_id, m.token_index}] = m.term + "_0";
    }
  }
  // Remove one sense so that an occurrence is dropped.
  ASSERT_EQ(senses.erase({occs[0].sentence_id, occs[0].predicate_index}), 1u);
  const auto set = FeaturizeOccurrences(occs, senses, file.mentions, 500);
  long total = 0;
  for (const auto& p : set.pairs) {
    total += p.frequency;
    EXPECT_EQ(p.h_p.size(), set.d_emb + set.d_pca_p);
    EXPECT_EQ(p.h_o.size(), set.d_emb + set.d_pca_o);
    EXPECT_TRUE(p.h_p.allFinite() && p.h_o.allFinite());
  }
  EXPECT_EQ(total + static_cast<long>(set.dropped.size()),
            static_cast<long>(occs.size()));
  const auto removed = std::count_if(occs.begin(), occs.end(), [&](const auto& o) {
    return o.sentence_id == occs[0].sentence_id &&
           o.predicate_index == occs[0].predicate_index;
  });
  EXPECT_EQ(static_cast<long>(set.dropped.size()), removed);
  EXPECT_EQ(set.d_emb, 16);
  const auto again = FeaturizeOccurrences(occs, senses, file.mentions, 500);
  ASSERT_EQ(again.pairs.size(), set.pairs.size());
  for (size_t i = 0; i < set.pairs.size(); ++i) {
    EXPECT_EQ(again.pairs[i].h_p, set.pairs[i].h_p);
    EXPECT_EQ(again.pairs[i].h_o, set.pairs[i].h_o);
  }
}

TEST(FeaturizeOccurrences, SingleTermRoleHasNoContext) {
  std::vector<POOccurrence> occs = {{"s", 1, "kill", Voice::kActive, 2, "people"},
                                    {"t", 1, "arrest", Voice::kActive, 2, "people"}};
  std::vector<MentionFeature> ms;
  auto add = [&](const std::string& sid, int idx, const std::string& term,
                 MentionKind kind, std::vector<double> e, RankedList l) {
    auto m = Mention(e, l, term);
    m.sentence_id = sid;
    m.token_index = idx;
    m.kind = kind;
    ms.push_back(m);
  };
  add("s", 1, "kill", MentionKind::kPredicate, {1, 0}, {"a", "b"});
  add("t", 1, "arrest", MentionKind::kPredicate, {0, 1}, {"b", "c"});
  add("s", 2, "people", MentionKind::kObjectHead, {1, 1}, {"x", "y"});
  add("t", 2, "people", MentionKind::kObjectHead, {1, -1}, {"x", "z"});
  const auto set = FeaturizeOccurrences(
      occs, {{{"s", 1}, "kill_0"}, {{"t", 1}, "arrest_0"}}, ms, 500);
  ASSERT_EQ(set.pairs.size(), 2u);
  EXPECT_EQ(set.d_pca_o, 0);
  EXPECT_EQ(set.d_pca_p, 1);
  EXPECT_EQ(set.pairs[0].h_o, Eigen::Vector2d(1, 0));
}

}  // namespace
}  // namespace etype

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

#ifndef ETYPE_FEATURIZER_H_
#define ETYPE_FEATURIZER_H_

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "etype/extraction.h"
#include "etype/mention.h"

namespace etype {

// Bag union of a term's prediction lists: a word appears T times if it occurs
// in T of the lists.
struct PseudoDocument {
  std::string term;
  std::map<std::string, int> bag;
};

struct TfidfMatrix {
  std::vector<std::string> vocabulary;  // sorted, one per column
  Eigen::MatrixXd values;               // one row per document
};

struct TermFeature {
  std::string term;
  Eigen::VectorXd content;  // mean mention embedding
  Eigen::VectorXd context;  // PCA-reduced TF-IDF of the pseudo document
};

// A <predicate sense, object head> pair with its initial features.
struct POPair {
  std::string predicate_sense;
  std::string object_head;
  long frequency = 0;
  std::vector<std::string> sentence_ids;
  Eigen::VectorXd h_p;
  Eigen::VectorXd h_o;
};

// Mean of the mention embeddings. Throws DomainError on empty input.
Eigen::VectorXd TermContentFeature(
    std::span<const MentionFeature* const> mentions);

PseudoDocument BuildPseudoDocument(
    const std::string& term, std::span<const MentionFeature* const> mentions);

// Raw counts times ln(N / df). Rows follow the input order. Throws
// DomainError for fewer than two documents.
TfidfMatrix TfidfVectorize(std::span<const PseudoDocument> docs);

struct TermFeatureSet {
  std::map<std::string, TermFeature> features;
  Eigen::Index content_dim = 0;
  Eigen::Index context_dim = 0;
};

// Builds content and context features for every term of one role. With a
// single term there is no variance to project and the context part is empty.
TermFeatureSet BuildTermFeatures(
    const std::map<std::string, std::vector<const MentionFeature*>>& mentions,
    int pca_dim);

struct PairCount {
  std::string predicate_sense;
  std::string object_head;
  long frequency = 0;
  std::vector<std::string> sentence_ids;
};

struct AssembledPairs {
  std::vector<POPair> pairs;
  std::vector<std::string> dropped;  // one human-readable reason per drop
};

// Concatenates [content, context] for both sides of each pair. Output is
// sorted by frequency descending, then predicate sense, then object head.
AssembledPairs AssemblePairFeatures(const std::vector<PairCount>& pairs,
                                    const TermFeatureSet& predicates,
                                    const TermFeatureSet& objects);

using MentionPosition = std::pair<std::string, int>;  // sentence id, token

struct PairFeatureSet {
  std::vector<POPair> pairs;
  std::vector<std::string> dropped;
  Eigen::Index d_emb = 0;
  Eigen::Index d_pca_p = 0;
  Eigen::Index d_pca_o = 0;
};

// End-to-end featurization of salient occurrences. Predicate terms are senses
// looked up by the predicate's position; object terms are head lemmas. Only
// mentions that take part in an occurrence contribute to term features.
PairFeatureSet FeaturizeOccurrences(
    const std::vector<POOccurrence>& occurrences,
    const std::map<MentionPosition, std::string>& predicate_senses,
    const std::vector<MentionFeature>& mentions, int pca_dim);

}  // namespace etype

#endif  // ETYPE_FEATURIZER_H_

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

#ifndef ETYPE_SENSE_H_
#define ETYPE_SENSE_H_

#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "etype/mention.h"
#include "etype/ranked_list.h"

namespace etype {

struct SenseExample {
  std::string text;
  int target_index = 0;
};

struct SenseEntry {
  std::string lemma;
  std::string sense_id;
  std::string definition;
  std::vector<SenseExample> examples;
};

// lemma -> candidate senses, in dictionary order.
using SenseDictionary = std::map<std::string, std::vector<SenseEntry>>;

// Mention id under which the features of the k-th example sentence of a
// sense are expected: "<sense_id>#<k>".
std::string SenseExampleKey(const std::string& sense_id, size_t k);

struct SenseProfile {
  std::string lemma;
  std::string sense_id;
  Eigen::VectorXd mean_embedding;
  RankedList aggregated_mwp;
};

struct ProfileBuild {
  std::vector<SenseProfile> profiles;
  std::vector<std::string> missing_examples;  // example keys without features
  std::vector<std::string> excluded_senses;   // senses left with no examples
};

// Averages example embeddings and fuses example prediction lists by mean
// reciprocal rank (truncated to `list_length`).
ProfileBuild BuildSenseProfiles(
    const std::vector<SenseEntry>& entries,
    const std::map<std::string, const MentionFeature*>& example_features,
    size_t list_length);

struct RboParams {
  double p = 0.9;
  int depth = 10;
};

struct SenseChoice {
  std::string sense_id;
  double score = 0.0;
  bool fallback = false;  // lemma absent from the dictionary
};

// Picks argmax_j cos(v, E_j) * rbo(v_mwp, E_j_mwp); ties go to the
// lexicographically smallest sense id. Throws DomainError when `profiles` is
// empty or every score is non-finite.
SenseChoice Disambiguate(const MentionFeature& mention,
                         const std::vector<SenseProfile>& profiles,
                         const RboParams& rbo = {});

// Catch-all sense id for lemmas the dictionary does not cover.
std::string FallbackSenseId(const std::string& lemma);

// Profiles grouped by lemma, built once per dictionary load.
class SenseInventory {
 public:
  SenseInventory(const SenseDictionary& dict,
                 const std::vector<MentionFeature>& example_features,
                 size_t list_length);

  SenseChoice Choose(const MentionFeature& mention,
                     const RboParams& rbo = {}) const;

  const std::vector<std::string>& missing_examples() const {
    return missing_examples_;
  }
  const std::vector<std::string>& excluded_senses() const {
    return excluded_senses_;
  }

 private:
  std::map<std::string, std::vector<SenseProfile>> by_lemma_;
  std::vector<std::string> missing_examples_;
  std::vector<std::string> excluded_senses_;
};

double Cosine(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

}  // namespace etype

#endif  // ETYPE_SENSE_H_

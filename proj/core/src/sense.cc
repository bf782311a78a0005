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

#include "etype/sense.h"

#include <cmath>
#include <limits>

#include "etype/errors.h"

namespace etype {

std::string SenseExampleKey(const std::string& sense_id, size_t k) {
  return sense_id + "#" + std::to_string(k);
}

std::string FallbackSenseId(const std::string& lemma) { return lemma + "_0"; }

double Cosine(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return a.dot(b) / (a.norm() * b.norm());
}

ProfileBuild BuildSenseProfiles(
    const std::vector<SenseEntry>& entries,
    const std::map<std::string, const MentionFeature*>& example_features,
    size_t list_length) {
  ProfileBuild out;
  for (const SenseEntry& entry : entries) {
    std::vector<const MentionFeature*> found;
    for (size_t k = 0; k < entry.examples.size(); ++k) {
      const std::string key = SenseExampleKey(entry.sense_id, k);
      auto it = example_features.find(key);
      if (it == example_features.end()) {
        out.missing_examples.push_back(key);
      } else {
        found.push_back(it->second);
      }
    }
    if (found.empty()) {
      out.excluded_senses.push_back(entry.sense_id);
      continue;
    }
    SenseProfile profile;
    profile.lemma = entry.lemma;
    profile.sense_id = entry.sense_id;
    profile.mean_embedding = Eigen::VectorXd::Zero(found[0]->embedding.size());
    std::vector<RankedList> lists;
    for (const MentionFeature* f : found) {
      if (f->embedding.size() != profile.mean_embedding.size()) {
        throw InputError("sense " + entry.sense_id +
                         ": example embeddings differ in dimension");
      }
      profile.mean_embedding += f->embedding;
      lists.push_back(f->mwp);
    }
    profile.mean_embedding /= static_cast<double>(found.size());
    profile.aggregated_mwp = AggregateMeanReciprocalRank(lists, list_length);
    out.profiles.push_back(std::move(profile));
  }
  return out;
}

SenseChoice Disambiguate(const MentionFeature& mention,
                         const std::vector<SenseProfile>& profiles,
                         const RboParams& rbo) {
  if (profiles.empty()) throw DomainError("no candidate senses");
  auto score_of = [&](const SenseProfile& profile) {
    return Cosine(mention.embedding, profile.mean_embedding) *
           RankBiasedOverlap(mention.mwp, profile.aggregated_mwp, rbo.p,
                             rbo.depth);
  };
  if (profiles.size() == 1) {
    const double score = score_of(profiles[0]);
    return {profiles[0].sense_id, std::isfinite(score) ? score : 0.0, false};
  }
  const SenseProfile* best = nullptr;
  double best_score = -std::numeric_limits<double>::infinity();
  for (const SenseProfile& profile : profiles) {
    const double score = score_of(profile);
    if (!std::isfinite(score)) continue;
    if (best == nullptr || score > best_score ||
        (score == best_score && profile.sense_id < best->sense_id)) {
      best = &profile;
      best_score = score;
    }
  }
  if (best == nullptr) {
    throw DomainError("mention " + mention.mention_id +
                      ": no sense has a finite score");
  }
  return {best->sense_id, best_score, false};
}

SenseInventory::SenseInventory(
    const SenseDictionary& dict,
    const std::vector<MentionFeature>& example_features, size_t list_length) {
  std::map<std::string, const MentionFeature*> index;
  for (const MentionFeature& f : example_features) {
    if (f.kind == MentionKind::kSenseExample) index[f.mention_id] = &f;
  }
  for (const auto& [lemma, entries] : dict) {
    ProfileBuild build = BuildSenseProfiles(entries, index, list_length);
    missing_examples_.insert(missing_examples_.end(),
                             build.missing_examples.begin(),
                             build.missing_examples.end());
    excluded_senses_.insert(excluded_senses_.end(),
                            build.excluded_senses.begin(),
                            build.excluded_senses.end());
    if (!build.profiles.empty()) by_lemma_[lemma] = std::move(build.profiles);
  }
}

SenseChoice SenseInventory::Choose(const MentionFeature& mention,
                                   const RboParams& rbo) const {
  auto it = by_lemma_.find(mention.term);
  if (it == by_lemma_.end()) {
    return {FallbackSenseId(mention.term), 0.0, true};
  }
  return Disambiguate(mention, it->second, rbo);
}

}  // namespace etype

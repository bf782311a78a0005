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
#include <set>

#include "etype/errors.h"
#include "etype/pca.h"

namespace etype {

Eigen::VectorXd TermContentFeature(
    std::span<const MentionFeature* const> mentions) {
  if (mentions.empty()) throw DomainError("content feature of zero mentions");
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(mentions[0]->embedding.size());
  for (const MentionFeature* m : mentions) {
    if (m->embedding.size() != sum.size()) {
      throw InputError("term " + m->term + ": mixed embedding dimensions");
    }
    sum += m->embedding;
  }
  return sum / static_cast<double>(mentions.size());
}

PseudoDocument BuildPseudoDocument(
    const std::string& term, std::span<const MentionFeature* const> mentions) {
  PseudoDocument doc{term, {}};
  for (const MentionFeature* m : mentions) {
    // A list contributes each distinct word once.
    std::set<std::string> words(m->mwp.begin(), m->mwp.end());
    for (const std::string& w : words) ++doc.bag[w];
  }
  return doc;
}

TfidfMatrix TfidfVectorize(std::span<const PseudoDocument> docs) {
  if (docs.size() < 2) throw DomainError("tf-idf needs at least 2 documents");
  std::map<std::string, int> df;
  for (const PseudoDocument& d : docs) {
    for (const auto& [w, c] : d.bag) {
      if (c > 0) ++df[w];
    }
  }
  TfidfMatrix out;
  std::map<std::string, Eigen::Index> column;
  for (const auto& [w, n] : df) {
    column[w] = static_cast<Eigen::Index>(out.vocabulary.size());
    out.vocabulary.push_back(w);
  }
  const double n_docs = static_cast<double>(docs.size());
  out.values = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(docs.size()),
                                     static_cast<Eigen::Index>(df.size()));
  for (size_t r = 0; r < docs.size(); ++r) {
    for (const auto& [w, c] : docs[r].bag) {
      if (c <= 0) continue;
      const double idf = std::log(n_docs / static_cast<double>(df[w]));
      out.values(static_cast<Eigen::Index>(r), column[w]) = c * idf;
    }
  }
  return out;
}

TermFeatureSet BuildTermFeatures(
    const std::map<std::string, std::vector<const MentionFeature*>>& mentions,
    int pca_dim) {
  TermFeatureSet out;
  std::vector<PseudoDocument> docs;
  for (const auto& [term, ms] : mentions) {
    TermFeature f;
    f.term = term;
    f.content = TermContentFeature(ms);
    if (out.content_dim == 0) out.content_dim = f.content.size();
    if (f.content.size() != out.content_dim) {
      throw InputError("term " + term + ": embedding dimension differs");
    }
    out.features.emplace(term, std::move(f));
    docs.push_back(BuildPseudoDocument(term, ms));
  }
  if (docs.size() < 2) {
    for (auto& [term, f] : out.features) f.context.resize(0);
    return out;
  }
  const TfidfMatrix tfidf = TfidfVectorize(docs);
  const PcaResult pca = PcaReduce(tfidf.values, pca_dim);
  out.context_dim = pca.projected.cols();
  for (size_t r = 0; r < docs.size(); ++r) {
    out.features.at(docs[r].term).context =
        pca.projected.row(static_cast<Eigen::Index>(r)).transpose();
  }
  return out;
}

AssembledPairs AssemblePairFeatures(const std::vector<PairCount>& pairs,
                                    const TermFeatureSet& predicates,
                                    const TermFeatureSet& objects) {
  AssembledPairs out;
  auto concat = [](const TermFeature& f) {
    Eigen::VectorXd h(f.content.size() + f.context.size());
    h << f.content, f.context;
    return h;
  };
  for (const PairCount& pc : pairs) {
    auto p = predicates.features.find(pc.predicate_sense);
    auto o = objects.features.find(pc.object_head);
    if (p == predicates.features.end() || o == objects.features.end()) {
      out.dropped.push_back("<" + pc.predicate_sense + ", " + pc.object_head +
                            ">: missing " +
                            (p == predicates.features.end() ? "predicate"
                                                            : "object") +
                            " features");
      continue;
    }
    POPair pair;
    pair.predicate_sense = pc.predicate_sense;
    pair.object_head = pc.object_head;
    pair.frequency = pc.frequency;
    pair.sentence_ids = pc.sentence_ids;
    pair.h_p = concat(p->second);
    pair.h_o = concat(o->second);
    if (!pair.h_p.allFinite() || !pair.h_o.allFinite()) {
      throw InputError("non-finite features for <" + pc.predicate_sense +
                       ", " + pc.object_head + ">");
    }
    out.pairs.push_back(std::move(pair));
  }
  std::sort(out.pairs.begin(), out.pairs.end(),
            [](const POPair& a, const POPair& b) {
              if (a.frequency != b.frequency) return a.frequency > b.frequency;
              if (a.predicate_sense != b.predicate_sense) {
                return a.predicate_sense < b.predicate_sense;
              }
              return a.object_head < b.object_head;
            });
  return out;
}

PairFeatureSet FeaturizeOccurrences(
    const std::vector<POOccurrence>& occurrences,
    const std::map<MentionPosition, std::string>& predicate_senses,
    const std::vector<MentionFeature>& mentions, int pca_dim) {
  std::map<MentionPosition, const MentionFeature*> predicate_at, head_at;
  for (const MentionFeature& m : mentions) {
    const MentionPosition pos{m.sentence_id, m.token_index};
    if (m.kind == MentionKind::kPredicate) predicate_at[pos] = &m;
    if (m.kind == MentionKind::kObjectHead) head_at[pos] = &m;
  }

  PairFeatureSet out;
  std::map<std::string, std::set<MentionPosition>> sense_mentions, head_mentions;
  std::map<PairKey, PairCount> counts;
  for (const POOccurrence& occ : occurrences) {
    const MentionPosition ppos{occ.sentence_id, occ.predicate_index};
    const MentionPosition hpos{occ.sentence_id, occ.object_head_index};
    const std::string where =
        occ.sentence_id + ":" + std::to_string(occ.predicate_index);
    auto sense = predicate_senses.find(ppos);
    if (sense == predicate_senses.end()) {
      out.dropped.push_back(where + ": predicate has no sense assignment");
      continue;
    }
    if (!predicate_at.contains(ppos)) {
      out.dropped.push_back(where + ": predicate mention has no features");
      continue;
    }
    if (!head_at.contains(hpos)) {
      out.dropped.push_back(occ.sentence_id + ":" +
                            std::to_string(occ.object_head_index) +
                            ": object head mention has no features");
      continue;
    }
    sense_mentions[sense->second].insert(ppos);
    head_mentions[occ.object_head_lemma].insert(hpos);
    PairCount& pc = counts[{sense->second, occ.object_head_lemma}];
    pc.predicate_sense = sense->second;
    pc.object_head = occ.object_head_lemma;
    ++pc.frequency;
    if (std::find(pc.sentence_ids.begin(), pc.sentence_ids.end(),
                  occ.sentence_id) == pc.sentence_ids.end()) {
      pc.sentence_ids.push_back(occ.sentence_id);
    }
  }

  auto resolve = [](const std::map<std::string, std::set<MentionPosition>>& g,
                    const std::map<MentionPosition, const MentionFeature*>& at) {
    std::map<std::string, std::vector<const MentionFeature*>> out;
    for (const auto& [term, positions] : g) {
      for (const MentionPosition& pos : positions) {
        out[term].push_back(at.at(pos));
      }
    }
    return out;
  };
  const TermFeatureSet preds =
      BuildTermFeatures(resolve(sense_mentions, predicate_at), pca_dim);
  const TermFeatureSet objs =
      BuildTermFeatures(resolve(head_mentions, head_at), pca_dim);

  std::vector<PairCount> pair_list;
  for (auto& [key, pc] : counts) pair_list.push_back(std::move(pc));
  AssembledPairs assembled = AssemblePairFeatures(pair_list, preds, objs);
  out.pairs = std::move(assembled.pairs);
  out.dropped.insert(out.dropped.end(), assembled.dropped.begin(),
                     assembled.dropped.end());
  out.d_emb = preds.content_dim;
  out.d_pca_p = preds.context_dim;
  out.d_pca_o = objs.context_dim;
  return out;
}

}  // namespace etype

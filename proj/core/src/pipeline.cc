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

#include "etype/pipeline.h"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "etype/checkpoint.h"
#include "etype/errors.h"
#include "etype/extraction.h"
#include "etype/featurizer.h"
#include "etype/metrics.h"
#include "etype/salience.h"
#include "etype/sense.h"

namespace etype {

using nlohmann::json;

namespace {

void Log(const std::string& msg) { std::cerr << "[etype] " << msg << '\n'; }

std::ifstream OpenIn(const fs::path& p, std::ios::openmode mode = std::ios::in) {
  std::ifstream in(p, mode);
  if (!in) throw InputError("cannot open " + p.string());
  return in;
}

std::ofstream OpenOut(const fs::path& p,
                      std::ios::openmode mode = std::ios::out) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, mode | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  return out;
}

// Wraps reader errors with the file name.
template <typename Fn>
auto ReadFile(const fs::path& p, Fn fn,
              std::ios::openmode mode = std::ios::in) {
  std::ifstream in = OpenIn(p, mode);
  try {
    return fn(in);
  } catch (const InputError& e) {
    throw InputError(p.string() + ": " + e.what());
  }
}

json TrainJson(const TrainConfig& c) {
  return {{"num_clusters", c.num_clusters},
          {"latent_dim", c.latent_dim},
          {"encoder_hidden", c.encoder_hidden},
          {"kappa", c.kappa},
          {"lambda", c.lambda},
          {"delta", c.delta},
          {"max_iters", c.max_iters},
          {"learning_rate", c.learning_rate},
          {"batch_size", c.batch_size},
          {"pretrain_epochs", c.pretrain_epochs}};
}

}  // namespace

// ---------------------------------------------------------------------------

PipelineConfig PipelineConfig::FromJson(const std::string& text,
                                        const fs::path& base_dir) {
  PipelineConfig c;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("config: malformed JSON: ") + e.what());
  }
  auto path = [&](const json& p, const char* key, fs::path& dst) {
    if (!p.contains(key)) return;
    fs::path v = p.at(key).get<std::string>();
    dst = v.is_absolute() ? v : base_dir / v;
  };
  try {
    if (j.contains("paths")) {
      const json& p = j.at("paths");
      path(p, "parses", c.paths.parses);
      path(p, "features", c.paths.features);
      path(p, "dictionary", c.paths.dictionary);
      path(p, "background", c.paths.background);
      path(p, "output_dir", c.paths.output_dir);
    }
    if (j.contains("salience")) {
      c.keep_fraction =
          j.at("salience").value("keep_fraction", c.keep_fraction);
    }
    c.mwp_length = j.value("mwp_length", c.mwp_length);
    c.rbo_p = j.value("rbo_p", c.rbo_p);
    c.pca_dim = j.value("pca_dim", c.pca_dim);
    c.seed = j.value("seed", c.seed);
    if (j.contains("train")) {
      const json& t = j.at("train");
      TrainConfig& tc = c.train;
      tc.num_clusters = t.value("num_clusters", tc.num_clusters);
      tc.latent_dim = t.value("latent_dim", tc.latent_dim);
      tc.encoder_hidden = t.value("encoder_hidden", tc.encoder_hidden);
      tc.kappa = t.value("kappa", tc.kappa);
      tc.lambda = t.value("lambda", tc.lambda);
      tc.delta = t.value("delta", tc.delta);
      tc.max_iters = t.value("max_iters", tc.max_iters);
      tc.learning_rate = t.value("learning_rate", tc.learning_rate);
      tc.batch_size = t.value("batch_size", tc.batch_size);
      tc.pretrain_epochs = t.value("pretrain_epochs", tc.pretrain_epochs);
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("config: ") + e.what());
  }
  return c;
}

PipelineConfig PipelineConfig::Load(const fs::path& file) {
  std::ifstream in = OpenIn(file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return FromJson(buffer.str(), file.parent_path());
}

std::string PipelineConfig::Hash() const {
  const json j = {{"keep_fraction", keep_fraction},
                  {"mwp_length", mwp_length},
                  {"rbo_p", rbo_p},
                  {"pca_dim", pca_dim},
                  {"seed", seed},
                  {"train", TrainJson(train)}};
  return Fnv1aHex(j.dump());
}

OutputMeta PipelineConfig::Meta() const { return {Hash(), seed}; }

TrainConfig PipelineConfig::EffectiveTrain() const {
  TrainConfig t = train;
  t.seed = seed;
  return t;
}

void PipelineConfig::Validate() const {
  if (!(keep_fraction > 0.0 && keep_fraction <= 1.0)) {
    throw InputError("config: salience.keep_fraction must lie in (0, 1]");
  }
  if (mwp_length < 1) throw InputError("config: mwp_length must be >= 1");
  if (!(rbo_p > 0.0 && rbo_p < 1.0)) {
    throw InputError("config: rbo_p must lie in (0, 1)");
  }
  if (pca_dim < 1) throw InputError("config: pca_dim must be >= 1");
}

// ---------------------------------------------------------------------------

ExtractSummary CmdExtract(const fs::path& parses, const fs::path& out_dir,
                          const PipelineConfig& config) {
  const std::vector<ParsedSentence> sentences = ReadFile(
      parses, [](std::istream& in) { return ReadParsedSentences(in); });
  std::vector<POOccurrence> occs;
  for (const ParsedSentence& s : sentences) {
    std::vector<POOccurrence> found = ExtractPOOccurrences(s);
    occs.insert(occs.end(), found.begin(), found.end());
  }
  const PairFrequencyTable table = AggregatePairs(occs);
  const OutputMeta meta = config.Meta();
  {
    std::ofstream out = OpenOut(out_dir / files::kOccurrences);
    WriteOccurrences(out, occs, meta);
  }
  {
    std::ofstream out = OpenOut(out_dir / files::kPairFreq);
    WritePairFrequencies(out, table, meta);
  }
  ExtractSummary s{static_cast<long>(sentences.size()),
                   static_cast<long>(occs.size()),
                   static_cast<long>(table.size())};
  Log("extract: " + std::to_string(s.sentences) + " sentences, " +
      std::to_string(s.occurrences) + " occurrences, " +
      std::to_string(s.distinct_pairs) + " distinct pairs");
  return s;
}

SelectSummary CmdSelect(const fs::path& pair_freq, const fs::path& background,
                        const std::optional<fs::path>& occurrences,
                        const fs::path& out_dir, const PipelineConfig& config) {
  config.Validate();
  const PairFrequencyTable pairs = ReadFile(
      pair_freq, [](std::istream& in) { return ReadPairFrequencies(in); });
  const BackgroundStats bg = ReadFile(
      background, [](std::istream& in) { return ReadBackgroundStats(in); });

  SelectSummary s;
  const OutputMeta meta = config.Meta();
  std::set<std::string> salient_preds, salient_heads;
  const std::map<std::string, long> pred_counts = PredicateCounts(pairs);
  const std::map<std::string, long> head_counts = ObjectHeadCounts(pairs);
  if (!pred_counts.empty()) {
    const SalienceTable preds = BuildSalienceTable(pred_counts, bg);
    salient_preds = SelectSalient(preds, config.keep_fraction);
    std::ofstream out = OpenOut(out_dir / files::kPredicateSalience);
    WriteSalienceTable(out, preds, meta);
  } else {
    std::ofstream out = OpenOut(out_dir / files::kPredicateSalience);
    WriteSalienceTable(out, {}, meta);
  }
  if (!head_counts.empty()) {
    const SalienceTable heads = BuildSalienceTable(head_counts, bg);
    salient_heads = SelectSalient(heads, config.keep_fraction);
    std::ofstream out = OpenOut(out_dir / files::kHeadSalience);
    WriteSalienceTable(out, heads, meta);
  } else {
    std::ofstream out = OpenOut(out_dir / files::kHeadSalience);
    WriteSalienceTable(out, {}, meta);
  }
  {
    std::ofstream out = OpenOut(out_dir / files::kSalientPredicates);
    WriteWordList(out, salient_preds, meta);
  }
  {
    std::ofstream out = OpenOut(out_dir / files::kSalientHeads);
    WriteWordList(out, salient_heads, meta);
  }
  s.predicates = static_cast<long>(pred_counts.size());
  s.heads = static_cast<long>(head_counts.size());
  s.salient_predicates = static_cast<long>(salient_preds.size());
  s.salient_heads = static_cast<long>(salient_heads.size());
  if (occurrences) {
    const std::vector<POOccurrence> occs = ReadFile(
        *occurrences, [](std::istream& in) { return ReadOccurrences(in); });
    const std::vector<POOccurrence> kept =
        FilterOccurrences(occs, salient_preds, salient_heads);
    s.kept_occurrences = static_cast<long>(kept.size());
    std::ofstream out = OpenOut(out_dir / files::kSalientOccurrences);
    WriteOccurrences(out, kept, meta);
  }
  Log("select: " + std::to_string(s.salient_predicates) + "/" +
      std::to_string(s.predicates) + " predicate lemmas, " +
      std::to_string(s.salient_heads) + "/" + std::to_string(s.heads) +
      " object heads kept");
  return s;
}

DisambiguateSummary CmdDisambiguate(const fs::path& features,
                                    const fs::path& dictionary,
                                    const fs::path& out_dir,
                                    const PipelineConfig& config) {
  config.Validate();
  const MentionFeatureFile file =
      ReadFile(features, [&](std::istream& in) {
        return ReadMentionFeatures(in, config.mwp_length);
      });
  const SenseDictionary dict = ReadFile(
      dictionary, [](std::istream& in) { return ReadSenseDictionary(in); });

  const SenseInventory inventory(dict, file.mentions, config.mwp_length);
  for (const std::string& key : inventory.missing_examples()) {
    Log("disambiguate: no features for sense example " + key);
  }
  for (const std::string& sense : inventory.excluded_senses()) {
    Log("disambiguate: sense " + sense + " has no featured examples; skipped");
  }
  const RboParams rbo{config.rbo_p, static_cast<int>(config.mwp_length)};
  DisambiguateSummary s;
  s.excluded_senses = static_cast<long>(inventory.excluded_senses().size());
  std::vector<SenseAssignment> rows;
  for (const MentionFeature& m : file.mentions) {
    if (m.kind != MentionKind::kPredicate) continue;
    const SenseChoice choice = inventory.Choose(m, rbo);
    rows.push_back({m.mention_id, m.term, choice.sense_id,
                    choice.fallback ? std::nullopt
                                    : std::optional<double>(choice.score)});
    ++s.mentions;
    s.fallbacks += choice.fallback;
  }
  std::ofstream out = OpenOut(out_dir / files::kSenses);
  WriteSenseAssignments(out, rows, config.Meta());
  Log("disambiguate: " + std::to_string(s.mentions) + " predicate mentions, " +
      std::to_string(s.fallbacks) + " outside the dictionary");
  return s;
}

FeaturizeSummary CmdFeaturize(const fs::path& occurrences,
                              const fs::path& features,
                              const fs::path& senses, const fs::path& out_dir,
                              const PipelineConfig& config) {
  config.Validate();
  const std::vector<POOccurrence> occs = ReadFile(
      occurrences, [](std::istream& in) { return ReadOccurrences(in); });
  const MentionFeatureFile file =
      ReadFile(features, [&](std::istream& in) {
        return ReadMentionFeatures(in, config.mwp_length);
      });
  const std::vector<SenseAssignment> assigned = ReadFile(
      senses, [](std::istream& in) { return ReadSenseAssignments(in); });

  std::map<std::string, const MentionFeature*> by_id;
  for (const MentionFeature& m : file.mentions) by_id[m.mention_id] = &m;
  std::map<MentionPosition, std::string> predicate_senses;
  for (const SenseAssignment& a : assigned) {
    auto it = by_id.find(a.mention_id);
    if (it == by_id.end()) {
      throw InputError(senses.string() + ": unknown mention " + a.mention_id);
    }
    predicate_senses[{it->second->sentence_id, it->second->token_index}] =
        a.sense_id;
  }
  const PairFeatureSet set = FeaturizeOccurrences(
      occs, predicate_senses, file.mentions, config.pca_dim);
  for (const std::string& why : set.dropped) Log("featurize: dropped " + why);
  std::ofstream out = OpenOut(out_dir / files::kPairFeatures);
  WritePairFeatures(out, set, config.Meta());
  FeaturizeSummary s{static_cast<long>(set.pairs.size()),
                     static_cast<long>(set.dropped.size())};
  Log("featurize: " + std::to_string(s.pairs) + " pairs (h_p " +
      std::to_string(set.d_emb + set.d_pca_p) + "-d, h_o " +
      std::to_string(set.d_emb + set.d_pca_o) + "-d)");
  return s;
}

ClusterSummary CmdCluster(const fs::path& pair_features,
                          const fs::path& out_dir,
                          const PipelineConfig& config) {
  const PairFeatureSet set = ReadFile(
      pair_features, [](std::istream& in) { return ReadPairFeatures(in); });
  const TrainConfig train = config.EffectiveTrain();
  try {
    train.Validate();
  } catch (const DomainError& e) {
    throw InputError(std::string("config: ") + e.what());
  }
  if (static_cast<size_t>(train.num_clusters) > set.pairs.size()) {
    throw InputError("config: K = " + std::to_string(train.num_clusters) +
                     " exceeds the number of pairs (" +
                     std::to_string(set.pairs.size()) + ")");
  }
  const TrainResult result = Train(set.pairs, train);
  const OutputMeta meta = config.Meta();

  {
    std::ofstream out =
        OpenOut(out_dir / files::kCheckpoint, std::ios::out | std::ios::binary);
    SaveCheckpoint(out, result.model, train, meta);
  }

  const auto ranked =
      RankPairsPerType(result.model, result.assignment.labels, set.pairs);
  json clusters = json::array();
  for (size_t k = 0; k < ranked.size(); ++k) {
    json pairs = json::array();
    std::vector<std::string> examples;
    for (const RankedPair& rp : ranked[k]) {
      const POPair& p = set.pairs[rp.index];
      pairs.push_back({{"predicate_sense", p.predicate_sense},
                       {"object_head", p.object_head},
                       {"score", rp.score},
                       {"frequency", p.frequency}});
      for (const std::string& sid : p.sentence_ids) {
        if (examples.size() >= 5) break;
        if (std::find(examples.begin(), examples.end(), sid) ==
            examples.end()) {
          examples.push_back(sid);
        }
      }
    }
    clusters.push_back({{"cluster_id", k},
                        {"size", ranked[k].size()},
                        {"pairs", pairs},
                        {"example_sentence_ids", examples}});
  }
  json header = {{"schema", "etype.cluster_report"},
                 {"schema_version", kSchemaVersion},
                 {"tool_version", ToolVersion()},
                 {"config_hash", meta.config_hash},
                 {"seed", meta.seed},
                 {"num_pairs", set.pairs.size()},
                 {"iterations", result.iterations},
                 {"stop_reason", StopReasonName(result.stop)}};
  {
    std::ofstream out = OpenOut(out_dir / files::kClusters);
    out << json{{"_header", header}, {"clusters", clusters}}.dump(2) << '\n';
  }
  {
    std::ofstream out = OpenOut(out_dir / files::kLabels);
    for (int label : result.assignment.labels) out << label << '\n';
  }
  {
    std::ofstream out = OpenOut(out_dir / files::kAssignments);
    out << "# etype " << ToolVersion() << " schema=assignments config_hash="
        << meta.config_hash << " seed=" << meta.seed << '\n';
    for (size_t i = 0; i < set.pairs.size(); ++i) {
      const int label = result.assignment.labels[i];
      out << set.pairs[i].predicate_sense << '\t' << set.pairs[i].object_head
          << '\t' << label << '\t'
          << FormatFloat32(result.assignment.posterior(
                 static_cast<Eigen::Index>(i), label))
          << '\n';
    }
  }
  ClusterSummary s{static_cast<long>(set.pairs.size()), result.iterations,
                   result.stop};
  Log("cluster: " + std::to_string(s.pairs) + " pairs, " +
      std::to_string(s.iterations) + " iterations (" +
      StopReasonName(s.stop) + ")");
  return s;
}

std::string CmdEvaluate(const fs::path& predicted, const fs::path& reference) {
  const LabelFile pred =
      ReadFile(predicted, [](std::istream& in) { return ReadLabels(in); });
  const LabelFile ref =
      ReadFile(reference, [](std::istream& in) { return ReadLabels(in); });
  metrics::ClusteringResult r;
  if (!pred.ids.empty() || !ref.ids.empty()) {
    if (pred.ids.empty() || ref.ids.empty()) {
      throw InputError("evaluate: cannot mix plain and keyed label files");
    }
    std::map<std::string, int> ref_by_id;
    for (size_t i = 0; i < ref.ids.size(); ++i) {
      ref_by_id[ref.ids[i]] = ref.labels[i];
    }
    if (ref_by_id.size() != pred.ids.size()) {
      throw InputError("evaluate: label files cover different ids");
    }
    for (size_t i = 0; i < pred.ids.size(); ++i) {
      auto it = ref_by_id.find(pred.ids[i]);
      if (it == ref_by_id.end()) {
        throw InputError("evaluate: id '" + pred.ids[i] +
                         "' missing from reference");
      }
      r.predicted.push_back(pred.labels[i]);
      r.reference.push_back(it->second);
    }
  } else {
    if (pred.labels.size() != ref.labels.size()) {
      throw InputError("evaluate: " + std::to_string(pred.labels.size()) +
                       " predicted labels vs " +
                       std::to_string(ref.labels.size()) + " reference labels");
    }
    r.predicted = pred.labels;
    r.reference = ref.labels;
  }
  if (r.predicted.size() < 2) {
    throw InputError("evaluate: need at least 2 labeled elements");
  }
  const metrics::BCubed b = metrics::BCubedScores(r);
  json report = {{"ari", metrics::AdjustedRandIndex(r)},
                 {"nmi", metrics::NormalizedMutualInformation(r)},
                 {"bcubed_p", b.precision},
                 {"bcubed_r", b.recall},
                 {"bcubed_f1", b.f1}};
  try {
    report["acc"] = metrics::ClusteringAccuracy(r);
  } catch (const DomainError& e) {
    Log(std::string("evaluate: acc undefined: ") + e.what());
    report["acc"] = nullptr;
  }
  return report.dump(2);
}

void CmdRunAll(const PipelineConfig& config) {
  const PipelinePaths& p = config.paths;
  const fs::path& out = p.output_dir;
  if (out.empty()) throw InputError("config: paths.output_dir is required");
  CmdExtract(p.parses, out, config);
  CmdSelect(out / files::kPairFreq, p.background, out / files::kOccurrences,
            out, config);
  CmdDisambiguate(p.features, p.dictionary, out, config);
  CmdFeaturize(out / files::kSalientOccurrences, p.features,
               out / files::kSenses, out, config);
  CmdCluster(out / files::kPairFeatures, out, config);
}

}  // namespace etype

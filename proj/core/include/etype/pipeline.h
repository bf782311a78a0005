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

#ifndef ETYPE_PIPELINE_H_
#define ETYPE_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "etype/formats.h"
#include "etype/trainer.h"

namespace etype {

namespace fs = std::filesystem;

struct PipelinePaths {
  fs::path parses;
  fs::path features;
  fs::path dictionary;
  fs::path background;
  fs::path output_dir;
};

struct PipelineConfig {
  PipelinePaths paths;
  double keep_fraction = 0.8;
  size_t mwp_length = 10;
  double rbo_p = 0.9;
  int pca_dim = 500;
  TrainConfig train;
  uint64_t seed = 0;

  // Parses the JSON config format; relative paths resolve against
  // `base_dir`. Missing keys keep their defaults. Throws InputError.
  static PipelineConfig FromJson(const std::string& text,
                                 const fs::path& base_dir);
  static PipelineConfig Load(const fs::path& file);

  // Hash of every algorithmic setting (paths excluded), so outputs written
  // to different directories carry the same provenance.
  std::string Hash() const;
  OutputMeta Meta() const;

  // TrainConfig with the pipeline seed applied.
  TrainConfig EffectiveTrain() const;
  void Validate() const;
};

// Output file names inside an output directory.
namespace files {
inline constexpr const char* kOccurrences = "po_occurrences.jsonl";
inline constexpr const char* kPairFreq = "pair_freq.tsv";
inline constexpr const char* kPredicateSalience = "predicate_salience.tsv";
inline constexpr const char* kHeadSalience = "head_salience.tsv";
inline constexpr const char* kSalientPredicates = "salient_predicates.txt";
inline constexpr const char* kSalientHeads = "salient_heads.txt";
inline constexpr const char* kSalientOccurrences = "salient_occurrences.jsonl";
inline constexpr const char* kSenses = "sense_assignments.jsonl";
inline constexpr const char* kPairFeatures = "pair_features.jsonl";
inline constexpr const char* kCheckpoint = "model.ckpt";
inline constexpr const char* kClusters = "clusters.json";
inline constexpr const char* kLabels = "labels.txt";
inline constexpr const char* kAssignments = "assignments.tsv";
}  // namespace files

struct ExtractSummary {
  long sentences = 0;
  long occurrences = 0;
  long distinct_pairs = 0;
};
ExtractSummary CmdExtract(const fs::path& parses, const fs::path& out_dir,
                          const PipelineConfig& config);

struct SelectSummary {
  long predicates = 0, salient_predicates = 0;
  long heads = 0, salient_heads = 0;
  long kept_occurrences = 0;
};
// `occurrences` is optional; when given, the salient subset is written too.
SelectSummary CmdSelect(const fs::path& pair_freq, const fs::path& background,
                        const std::optional<fs::path>& occurrences,
                        const fs::path& out_dir, const PipelineConfig& config);

struct DisambiguateSummary {
  long mentions = 0;
  long fallbacks = 0;
  long excluded_senses = 0;
};
DisambiguateSummary CmdDisambiguate(const fs::path& features,
                                    const fs::path& dictionary,
                                    const fs::path& out_dir,
                                    const PipelineConfig& config);

struct FeaturizeSummary {
  long pairs = 0;
  long dropped = 0;
};
FeaturizeSummary CmdFeaturize(const fs::path& occurrences,
                              const fs::path& features,
                              const fs::path& senses, const fs::path& out_dir,
                              const PipelineConfig& config);

struct ClusterSummary {
  long pairs = 0;
  int iterations = 0;
  StopReason stop = StopReason::kMaxIters;
};
ClusterSummary CmdCluster(const fs::path& pair_features,
                          const fs::path& out_dir,
                          const PipelineConfig& config);

// Returns the metrics report as pretty-printed JSON. Throws InputError when
// the label files disagree in length or id set.
std::string CmdEvaluate(const fs::path& predicted, const fs::path& reference);

// extract -> select -> disambiguate -> featurize -> cluster, all inside
// config.paths.output_dir.
void CmdRunAll(const PipelineConfig& config);

}  // namespace etype

#endif  // ETYPE_PIPELINE_H_

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

#ifndef ETYPE_FORMATS_H_
#define ETYPE_FORMATS_H_

// Readers and writers for the line-delimited interchange files. JSONL files
// may start with a header record {"_header": {...}} that readers skip; TSV
// files may carry '#' comment lines. Readers report 1-based line numbers in
// InputError messages.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "etype/extraction.h"
#include "etype/featurizer.h"
#include "etype/mention.h"
#include "etype/salience.h"
#include "etype/sense.h"
#include "etype/sentence.h"

namespace etype {

inline constexpr int kSchemaVersion = 1;

const char* ToolVersion();

// Provenance stamped into every output file.
struct OutputMeta {
  std::string config_hash;
  uint64_t seed = 0;
};

// --- ParsedSentence JSONL -------------------------------------------------
// {sentence_id, text, tokens: [{index, text, lemma, pos, dep_label, head}]}
// where head is a token index, -1, null or "ROOT" (a token whose head is its
// own index is also treated as the root).
ParsedSentence ParseSentenceJson(std::string_view line);
std::vector<ParsedSentence> ReadParsedSentences(std::istream& in);
void WriteParsedSentence(std::ostream& out, const ParsedSentence& s);

// --- POOccurrence JSONL ---------------------------------------------------
void WriteOccurrences(std::ostream& out, const std::vector<POOccurrence>& occs,
                      const OutputMeta& meta);
std::vector<POOccurrence> ReadOccurrences(std::istream& in);

// --- pair frequency TSV: predicate \t object_head \t count ----------------
void WritePairFrequencies(std::ostream& out, const PairFrequencyTable& table,
                          const OutputMeta& meta);
PairFrequencyTable ReadPairFrequencies(std::istream& in);

// --- background statistics: "N_BS=<int>" then word \t sentence_freq ------
BackgroundStats ReadBackgroundStats(std::istream& in);

// --- salience table TSV: word \t freq \t score ----------------------------
void WriteSalienceTable(std::ostream& out, const SalienceTable& table,
                        const OutputMeta& meta);
SalienceTable ReadSalienceTable(std::istream& in);

// One word per line.
void WriteWordList(std::ostream& out, const std::set<std::string>& words,
                   const OutputMeta& meta);
std::set<std::string> ReadWordList(std::istream& in);

// --- MentionFeature JSONL -------------------------------------------------
// {mention_id, sentence_id, token_index, term, kind, embedding, mwp}
struct MentionFeatureFile {
  Eigen::Index d_emb = 0;
  size_t mwp_length = 0;
  std::vector<MentionFeature> mentions;
};
// Every record is validated against `expected_mwp_length` and the embedding
// dimension of the header (or of the first record when there is no header).
MentionFeatureFile ReadMentionFeatures(std::istream& in,
                                       size_t expected_mwp_length);
void WriteMentionFeatures(std::ostream& out,
                          const std::vector<MentionFeature>& mentions);

// --- sense dictionary JSON ------------------------------------------------
// {lemma: [{sense_id, definition, examples: [{text, target_index}]}]}
SenseDictionary ReadSenseDictionary(std::istream& in);

// --- sense assignment JSONL: {mention_id, lemma, sense_id, score} ---------
struct SenseAssignment {
  std::string mention_id;
  std::string lemma;
  std::string sense_id;
  std::optional<double> score;  // absent for dictionary fallbacks
};
void WriteSenseAssignments(std::ostream& out,
                           const std::vector<SenseAssignment>& rows,
                           const OutputMeta& meta);
std::vector<SenseAssignment> ReadSenseAssignments(std::istream& in);

// --- pair feature JSONL ---------------------------------------------------
// Header carries d_emb, d_pca_p, d_pca_o; records
// {predicate_sense, object_head, frequency, sentence_ids, h_p, h_o} with
// vectors stored as 32-bit floats.
void WritePairFeatures(std::ostream& out, const PairFeatureSet& set,
                       const OutputMeta& meta);
PairFeatureSet ReadPairFeatures(std::istream& in);

// Shortest decimal text that reads back as the same 32-bit float.
std::string FormatFloat32(double value);

// --- cluster labels -------------------------------------------------------
// Either one integer per line, or a JSON object {id: label}.
struct LabelFile {
  std::vector<std::string> ids;  // empty for the plain format
  std::vector<int> labels;
};
LabelFile ReadLabels(std::istream& in);

// 64-bit FNV-1a, rendered as 16 hex digits.
std::string Fnv1aHex(std::string_view data);

}  // namespace etype

#endif  // ETYPE_FORMATS_H_

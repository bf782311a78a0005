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

#include "etype/formats.h"

#include <charconv>
#include <cstdio>
#include <cmath>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "etype/errors.h"

#ifndef ETYPE_VERSION
#define ETYPE_VERSION "0.0.0"
#endif

namespace etype {

using nlohmann::json;

const char* ToolVersion() { return ETYPE_VERSION; }

namespace {

[[noreturn]] void Fail(long line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

json HeaderJson(const char* schema, const OutputMeta& meta) {
  return {{"schema", schema},
          {"schema_version", kSchemaVersion},
          {"tool_version", ToolVersion()},
          {"config_hash", meta.config_hash},
          {"seed", meta.seed}};
}

void WriteJsonHeader(std::ostream& out, json header) {
  out << json{{"_header", std::move(header)}}.dump() << '\n';
}

void WriteTsvHeader(std::ostream& out, const char* schema,
                    const OutputMeta& meta) {
  out << "# etype " << ToolVersion() << " schema=" << schema
      << " schema_version=" << kSchemaVersion
      << " config_hash=" << meta.config_hash << " seed=" << meta.seed << '\n';
}

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

// Calls `fn(record, line_number)` for every non-header JSON line. The header
// record, if present, is passed to `on_header`.
void ForEachJsonLine(std::istream& in,
                     const std::function<void(const json&, long)>& fn,
                     const std::function<void(const json&, long)>& on_header =
                         nullptr) {
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (IsBlank(line)) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      Fail(lineno, std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) Fail(lineno, "expected a JSON object");
    if (j.contains("_header")) {
      if (on_header) on_header(j["_header"], lineno);
      continue;
    }
    try {
      fn(j, lineno);
    } catch (const json::exception& e) {
      Fail(lineno, std::string("schema error: ") + e.what());
    }
  }
}

// Calls `fn(fields, line_number)` for every non-comment TSV line.
void ForEachTsvLine(
    std::istream& in,
    const std::function<void(const std::vector<std::string>&, long)>& fn) {
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (IsBlank(line) || line[0] == '#') continue;
    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
      const size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    fn(fields, lineno);
  }
}

long ParseLong(const std::string& s, long lineno, const char* what) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    Fail(lineno, std::string("bad ") + what + " '" + s + "'");
  }
  return v;
}

double ParseDouble(const std::string& s, long lineno, const char* what) {
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    Fail(lineno, std::string("bad ") + what + " '" + s + "'");
  }
  return v;
}

std::string FormatDouble(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void AppendFloatArray(std::string& out, const Eigen::VectorXd& v) {
  out += '[';
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += FormatFloat32(v(i));
  }
  out += ']';
}

Eigen::VectorXd ReadFloatArray(const json& j, long lineno, const char* what) {
  if (!j.is_array()) Fail(lineno, std::string(what) + " must be an array");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) Fail(lineno, std::string(what) + " must be numeric");
    v(static_cast<Eigen::Index>(i)) =
        static_cast<double>(static_cast<float>(j[i].get<double>()));
  }
  return v;
}

}  // namespace

std::string FormatFloat32(double value) {
  char buf[32];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), static_cast<float>(value));
  return std::string(buf, res.ptr);
}

std::string Fnv1aHex(std::string_view data) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------------------

namespace {

ParsedSentence SentenceFromJson(const json& j) {
  ParsedSentence s;
  s.sentence_id = j.at("sentence_id").get<std::string>();
  s.text = j.value("text", "");
  for (const json& t : j.at("tokens")) {
    Token tok;
    tok.index = t.at("index").get<int>();
    tok.text = t.at("text").get<std::string>();
    tok.lemma = t.at("lemma").get<std::string>();
    tok.pos = t.at("pos").get<std::string>();
    tok.dep_label = t.at("dep_label").get<std::string>();
    const json& head = t.at("head");
    if (head.is_null() || (head.is_string() && head == "ROOT")) {
      tok.head = kRootHead;
    } else if (head.is_number_integer()) {
      tok.head = head.get<int>();
      if (tok.head == tok.index) tok.head = kRootHead;
    } else {
      throw InputError("token " + std::to_string(tok.index) +
                       ": head must be an integer, null or \"ROOT\"");
    }
    s.tokens.push_back(std::move(tok));
  }
  ValidateSentence(s);
  return s;
}

}  // namespace

ParsedSentence ParseSentenceJson(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
    return SentenceFromJson(j);
  } catch (const json::exception& e) {
    throw InputError(std::string("parsed sentence: ") + e.what());
  }
}

std::vector<ParsedSentence> ReadParsedSentences(std::istream& in) {
  std::vector<ParsedSentence> out;
  ForEachJsonLine(in, [&](const json& j, long lineno) {
    try {
      out.push_back(SentenceFromJson(j));
    } catch (const InputError& e) {
      Fail(lineno, e.what());
    }
  });
  return out;
}

void WriteParsedSentence(std::ostream& out, const ParsedSentence& s) {
  json tokens = json::array();
  for (const Token& t : s.tokens) {
    tokens.push_back({{"index", t.index},
                      {"text", t.text},
                      {"lemma", t.lemma},
                      {"pos", t.pos},
                      {"dep_label", t.dep_label},
                      {"head", t.is_root() ? json("ROOT") : json(t.head)}});
  }
  out << json{{"sentence_id", s.sentence_id},
              {"text", s.text},
              {"tokens", tokens}}
             .dump()
      << '\n';
}

// ---------------------------------------------------------------------------

void WriteOccurrences(std::ostream& out, const std::vector<POOccurrence>& occs,
                      const OutputMeta& meta) {
  WriteJsonHeader(out, HeaderJson("etype.po_occurrence", meta));
  for (const POOccurrence& o : occs) {
    out << json{{"sentence_id", o.sentence_id},
                {"predicate_index", o.predicate_index},
                {"predicate_lemma", o.predicate_lemma},
                {"voice", VoiceName(o.voice)},
                {"object_head_index", o.object_head_index},
                {"object_head_lemma", o.object_head_lemma}}
               .dump()
        << '\n';
  }
}

std::vector<POOccurrence> ReadOccurrences(std::istream& in) {
  std::vector<POOccurrence> out;
  ForEachJsonLine(in, [&](const json& j, long lineno) {
    POOccurrence o;
    o.sentence_id = j.at("sentence_id").get<std::string>();
    o.predicate_index = j.at("predicate_index").get<int>();
    o.predicate_lemma = j.at("predicate_lemma").get<std::string>();
    const std::string voice = j.at("voice").get<std::string>();
    if (voice == "active") {
      o.voice = Voice::kActive;
    } else if (voice == "passive") {
      o.voice = Voice::kPassive;
    } else {
      Fail(lineno, "voice must be \"active\" or \"passive\"");
    }
    o.object_head_index = j.at("object_head_index").get<int>();
    o.object_head_lemma = j.at("object_head_lemma").get<std::string>();
    out.push_back(std::move(o));
  });
  return out;
}

// ---------------------------------------------------------------------------

void WritePairFrequencies(std::ostream& out, const PairFrequencyTable& table,
                          const OutputMeta& meta) {
  WriteTsvHeader(out, "pair_freq", meta);
  for (const auto& [key, count] : table) {
    out << key.first << '\t' << key.second << '\t' << count << '\n';
  }
}

PairFrequencyTable ReadPairFrequencies(std::istream& in) {
  PairFrequencyTable table;
  ForEachTsvLine(in, [&](const std::vector<std::string>& f, long lineno) {
    if (f.size() != 3) Fail(lineno, "expected predicate, object_head, count");
    const long count = ParseLong(f[2], lineno, "count");
    if (count < 0) Fail(lineno, "negative count");
    table[{f[0], f[1]}] += count;
  });
  return table;
}

BackgroundStats ReadBackgroundStats(std::istream& in) {
  BackgroundStats bg;
  bool have_total = false;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (IsBlank(line) || line[0] == '#') continue;
    if (!have_total) {
      if (line.rfind("N_BS=", 0) != 0) Fail(lineno, "expected N_BS=<int>");
      bg.n_sentences = ParseLong(line.substr(5), lineno, "N_BS");
      if (bg.n_sentences < 1) Fail(lineno, "N_BS must be positive");
      have_total = true;
      continue;
    }
    const size_t tab = line.find('\t');
    if (tab == std::string::npos) Fail(lineno, "expected word \\t frequency");
    const long f = ParseLong(line.substr(tab + 1), lineno, "frequency");
    if (f < 1 || f > bg.n_sentences) {
      Fail(lineno, "sentence frequency must lie in [1, N_BS]");
    }
    bg.sentence_freq[line.substr(0, tab)] = f;
  }
  if (!have_total) throw InputError("background stats: missing N_BS header");
  return bg;
}

void WriteSalienceTable(std::ostream& out, const SalienceTable& table,
                        const OutputMeta& meta) {
  WriteTsvHeader(out, "salience", meta);
  for (const SalienceEntry& e : table) {
    out << e.word << '\t' << e.freq << '\t' << FormatDouble(e.score) << '\n';
  }
}

SalienceTable ReadSalienceTable(std::istream& in) {
  SalienceTable table;
  ForEachTsvLine(in, [&](const std::vector<std::string>& f, long lineno) {
    if (f.size() != 3) Fail(lineno, "expected word, freq, score");
    table.push_back({f[0], ParseLong(f[1], lineno, "freq"),
                     ParseDouble(f[2], lineno, "score")});
  });
  return table;
}

void WriteWordList(std::ostream& out, const std::set<std::string>& words,
                   const OutputMeta& meta) {
  WriteTsvHeader(out, "word_list", meta);
  for (const std::string& w : words) out << w << '\n';
}

std::set<std::string> ReadWordList(std::istream& in) {
  std::set<std::string> words;
  ForEachTsvLine(in, [&](const std::vector<std::string>& f, long) {
    words.insert(f[0]);
  });
  return words;
}

// ---------------------------------------------------------------------------

MentionFeatureFile ReadMentionFeatures(std::istream& in,
                                       size_t expected_mwp_length) {
  MentionFeatureFile file;
  file.mwp_length = expected_mwp_length;
  ForEachJsonLine(
      in,
      [&](const json& j, long lineno) {
        MentionFeature m;
        m.mention_id = j.at("mention_id").get<std::string>();
        m.sentence_id = j.value("sentence_id", "");
        m.token_index = j.value("token_index", 0);
        m.term = j.at("term").get<std::string>();
        const auto kind = ParseMentionKind(j.at("kind").get<std::string>());
        if (!kind) Fail(lineno, "unknown mention kind");
        m.kind = *kind;
        m.embedding = ReadFloatArray(j.at("embedding"), lineno, "embedding");
        m.mwp = j.at("mwp").get<RankedList>();
        if (file.d_emb == 0) file.d_emb = m.embedding.size();
        try {
          ValidateMention(m, file.d_emb, expected_mwp_length);
        } catch (const InputError& e) {
          Fail(lineno, e.what());
        }
        file.mentions.push_back(std::move(m));
      },
      [&](const json& h, long lineno) {
        file.d_emb = h.value("d_emb", 0);
        const size_t l = h.value("mwp_length", expected_mwp_length);
        if (l != expected_mwp_length) {
          Fail(lineno, "header mwp_length " + std::to_string(l) +
                           " differs from configured " +
                           std::to_string(expected_mwp_length));
        }
      });
  return file;
}

void WriteMentionFeatures(std::ostream& out,
                          const std::vector<MentionFeature>& mentions) {
  json header = {{"schema", "etype.mention_feature"},
                 {"schema_version", kSchemaVersion},
                 {"d_emb", mentions.empty() ? 0 : mentions[0].embedding.size()},
                 {"mwp_length", mentions.empty() ? 0 : mentions[0].mwp.size()}};
  WriteJsonHeader(out, header);
  for (const MentionFeature& m : mentions) {
    json j = {{"mention_id", m.mention_id},
              {"sentence_id", m.sentence_id},
              {"token_index", m.token_index},
              {"term", m.term},
              {"kind", std::string(MentionKindName(m.kind))},
              {"mwp", m.mwp}};
    std::string line = j.dump();
    line.pop_back();  // reopen the object to append the float array
    line += ",\"embedding\":";
    AppendFloatArray(line, m.embedding);
    line += '}';
    out << line << '\n';
  }
}

// ---------------------------------------------------------------------------

SenseDictionary ReadSenseDictionary(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("sense dictionary: malformed JSON: ") +
                     e.what());
  }
  if (!j.is_object()) throw InputError("sense dictionary must be an object");
  SenseDictionary dict;
  try {
    for (const auto& [lemma, senses] : j.items()) {
      std::vector<SenseEntry>& entries = dict[lemma];
      for (const json& s : senses) {
        SenseEntry e;
        e.lemma = lemma;
        e.sense_id = s.at("sense_id").get<std::string>();
        e.definition = s.value("definition", "");
        for (const json& ex : s.at("examples")) {
          e.examples.push_back(
              {ex.at("text").get<std::string>(), ex.at("target_index").get<int>()});
        }
        entries.push_back(std::move(e));
      }
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("sense dictionary: ") + e.what());
  }
  return dict;
}

void WriteSenseAssignments(std::ostream& out,
                           const std::vector<SenseAssignment>& rows,
                           const OutputMeta& meta) {
  WriteJsonHeader(out, HeaderJson("etype.sense_assignment", meta));
  for (const SenseAssignment& r : rows) {
    out << json{{"mention_id", r.mention_id},
                {"lemma", r.lemma},
                {"sense_id", r.sense_id},
                {"score", r.score ? json(*r.score) : json(nullptr)}}
               .dump()
        << '\n';
  }
}

std::vector<SenseAssignment> ReadSenseAssignments(std::istream& in) {
  std::vector<SenseAssignment> out;
  ForEachJsonLine(in, [&](const json& j, long) {
    SenseAssignment r;
    r.mention_id = j.at("mention_id").get<std::string>();
    r.lemma = j.at("lemma").get<std::string>();
    r.sense_id = j.at("sense_id").get<std::string>();
    if (!j.at("score").is_null()) r.score = j.at("score").get<double>();
    out.push_back(std::move(r));
  });
  return out;
}

// ---------------------------------------------------------------------------

void WritePairFeatures(std::ostream& out, const PairFeatureSet& set,
                       const OutputMeta& meta) {
  json header = HeaderJson("etype.pair_feature", meta);
  header["d_emb"] = set.d_emb;
  header["d_pca_p"] = set.d_pca_p;
  header["d_pca_o"] = set.d_pca_o;
  WriteJsonHeader(out, header);
  for (const POPair& p : set.pairs) {
    json j = {{"predicate_sense", p.predicate_sense},
              {"object_head", p.object_head},
              {"frequency", p.frequency},
              {"sentence_ids", p.sentence_ids}};
    std::string line = j.dump();
    line.pop_back();
    line += ",\"h_p\":";
    AppendFloatArray(line, p.h_p);
    line += ",\"h_o\":";
    AppendFloatArray(line, p.h_o);
    line += '}';
    out << line << '\n';
  }
}

PairFeatureSet ReadPairFeatures(std::istream& in) {
  PairFeatureSet set;
  bool have_header = false;
  ForEachJsonLine(
      in,
      [&](const json& j, long lineno) {
        POPair p;
        p.predicate_sense = j.at("predicate_sense").get<std::string>();
        p.object_head = j.at("object_head").get<std::string>();
        p.frequency = j.at("frequency").get<long>();
        if (p.frequency < 1) Fail(lineno, "frequency must be positive");
        p.sentence_ids =
            j.value("sentence_ids", std::vector<std::string>{});
        p.h_p = ReadFloatArray(j.at("h_p"), lineno, "h_p");
        p.h_o = ReadFloatArray(j.at("h_o"), lineno, "h_o");
        if (!p.h_p.allFinite() || !p.h_o.allFinite()) {
          Fail(lineno, "non-finite feature value");
        }
        if (have_header && (p.h_p.size() != set.d_emb + set.d_pca_p ||
                            p.h_o.size() != set.d_emb + set.d_pca_o)) {
          Fail(lineno, "feature length disagrees with header dimensions");
        }
        if (!set.pairs.empty() &&
            (p.h_p.size() != set.pairs[0].h_p.size() ||
             p.h_o.size() != set.pairs[0].h_o.size())) {
          Fail(lineno, "feature length differs from earlier records");
        }
        set.pairs.push_back(std::move(p));
      },
      [&](const json& h, long) {
        have_header = true;
        set.d_emb = h.at("d_emb").get<Eigen::Index>();
        set.d_pca_p = h.at("d_pca_p").get<Eigen::Index>();
        set.d_pca_o = h.at("d_pca_o").get<Eigen::Index>();
      });
  return set;
}

// ---------------------------------------------------------------------------

LabelFile ReadLabels(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  LabelFile file;
  const size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw InputError(std::string("labels: malformed JSON: ") + e.what());
    }
    for (const auto& [id, label] : j.items()) {
      if (!label.is_number_integer() || label.get<int>() < 0) {
        throw InputError("labels: label of '" + id +
                         "' must be a non-negative integer");
      }
      file.ids.push_back(id);
      file.labels.push_back(label.get<int>());
    }
    return file;
  }
  std::istringstream lines(text);
  ForEachTsvLine(lines, [&](const std::vector<std::string>& f, long lineno) {
    const long v = ParseLong(f[0], lineno, "label");
    if (v < 0) Fail(lineno, "labels must be non-negative");
    file.labels.push_back(static_cast<int>(v));
  });
  return file;
}

}  // namespace etype

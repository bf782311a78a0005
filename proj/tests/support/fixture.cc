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

#include "fixture.h"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace etype::testing {

std::vector<POOccurrence> ReadGoldOccurrences(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<POOccurrence> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    POOccurrence o;
    std::string voice;
    fields >> o.sentence_id >> o.predicate_index >> o.predicate_lemma >>
        voice >> o.object_head_index >> o.object_head_lemma;
    if (!fields) throw std::runtime_error("bad gold line: " + line);
    o.voice = voice == "passive" ? Voice::kPassive : Voice::kActive;
    out.push_back(o);
  }
  return out;
}

}  // namespace etype::testing

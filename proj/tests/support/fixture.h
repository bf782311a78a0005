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

#ifndef ETYPE_TESTS_SUPPORT_FIXTURE_H_
#define ETYPE_TESTS_SUPPORT_FIXTURE_H_

#include <filesystem>
#include <vector>

#include "etype/extraction.h"

namespace etype::testing {

// Reads the hand-annotated occurrence list (TSV, '#' comments).
std::vector<POOccurrence> ReadGoldOccurrences(
    const std::filesystem::path& path);

}  // namespace etype::testing

#endif  // ETYPE_TESTS_SUPPORT_FIXTURE_H_

// Copyright 2026 The Acro Authors
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

#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "acro/predictions.hpp"

namespace acro {

enum class MergePolicy {
  UnionDedupe,  // default: union acronyms, primary wins on overlap
  PrimaryWins,  // ignore the secondary set entirely
  ConcatRaw,    // literal concatenation, duplicates and all
};

MergePolicy parse_merge_policy(std::string_view name);
std::string_view merge_policy_name(MergePolicy policy);

// Combines two per-sample prediction sets. Long forms come from the
// primary set only (the secondary method handles acronyms only), except
// under ConcatRaw which keeps everything verbatim. Throws when the
// sample ids differ.
PredictionSet merge(const PredictionSet& primary,
                    const PredictionSet& secondary, MergePolicy policy);

// Trims enclosing brackets, quotes, commas and periods off acronym
// spans; spans that shrink to nothing are dropped. Never grows a span.
PredictionSet strip_enclosures(const PredictionSet& pred,
                               std::string_view text);

// Lowercased function words per language code; "en" is always present.
struct StopwordList {
  std::map<std::string, std::set<std::string>> by_language;

  static const StopwordList& builtin();
  static StopwordList from_file(const std::filesystem::path& path,
                                const std::string& language = "en");

  // Unknown languages fall back to English with a warning.
  const std::set<std::string>& lookup(const std::string& language,
                                      Diagnostics* diag = nullptr) const;
};

// Removes long-form spans whose tokens are all stopwords; spans with
// any non-stopword token survive intact.
PredictionSet drop_stopword_long_forms(const PredictionSet& pred,
                                       std::string_view text,
                                       const StopwordList& stopwords,
                                       const std::string& language,
                                       Diagnostics* diag = nullptr);

}  // namespace acro

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
#include <string>
#include <utility>
#include <vector>

#include "acro/corpus.hpp"

namespace acro {

// System output for one sample. pair_links ties acronym_spans[i] to
// long_form_spans[j] when a method knows which long form belongs to
// which acronym.
struct PredictionSet {
  std::string sample_id;
  std::vector<Span> acronym_spans;
  std::vector<Span> long_form_spans;
  std::vector<std::pair<std::size_t, std::size_t>> pair_links;

  bool operator==(const PredictionSet&) const = default;
};

// Prediction JSON mirrors the dataset schema minus gold-only metadata:
// array of {id, acronyms, long_forms[, pairs]}.
std::vector<PredictionSet> parse_predictions(std::string_view json_text);
std::vector<PredictionSet> read_predictions(const std::filesystem::path& path);
std::string predictions_to_json(const std::vector<PredictionSet>& preds);
void write_predictions(const std::filesystem::path& path,
                       const std::vector<PredictionSet>& preds);

}  // namespace acro

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

#include <map>
#include <string>
#include <vector>

#include "acro/corpus.hpp"
#include "acro/predictions.hpp"

namespace acro {

// Exact-span matching only: a prediction is a true positive iff an
// identical (start, end) span exists in the same sample's gold list.
struct ClassScore {
  std::size_t tp = 0;
  std::size_t n_pred = 0;
  std::size_t n_gold = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  bool operator==(const ClassScore&) const = default;
};

enum class Aggregate {
  MacroClass,  // micro-pooled counts per class, macro over AN/LF
  PerSample,   // per-sample F1 averaged over samples, then macro
};

Aggregate parse_aggregate(std::string_view name);
std::string_view aggregate_name(Aggregate aggregate);

struct LanguageScore {
  ClassScore an;
  ClassScore lf;
  double macro_f1 = 0.0;

  bool operator==(const LanguageScore&) const = default;
};

struct EvalReport {
  ClassScore an;
  ClassScore lf;
  double macro_f1 = 0.0;
  Aggregate aggregate = Aggregate::MacroClass;
  // Duplicate predicted spans are removed before counting so they
  // cannot pad the precision denominator; the count is surfaced here.
  std::size_t duplicates_removed = 0;
  std::map<std::string, LanguageScore> per_language;  // optional

  bool operator==(const EvalReport&) const = default;
};

struct ScoreOptions {
  Aggregate aggregate = Aggregate::MacroClass;
  bool per_language = false;
};

// Scores predictions against gold samples. Samples without a prediction
// count as empty predictions; predictions for unknown sample ids are an
// error listing the offending ids.
EvalReport score(const std::vector<Sample>& gold,
                 const std::vector<PredictionSet>& pred,
                 const ScoreOptions& options = {});

enum class ReportFormat { Plain, Json };

// Renders per-class and macro rows with 4 decimal places. The JSON form
// parses back via eval_from_json without loss.
std::string report(const EvalReport& eval, ReportFormat format);
EvalReport eval_from_json(std::string_view json_text);

}  // namespace acro

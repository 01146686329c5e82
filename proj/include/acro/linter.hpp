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
#include "acro/rules.hpp"

namespace acro {

// Annotation-noise rules:
//   L001  span misalignment: a boundary falls strictly inside a token,
//         or the span is out of bounds entirely
//   L002  over-annotation: acronym text starts or ends with a bracket
//         or quote character
//   L003  incomplete long form: the enhanced matcher finds a long form
//         strictly containing the annotated one
//   L004  suspect pair: the acronym's letters show no alignment with the
//         long form's word-initial letters beyond the leading letter
//   L005  duplicate or overlapping gold spans within one field
enum class LintRule { L001, L002, L003, L004, L005 };

std::string_view lint_rule_name(LintRule rule);

struct LintFinding {
  std::string sample_id;
  LintRule rule;
  Span span;
  std::string message;

  auto operator<=>(const LintFinding&) const = default;
};

struct LintConfig {
  EnhancedConfig enhanced;  // drives the L003 suggestion matcher
};

std::vector<LintFinding> lint(const Sample& sample,
                              const LintConfig& config = {});

struct LintSummary {
  std::map<LintRule, std::size_t> counts;
  std::size_t flagged_samples = 0;
  std::size_t total_samples = 0;
  std::vector<LintFinding> findings;  // ordered by (sample_id, rule, span)
};

LintSummary lint_corpus(const std::vector<Sample>& samples,
                        const LintConfig& config = {});

// Trims bracket/quote characters off gold acronym spans (the L002 fix)
// and returns a cleaned copy; the input is never modified.
std::vector<Sample> fix_l002(const std::vector<Sample>& samples,
                             Diagnostics* diag = nullptr);

std::string findings_to_jsonl(const std::vector<LintFinding>& findings);

}  // namespace acro

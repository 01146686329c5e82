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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acro/corpus.hpp"
#include "acro/predictions.hpp"

namespace acro {

// A parenthesized token the baseline rule accepts as an acronym.
struct AcronymCandidate {
  Span span;           // the token, excluding the parentheses
  std::string form;
  std::size_t uppercase_count = 0;
  double uppercase_ratio = 0.0;  // uppercase letters / letters
  std::size_t token_index = 0;   // position of the token in the sequence
};

// The organizers' rule: a single word between "(" and ")" whose letters
// are more than 60% uppercase. Tokens without letters never qualify.
std::vector<AcronymCandidate> extract_candidates(
    std::string_view text, const std::vector<Token>& tokens);

// Sliding-window initial matching: the candidate's k uppercase letters
// against the first characters of the k words before the "(" (after the
// ")" when that fails). Case-insensitive.
std::optional<Span> match_long_form_baseline(const AcronymCandidate& candidate,
                                             const std::vector<Token>& tokens);

struct EnhancedConfig {
  std::size_t min_letters = 2;
  double min_letter_fraction = 0.5;
  // Window is min(|s| + extra_words, window_factor * |s|) words,
  // |s| counted in characters of the candidate.
  std::size_t extra_words = 5;
  std::size_t window_factor = 2;
};

// Character back-matching: candidate letters are matched right-to-left
// against the text before the parenthesis, the first letter pinned to a
// word start. Handles stopword-skipping long forms and acronyms that
// take several letters from one word. Acronyms are emitted even when no
// long form is found; matched pairs carry a pair link.
PredictionSet extract_enhanced(std::string_view text,
                               const std::vector<Token>& tokens,
                               const EnhancedConfig& config = {});

// Full baseline over one text: every candidate plus its matched window,
// with pair links for the matches.
PredictionSet extract_baseline(std::string_view text,
                               const std::vector<Token>& tokens);

}  // namespace acro

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

// Hand-built extractor fixtures. Every expected value below is forced
// by the stated rules and was derived by hand, including the negative
// outcomes; the tests treat any deviation as a failure.

#pragma once

#include <string>
#include <vector>

namespace acro::testing {

struct RuleCase {
  std::string text;
  // Baseline: (candidate form, matched window text; "" when the window
  // match fails). An empty vector means no candidate is emitted.
  std::vector<std::pair<std::string, std::string>> baseline;
  // Enhanced: (acronym form, back-matched long form; "" when only the
  // acronym is found).
  std::vector<std::pair<std::string, std::string>> enhanced;
};

inline const std::vector<RuleCase>& rule_cases() {
  static const std::vector<RuleCase> cases = {
      // 1: uppercase ratio 4/5 = 0.8, but k=4 window words are missing
      {"ranging (LiDAR)", {{"LiDAR", ""}}, {{"LiDAR", ""}}},
      // 2: no letters uppercase, ratio 0
      {"(e.g)", {}, {}},
      // 3: ratio 2/6 kills the baseline; back-matching recovers it
      {"maximum entropy (MaxEnt)", {}, {{"MaxEnt", "maximum entropy"}}},
      // 4: the textbook case works in both modes
      {"natural language processing (NLP)",
       {{"NLP", "natural language processing"}},
       {{"NLP", "natural language processing"}}},
      // 5: window mismatch (N vs "used")
      {"we used the tool (NLP)", {{"NLP", ""}}, {{"NLP", ""}}},
      // 6: the stopword "of" contributes no initial; enhanced skips it
      {"selective dissemination of information (SDI)",
       {{"SDI", ""}},
       {{"SDI", "selective dissemination of information"}}},
      // 7: two letters from one word defeat the window rule
      {"subsequence kernel (SSK)",
       {{"SSK", ""}},
       {{"SSK", "subsequence kernel"}}},
      // 8: hyphenated words on both sides
      {"Communist Party of the Philippines-New Peoples Army-National "
       "Democratic Front (CPPNPA-NDF)",
       {{"CPPNPA-NDF", ""}},
       {{"CPPNPA-NDF",
         "Communist Party of the Philippines-New Peoples Army-National "
         "Democratic Front"}}},
      // 9: nothing before the parenthesis, too few words after
      {"(CATiB) treebank segmentation", {{"CATiB", ""}}, {{"CATiB", ""}}},
      // 10: forward window succeeds when backward has nothing
      {"(NLP) natural language processing",
       {{"NLP", "natural language processing"}},
       {{"NLP", ""}}},
      // 11: one letter, ratio 1.0; enhanced requires two letters
      {"strategic bomber (B-52)", {{"B-52", "bomber"}}, {}},
      // 12: 2/3 letters uppercase is just above the 60% bar
      {"alpha beta (ABc)", {{"ABc", "alpha beta"}}, {{"ABc", ""}}},
      // 13: 2/4 = 0.5 fails the baseline but passes the relaxed rule
      {"alpha beta (ABcd)", {}, {{"ABcd", ""}}},
      // 14: 3/5 = 0.6 is not strictly above 0.6
      {"any text (AbCdE)", {}, {{"AbCdE", ""}}},
      // 15: no letters at all
      {"see item (123)", {}, {}},
      // 16: single letter is fine for the baseline
      {"xylophone (X)", {{"X", "xylophone"}}, {}},
      // 17: the digit does not enter the ratio; the window fails
      {"three em (3M)", {{"3M", ""}}, {}},
      // 18: multi-word parentheticals are skipped
      {"World Health Organization (WHO was founded)", {}, {}},
      // 19/20: unbalanced parentheses yield nothing
      {"we tested (ABC without closing", {}, {}},
      {"we tested ABC) without opening", {}, {}},
      // 21: the inner pair of a nested group still qualifies
      {"natural language processing ((NLP))",
       {{"NLP", "natural language processing"}},
       {{"NLP", "natural language processing"}}},
      // 22: window words may themselves be single letters
      {"hepatitis C virus (HCV)",
       {{"HCV", "hepatitis C virus"}},
       {{"HCV", "hepatitis C virus"}}},
      // 23: k=5 uppercase letters, only two words available
      {"term frequency (TF-IDF)", {{"TF-IDF", ""}}, {{"TF-IDF", ""}}},
      // 24: the baseline happily matches stopword windows
      {"of the (OT)", {{"OT", "of the"}}, {{"OT", "of the"}}},
      // 25: backward window is preferred when both sides match
      {"usual normal (UN) universal notation",
       {{"UN", "usual normal"}},
       {{"UN", "usual normal"}}},
      // 26: non-ASCII initials compare case-insensitively
      {"přirozený jazyk (PJ)",
       {{"PJ", "přirozený jazyk"}},
       {{"PJ", "přirozený jazyk"}}},
      // 27: "e.g" keeps its internal period and defeats the window
      {"we cite e.g. (EG) here", {{"EG", ""}}, {{"EG", "e.g"}}},
      // 28: letters spread across hyphenated window words
      {"good old-fashioned AI (GOFAI)",
       {{"GOFAI", ""}},
       {{"GOFAI", "good old-fashioned AI"}}},
      // 29: word-internal symbols survive tokenization
      {"american telephone telegraph (AT&T)",
       {{"AT&T", "american telephone telegraph"}},
       {{"AT&T", "american telephone telegraph"}}},
      // 30: lowercase lead-in letters count toward k only if uppercase
      {"internet operating system (iOS)",
       {{"iOS", "operating system"}},
       {{"iOS", "internet operating system"}}},
  };
  return cases;
}

}  // namespace acro::testing

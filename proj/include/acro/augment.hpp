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

#include <string>
#include <vector>

#include "acro/corpus.hpp"

namespace acro {

// One glossary entry: short form plus its spelled-out long form.
struct AbbrevEntry {
  std::string short_form;
  std::string long_form;

  bool operator==(const AbbrevEntry&) const = default;
};

struct ArticleRecord {
  std::string article_id;
  std::vector<AbbrevEntry> abbrevs;
  std::vector<std::string> body_paragraphs;  // tags stripped, ws normalized
};

// Reads a JATS-style article: abbreviations come from a glossary /
// definition-list whose title contains "abbreviation" (any case); body
// paragraphs are the <p> elements under <body> with markup stripped.
// Entries with an empty side or short == long are dropped with a
// warning. Throws ParseError on malformed XML.
ArticleRecord parse_article(const std::string& xml_text,
                            Diagnostics* diag = nullptr);

// Rule-based splitter: a sentence ends after [.!?] followed by
// whitespace and an uppercase letter or "(", protected by a fixed
// exception list ("Fig.", "et al.", "e.g.", "i.e.", single initials).
// Spans tile the paragraph's non-whitespace extent.
std::vector<Span> split_sentences(std::string_view paragraph);

struct HarvestOptions {
  std::size_t min_pairs = 1;  // short+long co-occurrences required
};

// Emits one Sample per sentence that contains at least min_pairs
// entries with both forms present (short form matched case-sensitively,
// long form case-insensitively, both on token boundaries). All
// occurrences of any entry are annotated in an emitted sample.
// Overlapping matches resolve longest-first. Sample ids are
// "<article_id>-<sentence ordinal>"; output order is deterministic.
std::vector<Sample> harvest(const ArticleRecord& article,
                            const HarvestOptions& options = {},
                            Diagnostics* diag = nullptr);

}  // namespace acro

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

#include <algorithm>
#include <compare>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "acro/error.hpp"

namespace acro {

// Half-open character interval. Offsets count Unicode scalar values,
// never bytes, so they are stable across the task's scripts.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start; }
  bool contains(const Span& other) const {
    return other.start >= start && other.end <= end;
  }
  bool overlaps(const Span& other) const {
    return std::max(start, other.start) < std::min(end, other.end);
  }
  auto operator<=>(const Span&) const = default;
};

// One dataset instance: a text with gold acronym and long-form regions.
struct Sample {
  std::string id;
  std::string text;  // UTF-8
  std::vector<Span> acronym_spans;
  std::vector<Span> long_form_spans;
  std::string language;  // optional language code, may be empty

  bool operator==(const Sample&) const = default;
};

struct Token {
  std::string form;  // UTF-8, never contains whitespace
  Span span;

  bool operator==(const Token&) const = default;
};

enum class Tag { O = 0, B_AN = 1, I_AN = 2, B_LF = 3, I_LF = 4 };
inline constexpr std::size_t kNumTags = 5;

std::string_view tag_name(Tag tag);
// Throws ParseError on anything outside the five-tag set.
Tag parse_tag(std::string_view name);

struct TaggedSequence {
  std::string sample_id;
  std::vector<Token> tokens;
  std::vector<Tag> tags;

  bool operator==(const TaggedSequence&) const = default;
};

// Extracts the UTF-8 slice addressed by a code-point span.
std::string slice(std::string_view text, Span span);

// Whitespace split followed by peeling leading/trailing punctuation
// (Unicode categories P and S) into single-character tokens, one layer
// at a time. Word-internal punctuation stays inside the token, so
// "CPPNPA-NDF" and "don't" survive intact.
std::vector<Token> tokenize(std::string_view text);

struct BioOptions {
  // When a token sits inside both an acronym and a long-form span,
  // the conversion fails unless this is set; then the acronym wins.
  bool acronym_wins = false;
};

// Projects gold spans onto tokens. Tokens partially overlapping a span
// are treated as inside it and a warning is recorded.
TaggedSequence to_bio(const Sample& sample, const BioOptions& options = {},
                      Diagnostics* diag = nullptr);

// Maximal B-X (I-X)* runs become spans. Tags are repaired first, so
// this never fails. Returns (acronym_spans, long_form_spans).
std::pair<std::vector<Span>, std::vector<Span>> from_bio(
    const TaggedSequence& seq);

// Rewrites any I-X that does not follow B-X/I-X to B-X.
std::vector<Tag> repair_bio(std::vector<Tag> tags);
bool is_valid_bio(const std::vector<Tag>& tags);

// Two-column CoNLL-style files: "# id = <sample_id>" header, one
// "form<TAB>tag" line per token, blank line after each sequence.
// The format carries no offsets; reading synthesizes the canonical
// single-space token layout.
void write_bio_file(const std::filesystem::path& path,
                    const std::vector<TaggedSequence>& seqs);
std::string write_bio_string(const std::vector<TaggedSequence>& seqs);
std::vector<TaggedSequence> read_bio_file(const std::filesystem::path& path);
std::vector<TaggedSequence> read_bio_string(std::string_view content,
                                            std::string_view source = "<string>");

// Maps canonical dataset keys onto whatever the input file uses.
struct FieldMap {
  std::string id = "id";
  std::string text = "text";
  std::string acronyms = "acronyms";
  std::string long_forms = "long_forms";
  std::string language = "language";

  // Parses "id=ID,acronyms=short" style remappings.
  static FieldMap parse(std::string_view mapping);
};

struct ParseOptions {
  FieldMap fields;
  // Lint wants to see broken data; everything else wants it rejected.
  bool validate = true;
};

// Parses the dataset JSON schema (array of {id, text, acronyms,
// long_forms[, language]} with [start, end) span pairs). Duplicate
// spans within a field are dropped with a warning.
std::vector<Sample> parse_dataset(std::string_view json_text,
                                  const ParseOptions& options = {},
                                  Diagnostics* diag = nullptr);
std::vector<Sample> read_dataset(const std::filesystem::path& path,
                                 const ParseOptions& options = {},
                                 Diagnostics* diag = nullptr);
std::string dataset_to_json(const std::vector<Sample>& samples);
void write_dataset(const std::filesystem::path& path,
                   const std::vector<Sample>& samples);

}  // namespace acro

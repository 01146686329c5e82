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

#include "acro/corpus.hpp"

#include <algorithm>
#include <optional>

#include "acro/unicode.hpp"

namespace acro {

namespace {

constexpr std::size_t kNoOwner = static_cast<std::size_t>(-1);

std::string span_str(Span span) {
  return "[" + std::to_string(span.start) + "," + std::to_string(span.end) +
         ")";
}

Token make_token(const std::u32string& cps, std::size_t begin,
                 std::size_t end) {
  return Token{uni::encode_utf8(std::u32string_view(cps).substr(begin, end - begin)),
               Span{begin, end}};
}

// Peels punctuation off both ends of a whitespace-delimited chunk,
// emitting one single-character token per peeled layer.
void emit_chunk(const std::u32string& cps, std::size_t begin, std::size_t end,
                std::vector<Token>& out) {
  std::vector<Token> trailing;
  while (begin < end) {
    if (uni::is_punct_or_symbol(cps[begin])) {
      out.push_back(make_token(cps, begin, begin + 1));
      ++begin;
    } else if (uni::is_punct_or_symbol(cps[end - 1])) {
      trailing.push_back(make_token(cps, end - 1, end));
      --end;
    } else {
      break;
    }
  }
  if (begin < end) out.push_back(make_token(cps, begin, end));
  out.insert(out.end(), trailing.rbegin(), trailing.rend());
}

// Owner of each token within one span field: index of the first span
// (in (start, end) order) covering the token, or kNoOwner.
std::vector<std::size_t> assign_owners(const std::vector<Token>& tokens,
                                       std::vector<Span> spans,
                                       const std::string& sample_id,
                                       std::string_view field,
                                       Diagnostics* diag) {
  std::sort(spans.begin(), spans.end());
  std::vector<std::size_t> owners(tokens.size(), kNoOwner);
  for (std::size_t ti = 0; ti < tokens.size(); ++ti) {
    const Span& t = tokens[ti].span;
    for (std::size_t si = 0; si < spans.size(); ++si) {
      if (!spans[si].overlaps(t)) continue;
      if (!spans[si].contains(t)) {
        warn(diag, "sample '" + sample_id + "': " + std::string(field) +
                       " span " + span_str(spans[si]) +
                       " partially overlaps token '" + tokens[ti].form +
                       "' " + span_str(t) + "; treating token as inside");
      }
      owners[ti] = si;
      break;
    }
  }
  return owners;
}

}  // namespace

std::string_view tag_name(Tag tag) {
  switch (tag) {
    case Tag::O: return "O";
    case Tag::B_AN: return "B-AN";
    case Tag::I_AN: return "I-AN";
    case Tag::B_LF: return "B-LF";
    case Tag::I_LF: return "I-LF";
  }
  return "O";
}

Tag parse_tag(std::string_view name) {
  if (name == "O") return Tag::O;
  if (name == "B-AN") return Tag::B_AN;
  if (name == "I-AN") return Tag::I_AN;
  if (name == "B-LF") return Tag::B_LF;
  if (name == "I-LF") return Tag::I_LF;
  throw ParseError("unknown tag '" + std::string(name) + "'");
}

std::string slice(std::string_view text, Span span) {
  std::u32string cps = uni::decode_utf8(text);
  if (span.end > cps.size() || span.start > span.end)
    throw ValidationError("span " + span_str(span) +
                          " out of bounds (text length " +
                          std::to_string(cps.size()) + ")");
  return uni::encode_utf8(
      std::u32string_view(cps).substr(span.start, span.size()));
}

std::vector<Token> tokenize(std::string_view text) {
  const std::u32string cps = uni::decode_utf8(text);
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = cps.size();
  while (i < n) {
    if (uni::is_space(cps[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && !uni::is_space(cps[j])) ++j;
    emit_chunk(cps, i, j, tokens);
    i = j;
  }
  return tokens;
}

TaggedSequence to_bio(const Sample& sample, const BioOptions& options,
                      Diagnostics* diag) {
  const std::size_t text_len = uni::length(sample.text);
  for (const auto* field : {&sample.acronym_spans, &sample.long_form_spans}) {
    for (const Span& s : *field) {
      if (s.start >= s.end || s.end > text_len)
        throw ValidationError("sample '" + sample.id + "': span " +
                              span_str(s) + " out of bounds (text length " +
                              std::to_string(text_len) + ")");
    }
  }

  TaggedSequence seq;
  seq.sample_id = sample.id;
  seq.tokens = tokenize(sample.text);

  std::vector<std::size_t> an_owner = assign_owners(
      seq.tokens, sample.acronym_spans, sample.id, "acronym", diag);
  std::vector<std::size_t> lf_owner = assign_owners(
      seq.tokens, sample.long_form_spans, sample.id, "long-form", diag);

  for (std::size_t i = 0; i < seq.tokens.size(); ++i) {
    if (an_owner[i] != kNoOwner && lf_owner[i] != kNoOwner) {
      if (!options.acronym_wins)
        throw ValidationError(
            "sample '" + sample.id + "': acronym and long-form spans overlap "
            "token '" + seq.tokens[i].form + "' " +
            span_str(seq.tokens[i].span) + " (rerun with --force to let the "
            "acronym win)");
      warn(diag, "sample '" + sample.id + "': acronym/long-form conflict on "
                     "token '" + seq.tokens[i].form + "'; acronym wins");
      lf_owner[i] = kNoOwner;
    }
  }

  seq.tags.resize(seq.tokens.size(), Tag::O);
  for (std::size_t i = 0; i < seq.tokens.size(); ++i) {
    if (an_owner[i] != kNoOwner) {
      const bool begin = i == 0 || an_owner[i - 1] != an_owner[i];
      seq.tags[i] = begin ? Tag::B_AN : Tag::I_AN;
    } else if (lf_owner[i] != kNoOwner) {
      const bool begin = i == 0 || lf_owner[i - 1] != lf_owner[i];
      seq.tags[i] = begin ? Tag::B_LF : Tag::I_LF;
    }
  }
  return seq;
}

std::pair<std::vector<Span>, std::vector<Span>> from_bio(
    const TaggedSequence& seq) {
  std::vector<Tag> tags = repair_bio(seq.tags);
  std::vector<Span> acronyms;
  std::vector<Span> long_forms;
  std::size_t i = 0;
  while (i < tags.size()) {
    if (tags[i] == Tag::B_AN || tags[i] == Tag::B_LF) {
      const bool an = tags[i] == Tag::B_AN;
      const Tag inside = an ? Tag::I_AN : Tag::I_LF;
      std::size_t j = i + 1;
      while (j < tags.size() && tags[j] == inside) ++j;
      Span span{seq.tokens[i].span.start, seq.tokens[j - 1].span.end};
      (an ? acronyms : long_forms).push_back(span);
      i = j;
    } else {
      ++i;
    }
  }
  return {std::move(acronyms), std::move(long_forms)};
}

std::vector<Tag> repair_bio(std::vector<Tag> tags) {
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (tags[i] == Tag::I_AN &&
        (i == 0 || (tags[i - 1] != Tag::B_AN && tags[i - 1] != Tag::I_AN)))
      tags[i] = Tag::B_AN;
    if (tags[i] == Tag::I_LF &&
        (i == 0 || (tags[i - 1] != Tag::B_LF && tags[i - 1] != Tag::I_LF)))
      tags[i] = Tag::B_LF;
  }
  return tags;
}

bool is_valid_bio(const std::vector<Tag>& tags) {
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (tags[i] == Tag::I_AN &&
        (i == 0 || (tags[i - 1] != Tag::B_AN && tags[i - 1] != Tag::I_AN)))
      return false;
    if (tags[i] == Tag::I_LF &&
        (i == 0 || (tags[i - 1] != Tag::B_LF && tags[i - 1] != Tag::I_LF)))
      return false;
  }
  return true;
}

}  // namespace acro

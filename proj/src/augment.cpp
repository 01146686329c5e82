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

#include "acro/augment.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "acro/unicode.hpp"

namespace acro {

namespace {

namespace pt = boost::property_tree;

// Ordered text of an element, markup stripped.
void collect_text(const pt::ptree& node, std::string& out) {
  for (const auto& [key, child] : node) {
    if (key == "<xmltext>") out += child.data();
    else if (key == "<xmlattr>" || key == "<xmlcomment>") continue;
    else collect_text(child, out);
  }
}

std::string normalize_ws(const std::string& raw) {
  std::u32string out;
  bool pending_space = false;
  for (uni::CodePoint cp : uni::decode_utf8(raw)) {
    if (uni::is_space(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(U' ');
    pending_space = false;
    out.push_back(cp);
  }
  return uni::encode_utf8(out);
}

std::string element_text(const pt::ptree& node) {
  std::string raw;
  collect_text(node, raw);
  return normalize_ws(raw);
}

bool contains_ci(const std::string& haystack, const std::string& needle) {
  const std::string h = uni::lowercase_utf8(haystack);
  return h.find(needle) != std::string::npos;
}

void harvest_def_items(const pt::ptree& node,
                       std::vector<AbbrevEntry>& entries, Diagnostics* diag) {
  for (const auto& [key, child] : node) {
    if (key == "def-item") {
      AbbrevEntry entry;
      if (auto term = child.get_child_optional("term"))
        entry.short_form = element_text(*term);
      if (auto def = child.get_child_optional("def"))
        entry.long_form = element_text(*def);
      if (entry.short_form.empty() || entry.long_form.empty() ||
          entry.short_form == entry.long_form) {
        warn(diag, "abbreviation entry '" + entry.short_form +
                       "' dropped (empty or degenerate definition)");
        continue;
      }
      entries.push_back(std::move(entry));
    } else if (key != "<xmlattr>" && key != "<xmltext>") {
      harvest_def_items(child, entries, diag);
    }
  }
}

// Any element whose <title> mentions "abbreviation" is treated as the
// abbreviation glossary; its def-items become entries.
void find_abbrev_sections(const pt::ptree& node,
                          std::vector<AbbrevEntry>& entries,
                          Diagnostics* diag) {
  for (const auto& [key, child] : node) {
    if (key == "<xmlattr>" || key == "<xmltext>" || key == "<xmlcomment>")
      continue;
    bool matched = false;
    for (const auto& [ckey, grandchild] : child) {
      if (ckey == "title" &&
          contains_ci(element_text(grandchild), "abbreviation")) {
        matched = true;
        break;
      }
    }
    if (matched) harvest_def_items(child, entries, diag);
    else find_abbrev_sections(child, entries, diag);
  }
}

void collect_paragraphs(const pt::ptree& node,
                        std::vector<std::string>& paragraphs) {
  for (const auto& [key, child] : node) {
    if (key == "<xmlattr>" || key == "<xmltext>" || key == "<xmlcomment>")
      continue;
    if (key == "p") {
      std::string text = element_text(child);
      if (!text.empty()) paragraphs.push_back(std::move(text));
    } else {
      collect_paragraphs(child, paragraphs);
    }
  }
}

void find_bodies(const pt::ptree& node, std::vector<std::string>& paragraphs) {
  for (const auto& [key, child] : node) {
    if (key == "<xmlattr>" || key == "<xmltext>" || key == "<xmlcomment>")
      continue;
    if (key == "body") collect_paragraphs(child, paragraphs);
    else find_bodies(child, paragraphs);
  }
}

void find_article_id(const pt::ptree& node, std::string& id) {
  for (const auto& [key, child] : node) {
    if (!id.empty()) return;
    if (key == "<xmlattr>" || key == "<xmltext>" || key == "<xmlcomment>")
      continue;
    if (key == "article-id") {
      id = element_text(child);
      return;
    }
    find_article_id(child, id);
  }
}

bool sentence_punct(uni::CodePoint cp) {
  return cp == U'.' || cp == U'!' || cp == U'?';
}

// The exception list protects common mid-sentence periods.
bool protected_period(const std::u32string& cps, std::size_t period) {
  if (cps[period] != U'.') return false;
  std::size_t word_start = period;
  while (word_start > 0 && !uni::is_space(cps[word_start - 1])) --word_start;
  const std::u32string_view word(cps.data() + word_start,
                                 period - word_start + 1);
  if (word == U"Fig." || word == U"e.g." || word == U"i.e.") return true;
  if (word.size() == 2 && uni::is_upper(word[0])) {
    // A lone initial ("Q." in "John Q. Public") only counts inside a
    // name; after an ordinary lowercase word it ends the sentence.
    std::size_t prev_end = word_start;
    while (prev_end > 0 && uni::is_space(cps[prev_end - 1])) --prev_end;
    std::size_t prev_start = prev_end;
    while (prev_start > 0 && !uni::is_space(cps[prev_start - 1]))
      --prev_start;
    return prev_end > prev_start && uni::is_upper(cps[prev_start]);
  }
  if (word == U"al.") {
    // Only as part of "et al.".
    std::size_t prev_end = word_start;
    while (prev_end > 0 && uni::is_space(cps[prev_end - 1])) --prev_end;
    std::size_t prev_start = prev_end;
    while (prev_start > 0 && !uni::is_space(cps[prev_start - 1]))
      --prev_start;
    return std::u32string_view(cps.data() + prev_start,
                               prev_end - prev_start) == U"et";
  }
  return false;
}

struct Match {
  Span span;
  bool acronym;  // false: long form
};

}  // namespace

ArticleRecord parse_article(const std::string& xml_text, Diagnostics* diag) {
  pt::ptree tree;
  std::istringstream in(xml_text);
  try {
    pt::read_xml(in, tree,
                 pt::xml_parser::no_comments | pt::xml_parser::no_concat_text);
  } catch (const pt::xml_parser_error& e) {
    throw ParseError(std::string("article XML: ") + e.what());
  }

  ArticleRecord article;
  find_article_id(tree, article.article_id);
  find_abbrev_sections(tree, article.abbrevs, diag);
  find_bodies(tree, article.body_paragraphs);
  return article;
}

std::vector<Span> split_sentences(std::string_view paragraph) {
  const std::u32string cps = uni::decode_utf8(paragraph);
  std::vector<Span> spans;
  const std::size_t n = cps.size();

  std::size_t i = 0;
  while (i < n && uni::is_space(cps[i])) ++i;
  std::size_t sentence_start = i;

  while (i < n) {
    if (!sentence_punct(cps[i])) {
      ++i;
      continue;
    }
    std::size_t run_end = i;
    while (run_end + 1 < n && sentence_punct(cps[run_end + 1])) ++run_end;
    std::size_t next = run_end + 1;
    if (next >= n || !uni::is_space(cps[next]) ||
        protected_period(cps, run_end)) {
      i = run_end + 1;
      continue;
    }
    while (next < n && uni::is_space(cps[next])) ++next;
    if (next >= n || !(uni::is_upper(cps[next]) || cps[next] == U'(')) {
      i = run_end + 1;
      continue;
    }
    spans.push_back(Span{sentence_start, run_end + 1});
    sentence_start = next;
    i = next;
  }

  // Trailing sentence ends at the last non-whitespace character.
  std::size_t last = n;
  while (last > sentence_start && uni::is_space(cps[last - 1])) --last;
  if (last > sentence_start) spans.push_back(Span{sentence_start, last});
  return spans;
}

std::vector<Sample> harvest(const ArticleRecord& article,
                            const HarvestOptions& options,
                            Diagnostics* diag) {
  std::vector<Sample> samples;
  std::size_t ordinal = 0;

  for (const std::string& paragraph : article.body_paragraphs) {
    const std::u32string para_cps = uni::decode_utf8(paragraph);
    for (const Span& sent : split_sentences(paragraph)) {
      const std::size_t this_ordinal = ordinal++;
      const std::u32string sent_cps =
          para_cps.substr(sent.start, sent.size());
      const std::string sent_text = uni::encode_utf8(sent_cps);
      const std::u32string sent_lower = uni::lowercase(sent_cps);

      std::set<std::size_t> starts;
      std::set<std::size_t> ends;
      for (const Token& t : tokenize(sent_text)) {
        starts.insert(t.span.start);
        ends.insert(t.span.end);
      }

      auto occurrences = [&](const std::u32string& needle,
                             bool case_sensitive) {
        std::vector<Span> found;
        if (needle.empty()) return found;
        const std::u32string& hay = case_sensitive ? sent_cps : sent_lower;
        const std::u32string pat =
            case_sensitive ? needle : uni::lowercase(needle);
        std::size_t pos = 0;
        while ((pos = hay.find(pat, pos)) != std::u32string::npos) {
          const Span s{pos, pos + pat.size()};
          if (starts.count(s.start) > 0 && ends.count(s.end) > 0)
            found.push_back(s);
          ++pos;
        }
        return found;
      };

      std::vector<Match> matches;
      std::size_t qualifying = 0;
      for (const AbbrevEntry& entry : article.abbrevs) {
        const std::vector<Span> shorts =
            occurrences(uni::decode_utf8(entry.short_form), true);
        const std::vector<Span> longs =
            occurrences(uni::decode_utf8(entry.long_form), false);
        if (!shorts.empty() && !longs.empty()) ++qualifying;
        for (const Span& s : shorts) matches.push_back(Match{s, true});
        for (const Span& s : longs) matches.push_back(Match{s, false});
      }
      if (qualifying < std::max<std::size_t>(1, options.min_pairs)) continue;

      // Longest-first overlap resolution across both fields; nested and
      // crossing matches are discarded.
      std::sort(matches.begin(), matches.end(),
                [](const Match& a, const Match& b) {
                  if (a.span.size() != b.span.size())
                    return a.span.size() > b.span.size();
                  if (a.span.start != b.span.start)
                    return a.span.start < b.span.start;
                  return a.acronym && !b.acronym;
                });
      std::vector<Match> accepted;
      for (const Match& m : matches) {
        const bool clashes = std::any_of(
            accepted.begin(), accepted.end(),
            [&](const Match& a) { return a.span.overlaps(m.span); });
        if (!clashes) accepted.push_back(m);
      }

      Sample sample;
      sample.id = article.article_id + "-" + std::to_string(this_ordinal);
      sample.text = sent_text;
      sample.language = "en";
      for (const Match& m : accepted)
        (m.acronym ? sample.acronym_spans : sample.long_form_spans)
            .push_back(m.span);
      std::sort(sample.acronym_spans.begin(), sample.acronym_spans.end());
      std::sort(sample.long_form_spans.begin(), sample.long_form_spans.end());
      if (sample.acronym_spans.empty() || sample.long_form_spans.empty()) {
        warn(diag, "sample '" + sample.id +
                       "': qualifying pair lost to overlap resolution; "
                       "skipped");
        continue;
      }
      samples.push_back(std::move(sample));
    }
  }
  return samples;
}

}  // namespace acro

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

#include "acro/ensemble.hpp"

#include <algorithm>
#include <fstream>

#include "acro/unicode.hpp"

namespace acro {

namespace {

constexpr std::size_t kDropped = static_cast<std::size_t>(-1);

bool is_enclosure(uni::CodePoint cp) {
  switch (cp) {
    case U'(': case U')': case U'[': case U']': case U'{': case U'}':
    case U'"': case U'\'': case U',': case U'.':
      return true;
    default:
      return false;
  }
}

// Deduplicates a span list, returning old-index -> new-index so pair
// links can follow.
std::vector<std::size_t> dedupe(std::vector<Span>& spans) {
  std::vector<Span> unique;
  std::vector<std::size_t> remap(spans.size());
  for (std::size_t i = 0; i < spans.size(); ++i) {
    auto it = std::find(unique.begin(), unique.end(), spans[i]);
    if (it == unique.end()) {
      unique.push_back(spans[i]);
      remap[i] = unique.size() - 1;
    } else {
      remap[i] = static_cast<std::size_t>(it - unique.begin());
    }
  }
  spans = std::move(unique);
  return remap;
}

void remap_links(PredictionSet& pred, const std::vector<std::size_t>& an_map,
                 const std::vector<std::size_t>& lf_map) {
  std::vector<std::pair<std::size_t, std::size_t>> links;
  for (const auto& [a, l] : pred.pair_links) {
    if (an_map[a] == kDropped || lf_map[l] == kDropped) continue;
    const std::pair<std::size_t, std::size_t> link{an_map[a], lf_map[l]};
    if (std::find(links.begin(), links.end(), link) == links.end())
      links.push_back(link);
  }
  pred.pair_links = std::move(links);
}

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return m;
}

}  // namespace

MergePolicy parse_merge_policy(std::string_view name) {
  if (name == "union-dedupe") return MergePolicy::UnionDedupe;
  if (name == "primary-wins") return MergePolicy::PrimaryWins;
  if (name == "concat-raw") return MergePolicy::ConcatRaw;
  throw ParseError("unknown merge policy '" + std::string(name) +
                   "' (want union-dedupe, primary-wins or concat-raw)");
}

std::string_view merge_policy_name(MergePolicy policy) {
  switch (policy) {
    case MergePolicy::UnionDedupe: return "union-dedupe";
    case MergePolicy::PrimaryWins: return "primary-wins";
    case MergePolicy::ConcatRaw: return "concat-raw";
  }
  return "union-dedupe";
}

PredictionSet merge(const PredictionSet& primary,
                    const PredictionSet& secondary, MergePolicy policy) {
  if (primary.sample_id != secondary.sample_id)
    throw ValidationError("merge: sample ids differ ('" + primary.sample_id +
                          "' vs '" + secondary.sample_id + "')");

  if (policy == MergePolicy::PrimaryWins) return primary;

  if (policy == MergePolicy::ConcatRaw) {
    PredictionSet out = primary;
    out.acronym_spans.insert(out.acronym_spans.end(),
                             secondary.acronym_spans.begin(),
                             secondary.acronym_spans.end());
    out.long_form_spans.insert(out.long_form_spans.end(),
                               secondary.long_form_spans.begin(),
                               secondary.long_form_spans.end());
    for (const auto& [a, l] : secondary.pair_links)
      out.pair_links.emplace_back(a + primary.acronym_spans.size(),
                                  l + primary.long_form_spans.size());
    return out;
  }

  // union-dedupe
  PredictionSet out = primary;
  std::vector<std::size_t> an_map = dedupe(out.acronym_spans);
  std::vector<std::size_t> lf_map = dedupe(out.long_form_spans);
  remap_links(out, an_map, lf_map);

  for (const Span& s : secondary.acronym_spans) {
    if (std::find(out.acronym_spans.begin(), out.acronym_spans.end(), s) !=
        out.acronym_spans.end())
      continue;
    const bool clashes = std::any_of(
        primary.acronym_spans.begin(), primary.acronym_spans.end(),
        [&](const Span& p) { return p.overlaps(s); });
    if (!clashes) out.acronym_spans.push_back(s);
  }
  return out;
}

PredictionSet strip_enclosures(const PredictionSet& pred,
                               std::string_view text) {
  const std::u32string cps = uni::decode_utf8(text);
  PredictionSet out = pred;
  std::vector<std::size_t> an_map(out.acronym_spans.size(), kDropped);
  std::vector<Span> trimmed;
  for (std::size_t i = 0; i < out.acronym_spans.size(); ++i) {
    Span s = out.acronym_spans[i];
    if (s.end > cps.size() || s.start >= s.end)
      throw ValidationError("strip_enclosures: span out of bounds");
    while (s.start < s.end && is_enclosure(cps[s.start])) ++s.start;
    while (s.start < s.end && is_enclosure(cps[s.end - 1])) --s.end;
    if (s.start >= s.end) continue;  // nothing left, drop
    auto it = std::find(trimmed.begin(), trimmed.end(), s);
    if (it == trimmed.end()) {
      trimmed.push_back(s);
      an_map[i] = trimmed.size() - 1;
    } else {
      an_map[i] = static_cast<std::size_t>(it - trimmed.begin());
    }
  }
  out.acronym_spans = std::move(trimmed);
  remap_links(out, an_map, identity_map(out.long_form_spans.size()));
  return out;
}

const StopwordList& StopwordList::builtin() {
  static const StopwordList list = [] {
    StopwordList l;
    l.by_language["en"] = {
        "a", "an", "and", "are", "as", "at", "be", "by", "for", "from", "in",
        "is", "it", "of", "on", "or", "that", "the", "this", "to", "was",
        "were", "which", "with"};
    l.by_language["da"] = {
        "af", "at", "de", "den", "der", "det", "en", "er", "et", "for",
        "fra", "han", "hun", "i", "ikke", "med", "og", "om", "på", "som",
        "til", "var"};
    l.by_language["fr"] = {
        "à", "au", "aux", "avec", "dans", "de", "des", "du", "en", "est",
        "et", "la", "le", "les", "ne", "par", "pas", "pour", "que", "qui",
        "sont", "sur", "un", "une"};
    l.by_language["es"] = {
        "a", "al", "con", "de", "del", "el", "en", "es", "la", "las", "los",
        "no", "o", "para", "por", "que", "se", "son", "un", "una", "y"};
    l.by_language["fa"] = {
        "از", "به", "در", "با", "که", "را", "و", "این", "آن", "برای",
        "تا", "بر", "هم", "نیز", "یا", "اما", "اگر", "هر", "چه", "می",
        "است", "بود", "شد", "های"};
    l.by_language["vi"] = {
        "của", "và", "các", "có", "là", "một", "những", "được", "cho",
        "không", "trong", "đã", "với", "này", "đó", "để", "từ", "khi",
        "người", "theo"};
    return l;
  }();
  return list;
}

StopwordList StopwordList::from_file(const std::filesystem::path& path,
                                     const std::string& language) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open stopword file '" + path.string() + "'");
  StopwordList list;
  std::set<std::string>& words = list.by_language[language];
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    std::size_t start = line.find_first_not_of(' ');
    if (start == std::string::npos || line[start] == '#') continue;
    words.insert(uni::lowercase_utf8(line.substr(start)));
  }
  if (words.empty())
    throw ValidationError("stopword file '" + path.string() + "' is empty");
  return list;
}

const std::set<std::string>& StopwordList::lookup(const std::string& language,
                                                  Diagnostics* diag) const {
  std::string key = uni::lowercase_utf8(language);
  if (std::size_t dash = key.find('-'); dash != std::string::npos)
    key = key.substr(0, dash);
  auto it = by_language.find(key);
  if (it != by_language.end()) return it->second;
  it = by_language.find("en");
  if (it == by_language.end())
    throw ValidationError("stopword list has no English fallback");
  if (!language.empty())
    warn(diag, "no stopword list for language '" + language +
                   "'; falling back to English");
  return it->second;
}

PredictionSet drop_stopword_long_forms(const PredictionSet& pred,
                                       std::string_view text,
                                       const StopwordList& stopwords,
                                       const std::string& language,
                                       Diagnostics* diag) {
  const std::set<std::string>& words = stopwords.lookup(language, diag);
  PredictionSet out = pred;
  std::vector<std::size_t> lf_map(out.long_form_spans.size(), kDropped);
  std::vector<Span> kept;
  for (std::size_t i = 0; i < out.long_form_spans.size(); ++i) {
    const Span& s = out.long_form_spans[i];
    const std::vector<Token> tokens = tokenize(slice(text, s));
    const bool all_stop =
        !tokens.empty() &&
        std::all_of(tokens.begin(), tokens.end(), [&](const Token& t) {
          return words.count(uni::lowercase_utf8(t.form)) > 0;
        });
    if (all_stop) continue;
    kept.push_back(s);
    lf_map[i] = kept.size() - 1;
  }
  out.long_form_spans = std::move(kept);
  remap_links(out, identity_map(out.acronym_spans.size()), lf_map);
  return out;
}

}  // namespace acro

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

#include "acro/rules.hpp"

#include <algorithm>

#include "acro/unicode.hpp"

namespace acro {

namespace {

bool is_word_token(const Token& t) {
  for (uni::CodePoint cp : uni::decode_utf8(t.form))
    if (uni::is_letter(cp) || uni::is_digit(cp)) return true;
  return false;
}

// Indices of matched "(" ... ")" pairs, innermost first.
std::vector<std::pair<std::size_t, std::size_t>> paren_pairs(
    const std::vector<Token>& tokens) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].form == "(") {
      stack.push_back(i);
    } else if (tokens[i].form == ")" && !stack.empty()) {
      pairs.emplace_back(stack.back(), i);
      stack.pop_back();
    }
  }
  return pairs;
}

// Word-token indices strictly before `limit`.
std::vector<std::size_t> words_before(const std::vector<Token>& tokens,
                                      std::size_t limit) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < limit && i < tokens.size(); ++i)
    if (is_word_token(tokens[i])) out.push_back(i);
  return out;
}

uni::CodePoint first_code_point(const std::string& form) {
  return uni::decode_utf8(form)[0];
}

}  // namespace

std::vector<AcronymCandidate> extract_candidates(
    std::string_view /*text*/, const std::vector<Token>& tokens) {
  std::vector<AcronymCandidate> candidates;
  for (const auto& [open, close] : paren_pairs(tokens)) {
    if (close != open + 2) continue;  // exactly one token inside
    const Token& t = tokens[open + 1];
    std::size_t letters = 0;
    std::size_t upper = 0;
    for (uni::CodePoint cp : uni::decode_utf8(t.form)) {
      if (uni::is_letter(cp)) {
        ++letters;
        if (uni::is_upper(cp)) ++upper;
      }
    }
    if (letters == 0) continue;
    const double ratio = static_cast<double>(upper) / letters;
    if (ratio > 0.6)
      candidates.push_back(
          AcronymCandidate{t.span, t.form, upper, ratio, open + 1});
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const auto& a, const auto& b) { return a.span < b.span; });
  return candidates;
}

std::optional<Span> match_long_form_baseline(
    const AcronymCandidate& candidate, const std::vector<Token>& tokens) {
  const std::size_t k = candidate.uppercase_count;
  if (k == 0) return std::nullopt;

  std::vector<uni::CodePoint> uppers;
  for (uni::CodePoint cp : uni::decode_utf8(candidate.form))
    if (uni::is_upper(cp)) uppers.push_back(uni::to_lower(cp));

  auto initials_match = [&](const std::vector<std::size_t>& window) {
    for (std::size_t i = 0; i < k; ++i) {
      const uni::CodePoint first = first_code_point(tokens[window[i]].form);
      if (uni::to_lower(first) != uppers[i]) return false;
    }
    return true;
  };

  // Backward window first: the k words before the "(".
  const std::size_t open = candidate.token_index - 1;
  std::vector<std::size_t> before = words_before(tokens, open);
  if (before.size() >= k) {
    std::vector<std::size_t> window(before.end() - k, before.end());
    if (initials_match(window))
      return Span{tokens[window.front()].span.start,
                  tokens[window.back()].span.end};
  }

  // Then the k words after the ")".
  const std::size_t close = candidate.token_index + 1;
  std::vector<std::size_t> window;
  for (std::size_t i = close + 1; i < tokens.size() && window.size() < k; ++i)
    if (is_word_token(tokens[i])) window.push_back(i);
  if (window.size() == k && initials_match(window))
    return Span{tokens[window.front()].span.start,
                tokens[window.back()].span.end};

  return std::nullopt;
}

PredictionSet extract_baseline(std::string_view text,
                               const std::vector<Token>& tokens) {
  PredictionSet pred;
  for (const AcronymCandidate& c : extract_candidates(text, tokens)) {
    pred.acronym_spans.push_back(c.span);
    if (auto lf = match_long_form_baseline(c, tokens)) {
      if (std::find(pred.long_form_spans.begin(), pred.long_form_spans.end(),
                    *lf) == pred.long_form_spans.end())
        pred.long_form_spans.push_back(*lf);
      const std::size_t lf_index =
          std::find(pred.long_form_spans.begin(), pred.long_form_spans.end(),
                    *lf) -
          pred.long_form_spans.begin();
      pred.pair_links.emplace_back(pred.acronym_spans.size() - 1, lf_index);
    }
  }
  return pred;
}

PredictionSet extract_enhanced(std::string_view text,
                               const std::vector<Token>& tokens,
                               const EnhancedConfig& config) {
  const std::u32string cps = uni::decode_utf8(text);
  PredictionSet pred;

  for (const auto& [open, close] : paren_pairs(tokens)) {
    if (close != open + 2) continue;
    const Token& t = tokens[open + 1];
    const std::u32string form = uni::decode_utf8(t.form);

    std::size_t letters = 0;
    std::size_t upper = 0;
    for (uni::CodePoint cp : form) {
      if (uni::is_letter(cp)) {
        ++letters;
        if (uni::is_upper(cp)) ++upper;
      }
    }
    if (letters < config.min_letters || upper == 0) continue;
    if (static_cast<double>(letters) / form.size() <
        config.min_letter_fraction)
      continue;

    pred.acronym_spans.push_back(t.span);
    const std::size_t an_index = pred.acronym_spans.size() - 1;

    // Window: the last min(|s| + extra, factor * |s|) words before "(".
    const std::size_t bound =
        std::min(form.size() + config.extra_words,
                 config.window_factor * form.size());
    std::vector<std::size_t> before = words_before(tokens, open);
    if (before.size() > bound)
      before.erase(before.begin(), before.end() - bound);
    if (before.empty()) continue;

    const std::size_t win_start = tokens[before.front()].span.start;
    const std::size_t win_end = tokens[before.back()].span.end;

    // Candidate letters, lowercased; hyphens and other non-letters are
    // skipped during matching.
    std::u32string pattern;
    for (uni::CodePoint cp : form)
      if (uni::is_letter(cp)) pattern.push_back(uni::to_lower(cp));

    auto is_word_start = [&](std::size_t pos) {
      if (pos == win_start) return true;
      const uni::CodePoint prev = cps[pos - 1];
      return !uni::is_letter(prev) && !uni::is_digit(prev);
    };

    // Right-to-left greedy subsequence match. Matching each letter as
    // far right as possible yields the latest (shortest) valid start.
    std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(win_end) - 1;
    bool failed = false;
    std::size_t first_pos = 0;
    for (std::size_t pi = pattern.size(); pi-- > 0;) {
      const uni::CodePoint want = pattern[pi];
      const bool is_first = pi == 0;
      while (pos >= static_cast<std::ptrdiff_t>(win_start)) {
        const std::size_t p = static_cast<std::size_t>(pos);
        if (uni::to_lower(cps[p]) == want && (!is_first || is_word_start(p)))
          break;
        --pos;
      }
      if (pos < static_cast<std::ptrdiff_t>(win_start)) {
        failed = true;
        break;
      }
      first_pos = static_cast<std::size_t>(pos);
      --pos;
    }
    if (failed) continue;

    const Span lf_span{first_pos, win_end};
    auto it = std::find(pred.long_form_spans.begin(),
                        pred.long_form_spans.end(), lf_span);
    if (it == pred.long_form_spans.end()) {
      pred.long_form_spans.push_back(lf_span);
      it = pred.long_form_spans.end() - 1;
    }
    pred.pair_links.emplace_back(
        an_index,
        static_cast<std::size_t>(it - pred.long_form_spans.begin()));
  }

  // Candidates were produced innermost-first; restore text order.
  // pair_links index into the unsorted acronym list, so sort via a
  // permutation and remap.
  std::vector<std::size_t> order(pred.acronym_spans.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pred.acronym_spans[a] < pred.acronym_spans[b];
  });
  std::vector<std::size_t> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  std::vector<Span> sorted;
  sorted.reserve(order.size());
  for (std::size_t i : order) sorted.push_back(pred.acronym_spans[i]);
  pred.acronym_spans = std::move(sorted);
  for (auto& [a, l] : pred.pair_links) a = rank[a];
  std::sort(pred.pair_links.begin(), pred.pair_links.end());

  return pred;
}

}  // namespace acro

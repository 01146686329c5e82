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

#include "acro/linter.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "acro/unicode.hpp"

namespace acro {

namespace {

bool is_bracket_or_quote(uni::CodePoint cp) {
  switch (cp) {
    case U'(': case U')': case U'[': case U']': case U'{': case U'}':
    case U'"': case U'\'':
    case 0x2018: case 0x2019: case 0x201C: case 0x201D:
      return true;
    default:
      return false;
  }
}

std::string span_str(Span s) {
  return "[" + std::to_string(s.start) + "," + std::to_string(s.end) + ")";
}

bool in_bounds(Span s, std::size_t len) {
  return s.start < s.end && s.end <= len;
}

// First letters of the whitespace-delimited words of a long form.
std::set<uni::CodePoint> word_initials(const std::u32string& cps, Span span) {
  std::set<uni::CodePoint> initials;
  bool at_start = true;
  for (std::size_t i = span.start; i < span.end; ++i) {
    if (uni::is_space(cps[i])) {
      at_start = true;
      continue;
    }
    if (at_start && uni::is_letter(cps[i]))
      initials.insert(uni::to_lower(cps[i]));
    at_start = false;
  }
  return initials;
}

}  // namespace

std::string_view lint_rule_name(LintRule rule) {
  switch (rule) {
    case LintRule::L001: return "L001";
    case LintRule::L002: return "L002";
    case LintRule::L003: return "L003";
    case LintRule::L004: return "L004";
    case LintRule::L005: return "L005";
  }
  return "L001";
}

std::vector<LintFinding> lint(const Sample& sample, const LintConfig& config) {
  const std::u32string cps = uni::decode_utf8(sample.text);
  const std::vector<Token> tokens = tokenize(sample.text);
  std::vector<LintFinding> findings;

  auto add = [&](LintRule rule, Span span, std::string message) {
    findings.push_back(
        LintFinding{sample.id, rule, span, std::move(message)});
  };

  // L001: bounds and token alignment.
  auto check_alignment = [&](const std::vector<Span>& spans,
                             std::string_view field) {
    for (const Span& s : spans) {
      if (!in_bounds(s, cps.size())) {
        add(LintRule::L001, s,
            std::string(field) + " span " + span_str(s) +
                " out of bounds (text length " + std::to_string(cps.size()) +
                ")");
        continue;
      }
      for (const Token& t : tokens) {
        const bool start_inside =
            t.span.start < s.start && s.start < t.span.end;
        const bool end_inside = t.span.start < s.end && s.end < t.span.end;
        if (start_inside || end_inside) {
          add(LintRule::L001, s,
              std::string(field) + " span " + span_str(s) +
                  " cuts through token '" + t.form + "' " +
                  span_str(t.span));
          break;
        }
      }
    }
  };
  check_alignment(sample.acronym_spans, "acronym");
  check_alignment(sample.long_form_spans, "long-form");

  // L002: enclosing brackets/quotes inside the gold acronym.
  for (const Span& s : sample.acronym_spans) {
    if (!in_bounds(s, cps.size())) continue;
    if (is_bracket_or_quote(cps[s.start]) ||
        is_bracket_or_quote(cps[s.end - 1]))
      add(LintRule::L002, s,
          "acronym '" + slice(sample.text, s) +
              "' includes enclosing bracket/quote characters");
  }

  // L003: the enhanced matcher knows a strictly larger long form.
  const PredictionSet enhanced =
      extract_enhanced(sample.text, tokens, config.enhanced);
  for (const auto& [ai, li] : enhanced.pair_links) {
    const Span an = enhanced.acronym_spans[ai];
    const Span lf = enhanced.long_form_spans[li];
    if (std::find(sample.acronym_spans.begin(), sample.acronym_spans.end(),
                  an) == sample.acronym_spans.end())
      continue;
    for (const Span& gold_lf : sample.long_form_spans) {
      if (!in_bounds(gold_lf, cps.size())) continue;
      if (lf.contains(gold_lf) && lf != gold_lf)
        add(LintRule::L003, gold_lf,
            "long form '" + slice(sample.text, gold_lf) +
                "' looks incomplete; matcher suggests '" +
                slice(sample.text, lf) + "' " + span_str(lf));
    }
  }

  // L004: pair each acronym with its nearest long form and test letter
  // alignment. A leading letter match alone is not evidence: unrelated
  // adjacent units (currency conversions, for one) share prefixes.
  for (const Span& an : sample.acronym_spans) {
    if (!in_bounds(an, cps.size())) continue;
    const Span* nearest = nullptr;
    std::size_t best_gap = 0;
    for (const Span& lf : sample.long_form_spans) {
      if (!in_bounds(lf, cps.size())) continue;
      std::size_t gap = 0;
      if (lf.end <= an.start) gap = an.start - lf.end;
      else if (an.end <= lf.start) gap = lf.start - an.end;
      if (nearest == nullptr || gap < best_gap) {
        nearest = &lf;
        best_gap = gap;
      }
    }
    if (nearest == nullptr) continue;

    const std::set<uni::CodePoint> initials = word_initials(cps, *nearest);
    uni::CodePoint lead = 0;
    std::set<uni::CodePoint> matched;
    for (std::size_t i = an.start; i < an.end; ++i) {
      if (!uni::is_letter(cps[i])) continue;
      const uni::CodePoint lower = uni::to_lower(cps[i]);
      if (lead == 0) lead = lower;
      if (initials.count(lower) > 0) matched.insert(lower);
    }
    matched.erase(lead);
    if (matched.empty())
      add(LintRule::L004, an,
          "acronym '" + slice(sample.text, an) +
              "' shows no letter alignment with long form '" +
              slice(sample.text, *nearest) + "' beyond the leading letter");
  }

  // L005: duplicate or overlapping spans within one field.
  auto check_overlap = [&](const std::vector<Span>& spans,
                           std::string_view field) {
    std::vector<Span> sorted(spans);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t j = 1; j < sorted.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (sorted[i] == sorted[j] || sorted[i].overlaps(sorted[j])) {
          add(LintRule::L005, sorted[j],
              std::string(field) + " span " + span_str(sorted[j]) +
                  (sorted[i] == sorted[j] ? " duplicates " : " overlaps ") +
                  span_str(sorted[i]));
          break;
        }
      }
    }
  };
  check_overlap(sample.acronym_spans, "acronym");
  check_overlap(sample.long_form_spans, "long-form");

  std::sort(findings.begin(), findings.end());
  findings.erase(std::unique(findings.begin(), findings.end()),
                 findings.end());
  return findings;
}

LintSummary lint_corpus(const std::vector<Sample>& samples,
                        const LintConfig& config) {
  LintSummary summary;
  summary.total_samples = samples.size();
  for (const Sample& sample : samples) {
    std::vector<LintFinding> findings = lint(sample, config);
    if (!findings.empty()) ++summary.flagged_samples;
    for (LintFinding& f : findings) {
      ++summary.counts[f.rule];
      summary.findings.push_back(std::move(f));
    }
  }
  std::sort(summary.findings.begin(), summary.findings.end());
  return summary;
}

std::vector<Sample> fix_l002(const std::vector<Sample>& samples,
                             Diagnostics* diag) {
  std::vector<Sample> cleaned;
  cleaned.reserve(samples.size());
  for (const Sample& sample : samples) {
    const std::u32string cps = uni::decode_utf8(sample.text);
    Sample copy = sample;
    std::vector<Span> fixed;
    for (Span s : copy.acronym_spans) {
      if (!in_bounds(s, cps.size())) {
        fixed.push_back(s);
        continue;
      }
      const Span original = s;
      while (s.start < s.end && is_bracket_or_quote(cps[s.start])) ++s.start;
      while (s.start < s.end && is_bracket_or_quote(cps[s.end - 1])) --s.end;
      if (s.start >= s.end) {
        warn(diag, "sample '" + sample.id + "': acronym span " +
                       span_str(original) + " is all brackets; dropped");
        continue;
      }
      if (s != original)
        warn(diag, "sample '" + sample.id + "': acronym span " +
                       span_str(original) + " trimmed to " + span_str(s));
      if (std::find(fixed.begin(), fixed.end(), s) == fixed.end())
        fixed.push_back(s);
    }
    copy.acronym_spans = std::move(fixed);
    cleaned.push_back(std::move(copy));
  }
  return cleaned;
}

std::string findings_to_jsonl(const std::vector<LintFinding>& findings) {
  std::string out;
  for (const LintFinding& f : findings) {
    nlohmann::json j{{"sample_id", f.sample_id},
                     {"rule", std::string(lint_rule_name(f.rule))},
                     {"span", {f.span.start, f.span.end}},
                     {"message", f.message}};
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace acro

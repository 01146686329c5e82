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

// Test-only randomized input generators and independent oracles. These
// deliberately avoid the library's conversion paths so they can act as
// cross-checks.

#pragma once

#include <random>
#include <string>
#include <vector>

#include "acro/corpus.hpp"
#include "acro/predictions.hpp"
#include "acro/unicode.hpp"

namespace acro::testing {

struct Rng {
  std::mt19937_64 engine;

  explicit Rng(std::uint64_t seed) : engine(seed) {}
  std::size_t below(std::size_t n) { return engine() % n; }
  bool chance(double p) {
    return static_cast<double>(engine() % 1000) < p * 1000.0;
  }
};

// A whitespace-free chunk; the tokenizer may split it further, but its
// ends always land on token boundaries.
inline std::string random_chunk(Rng& rng) {
  static const std::vector<std::string> pool = {
      "model", "data",   "BBLT", "x",    "norm", "F1",  "ve-s",
      "CT",    "résumé", "đồng", "test", "B-52", "run", "alpha",
      "(ok)",  "q.v",    "NLP",  "beta,"};
  std::string chunk = pool[rng.below(pool.size())];
  if (rng.chance(0.15)) chunk += std::to_string(rng.below(100));
  return chunk;
}

struct GeneratedSample {
  Sample sample;
  // Chunk spans in code points; every span below is a union of
  // consecutive chunks, so boundaries are token-aligned by construction.
  std::vector<Span> chunks;
};

// Random text with pairwise-disjoint, token-aligned AN/LF spans.
inline GeneratedSample random_token_aligned_sample(Rng& rng, std::string id) {
  GeneratedSample out;
  out.sample.id = std::move(id);

  const std::size_t n_chunks = 1 + rng.below(12);
  std::u32string text;
  for (std::size_t i = 0; i < n_chunks; ++i) {
    if (i > 0) text += U' ';
    const std::u32string chunk = uni::decode_utf8(random_chunk(rng));
    out.chunks.push_back(Span{text.size(), text.size() + chunk.size()});
    text += chunk;
  }
  out.sample.text = uni::encode_utf8(text);

  std::size_t i = 0;
  while (i < n_chunks) {
    if (!rng.chance(0.4)) {
      ++i;
      continue;
    }
    const std::size_t len = std::min(1 + rng.below(3), n_chunks - i);
    const Span span{out.chunks[i].start, out.chunks[i + len - 1].end};
    if (rng.chance(0.5)) out.sample.acronym_spans.push_back(span);
    else out.sample.long_form_spans.push_back(span);
    i += len;
  }
  return out;
}

// --- independent oracle: per-character labeling projected to tokens ---

enum class CharLabel { None, Acronym, LongForm };

struct CharOracle {
  std::vector<CharLabel> labels;
  std::vector<int> span_id;  // -1 where unlabeled
};

// Labels every character from the spans directly; disjoint spans only.
inline CharOracle label_characters(const GeneratedSample& gen) {
  const std::size_t len = uni::decode_utf8(gen.sample.text).size();
  CharOracle oracle;
  oracle.labels.assign(len, CharLabel::None);
  oracle.span_id.assign(len, -1);
  int next_id = 0;
  for (const Span& s : gen.sample.acronym_spans) {
    for (std::size_t i = s.start; i < s.end; ++i) {
      oracle.labels[i] = CharLabel::Acronym;
      oracle.span_id[i] = next_id;
    }
    ++next_id;
  }
  for (const Span& s : gen.sample.long_form_spans) {
    for (std::size_t i = s.start; i < s.end; ++i) {
      oracle.labels[i] = CharLabel::LongForm;
      oracle.span_id[i] = next_id;
    }
    ++next_id;
  }
  return oracle;
}

// Expected BIO tags for token-aligned spans, derived purely from the
// per-character labels.
inline std::vector<Tag> project_to_tokens(const CharOracle& oracle,
                                          const std::vector<Token>& tokens) {
  std::vector<Tag> tags;
  int prev_id = -1;
  for (const Token& t : tokens) {
    const CharLabel label = oracle.labels[t.span.start];
    const int id = oracle.span_id[t.span.start];
    if (label == CharLabel::None) {
      tags.push_back(Tag::O);
    } else if (label == CharLabel::Acronym) {
      tags.push_back(id != prev_id ? Tag::B_AN : Tag::I_AN);
    } else {
      tags.push_back(id != prev_id ? Tag::B_LF : Tag::I_LF);
    }
    prev_id = id;
  }
  return tags;
}

// --- independent oracle: pairwise exact-match scoring -----------------

struct BruteCounts {
  std::size_t tp = 0;
  std::size_t n_pred = 0;
  std::size_t n_gold = 0;
};

// Greedy pairwise matcher: each prediction consumes at most one
// identical gold span.
inline void brute_force_match(const std::vector<Span>& pred,
                              const std::vector<Span>& gold,
                              BruteCounts& counts) {
  std::vector<bool> used(gold.size(), false);
  std::vector<Span> seen;
  for (const Span& p : pred) {
    bool duplicate = false;
    for (const Span& s : seen)
      if (s == p) duplicate = true;
    if (duplicate) continue;  // duplicates never count twice
    seen.push_back(p);
    counts.n_pred += 1;
    for (std::size_t g = 0; g < gold.size(); ++g) {
      if (used[g] || gold[g] != p) continue;
      used[g] = true;
      counts.tp += 1;
      break;
    }
  }
  counts.n_gold += gold.size();
}

struct BruteReport {
  double an_p = 0, an_r = 0, an_f1 = 0;
  double lf_p = 0, lf_r = 0, lf_f1 = 0;
  double macro_f1 = 0;
};

inline BruteReport brute_force_score(
    const std::vector<Sample>& gold,
    const std::vector<PredictionSet>& preds) {
  BruteCounts an, lf;
  for (const Sample& g : gold) {
    const PredictionSet* p = nullptr;
    for (const PredictionSet& cand : preds)
      if (cand.sample_id == g.id) p = &cand;
    static const std::vector<Span> empty;
    brute_force_match(p != nullptr ? p->acronym_spans : empty,
                      g.acronym_spans, an);
    brute_force_match(p != nullptr ? p->long_form_spans : empty,
                      g.long_form_spans, lf);
  }
  auto prf = [](const BruteCounts& c, double& p, double& r, double& f1) {
    p = c.n_pred == 0 ? 0.0 : static_cast<double>(c.tp) / c.n_pred;
    r = c.n_gold == 0 ? 0.0 : static_cast<double>(c.tp) / c.n_gold;
    f1 = (p + r) == 0.0 ? 0.0 : 2 * p * r / (p + r);
  };
  BruteReport report;
  prf(an, report.an_p, report.an_r, report.an_f1);
  prf(lf, report.lf_p, report.lf_r, report.lf_f1);
  report.macro_f1 = (report.an_f1 + report.lf_f1) / 2.0;
  return report;
}

}  // namespace acro::testing

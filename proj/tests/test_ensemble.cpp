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

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "acro/ensemble.hpp"
#include "support/generators.hpp"

using namespace acro;

namespace {

// Random prediction set over an 80-character virtual text.
PredictionSet random_pred(testing::Rng& rng, std::string id) {
  PredictionSet p;
  p.sample_id = std::move(id);
  const std::size_t n_an = rng.below(4);
  const std::size_t n_lf = rng.below(4);
  for (std::size_t i = 0; i < n_an; ++i) {
    const std::size_t start = rng.below(70);
    p.acronym_spans.push_back(Span{start, start + 1 + rng.below(8)});
  }
  for (std::size_t i = 0; i < n_lf; ++i) {
    const std::size_t start = rng.below(70);
    p.long_form_spans.push_back(Span{start, start + 1 + rng.below(8)});
  }
  return p;
}

bool no_span_grew(const PredictionSet& before, const PredictionSet& after) {
  for (const Span& s : after.acronym_spans) {
    const bool covered = std::any_of(
        before.acronym_spans.begin(), before.acronym_spans.end(),
        [&](const Span& b) { return b.contains(s); });
    if (!covered) return false;
  }
  return after.long_form_spans.size() <= before.long_form_spans.size();
}

}  // namespace

TEST_CASE("merge policies") {
  const PredictionSet primary{"s", {Span{5, 8}}, {Span{20, 30}}, {{0, 0}}};

  SUBCASE("disjoint union") {
    const PredictionSet secondary{"s", {Span{40, 45}}, {}, {}};
    const PredictionSet merged =
        merge(primary, secondary, MergePolicy::UnionDedupe);
    CHECK(merged.acronym_spans == std::vector<Span>{Span{5, 8}, Span{40, 45}});
    CHECK(merged.long_form_spans == primary.long_form_spans);
    CHECK(merged.pair_links == primary.pair_links);
  }

  SUBCASE("exact duplicates collapse") {
    const PredictionSet secondary{"s", {Span{5, 8}}, {}, {}};
    const PredictionSet merged =
        merge(primary, secondary, MergePolicy::UnionDedupe);
    CHECK(merged.acronym_spans == std::vector<Span>{Span{5, 8}});
  }

  SUBCASE("overlap resolves in favor of the primary") {
    const PredictionSet wide{"s", {Span{5, 9}}, {}, {}};
    const PredictionSet narrow{"s", {Span{5, 8}}, {}, {}};
    const PredictionSet merged = merge(wide, narrow, MergePolicy::UnionDedupe);
    CHECK(merged.acronym_spans == std::vector<Span>{Span{5, 9}});
  }

  SUBCASE("secondary long forms are never taken under union-dedupe") {
    const PredictionSet secondary{"s", {}, {Span{0, 4}}, {}};
    const PredictionSet merged =
        merge(primary, secondary, MergePolicy::UnionDedupe);
    CHECK(merged.long_form_spans == primary.long_form_spans);
  }

  SUBCASE("concat-raw keeps duplicates verbatim") {
    const PredictionSet secondary{"s", {Span{5, 8}}, {Span{20, 30}}, {{0, 0}}};
    const PredictionSet merged =
        merge(primary, secondary, MergePolicy::ConcatRaw);
    CHECK(merged.acronym_spans ==
          std::vector<Span>{Span{5, 8}, Span{5, 8}});
    CHECK(merged.long_form_spans ==
          std::vector<Span>{Span{20, 30}, Span{20, 30}});
    CHECK(merged.pair_links ==
          std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 1}});
  }

  SUBCASE("primary-wins ignores the secondary") {
    const PredictionSet secondary{"s", {Span{40, 45}}, {Span{0, 4}}, {}};
    CHECK(merge(primary, secondary, MergePolicy::PrimaryWins) == primary);
  }

  SUBCASE("mismatched ids are an error") {
    const PredictionSet other{"t", {}, {}, {}};
    CHECK_THROWS_AS(merge(primary, other, MergePolicy::UnionDedupe),
                    ValidationError);
  }
}

TEST_CASE("merge with an empty secondary is the identity") {
  testing::Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    PredictionSet p = random_pred(rng, "s");
    // Identity holds for well-formed (duplicate-free) sets.
    std::sort(p.acronym_spans.begin(), p.acronym_spans.end());
    p.acronym_spans.erase(
        std::unique(p.acronym_spans.begin(), p.acronym_spans.end()),
        p.acronym_spans.end());
    std::sort(p.long_form_spans.begin(), p.long_form_spans.end());
    p.long_form_spans.erase(
        std::unique(p.long_form_spans.begin(), p.long_form_spans.end()),
        p.long_form_spans.end());
    const PredictionSet empty{"s", {}, {}, {}};
    for (MergePolicy policy : {MergePolicy::UnionDedupe,
                               MergePolicy::PrimaryWins,
                               MergePolicy::ConcatRaw})
      CHECK(merge(p, empty, policy) == p);
  }
}

TEST_CASE("union-dedupe is commutative on disjoint acronym sets") {
  const PredictionSet a{"s", {Span{0, 3}, Span{10, 12}}, {}, {}};
  const PredictionSet b{"s", {Span{5, 8}}, {}, {}};
  PredictionSet ab = merge(a, b, MergePolicy::UnionDedupe);
  PredictionSet ba = merge(b, a, MergePolicy::UnionDedupe);
  std::sort(ab.acronym_spans.begin(), ab.acronym_spans.end());
  std::sort(ba.acronym_spans.begin(), ba.acronym_spans.end());
  CHECK(ab.acronym_spans == ba.acronym_spans);
}

TEST_CASE("strip_enclosures trims the documented cases") {
  const std::string text = "the (GHS) label and NLP and ()";
  //                        0123456789...
  PredictionSet pred{"s", {Span{4, 9}, Span{20, 23}, Span{28, 30}}, {}, {}};
  const PredictionSet out = strip_enclosures(pred, text);
  REQUIRE(out.acronym_spans.size() == 2);
  CHECK(slice(text, out.acronym_spans[0]) == "GHS");
  CHECK(slice(text, out.acronym_spans[1]) == "NLP");  // unchanged
}

TEST_CASE("strip_enclosures drops links of dropped spans") {
  const std::string text = "() word";
  PredictionSet pred{"s", {Span{0, 2}}, {Span{3, 7}}, {{0, 0}}};
  const PredictionSet out = strip_enclosures(pred, text);
  CHECK(out.acronym_spans.empty());
  CHECK(out.pair_links.empty());
  CHECK(out.long_form_spans == pred.long_form_spans);
}

TEST_CASE("stopword long forms are removed, mixed ones kept") {
  const StopwordList& stopwords = StopwordList::builtin();
  const std::string text = "of the treaty (OT)";
  //                        0123456789012345678

  PredictionSet all_stop{"s", {}, {Span{0, 6}}, {}};  // "of the"
  const PredictionSet removed =
      drop_stopword_long_forms(all_stop, text, stopwords, "en");
  CHECK(removed.long_form_spans.empty());

  PredictionSet mixed{"s", {}, {Span{0, 13}}, {}};  // "of the treaty"
  const PredictionSet kept =
      drop_stopword_long_forms(mixed, text, stopwords, "en");
  CHECK(kept.long_form_spans == mixed.long_form_spans);

  const PredictionSet empty{"s", {}, {}, {}};
  CHECK(drop_stopword_long_forms(empty, text, stopwords, "en") == empty);
}

TEST_CASE("unknown languages fall back to English with a warning") {
  const StopwordList& stopwords = StopwordList::builtin();
  Diagnostics diag;
  const std::string text = "of the";
  PredictionSet pred{"s", {}, {Span{0, 6}}, {}};
  const PredictionSet out =
      drop_stopword_long_forms(pred, text, stopwords, "xx", &diag);
  CHECK(out.long_form_spans.empty());
  REQUIRE(diag.warnings.size() == 1);
  CHECK(diag.warnings[0].find("xx") != std::string::npos);
}

TEST_CASE("builtin stopword lists cover the task languages") {
  const StopwordList& s = StopwordList::builtin();
  for (const char* lang : {"en", "da", "fr", "es", "fa", "vi"}) {
    CHECK(s.by_language.count(lang) == 1);
    CHECK_FALSE(s.by_language.at(lang).empty());
  }
  CHECK(s.by_language.at("en").count("for") == 1);
  CHECK(s.by_language.at("en").count("the") == 1);
  CHECK(s.by_language.at("en").count("of") == 1);
}

TEST_CASE("post-processing is idempotent and shrink-only") {
  testing::Rng rng(43);
  const std::string text =
      "(GHS) of the for and some other words to fill out the line with "
      "content (NLP) [X] 'quoted' end.";
  const StopwordList& stopwords = StopwordList::builtin();
  const std::size_t text_len = uni::length(text);
  for (int i = 0; i < 500; ++i) {
    PredictionSet p = random_pred(rng, "s");
    for (Span& s : p.acronym_spans) s.end = std::min(s.end, text_len);
    for (Span& s : p.long_form_spans) s.end = std::min(s.end, text_len);

    const PredictionSet stripped = strip_enclosures(p, text);
    CHECK(strip_enclosures(stripped, text) == stripped);
    CHECK(no_span_grew(p, stripped));

    const PredictionSet dropped =
        drop_stopword_long_forms(p, text, stopwords, "en");
    CHECK(drop_stopword_long_forms(dropped, text, stopwords, "en") == dropped);
    CHECK(dropped.long_form_spans.size() <= p.long_form_spans.size());
    CHECK(dropped.acronym_spans == p.acronym_spans);
  }
}

TEST_CASE("stopword files override the builtin lists") {
  const auto path = std::filesystem::temp_directory_path() / "acro_stop.txt";
  {
    std::ofstream out(path);
    out << "# comment\nfoo\nBAR\n";
  }
  const StopwordList list = StopwordList::from_file(path, "en");
  CHECK(list.by_language.at("en").count("foo") == 1);
  CHECK(list.by_language.at("en").count("bar") == 1);  // lowercased
  std::filesystem::remove(path);
}

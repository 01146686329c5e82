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

#include "acro/scorer.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

#include <json.hpp>

namespace acro {

namespace {

using nlohmann::json;

std::vector<Span> sorted_unique(std::vector<Span> spans,
                                std::size_t* removed = nullptr) {
  std::sort(spans.begin(), spans.end());
  const auto last = std::unique(spans.begin(), spans.end());
  if (removed != nullptr) *removed += spans.end() - last;
  spans.erase(last, spans.end());
  return spans;
}

std::size_t exact_matches(const std::vector<Span>& pred,
                          const std::vector<Span>& gold) {
  // Both sorted and unique, so each gold span matches at most once.
  std::vector<Span> common;
  std::set_intersection(pred.begin(), pred.end(), gold.begin(), gold.end(),
                        std::back_inserter(common));
  return common.size();
}

void finalize(ClassScore& score) {
  score.precision = score.n_pred == 0
                        ? 0.0
                        : static_cast<double>(score.tp) / score.n_pred;
  score.recall = score.n_gold == 0
                     ? 0.0
                     : static_cast<double>(score.tp) / score.n_gold;
  score.f1 = (score.precision + score.recall) == 0.0
                 ? 0.0
                 : 2.0 * score.precision * score.recall /
                       (score.precision + score.recall);
}

double sample_f1(const std::vector<Span>& pred, const std::vector<Span>& gold) {
  ClassScore s;
  s.tp = exact_matches(pred, gold);
  s.n_pred = pred.size();
  s.n_gold = gold.size();
  finalize(s);
  return s.f1;
}

json class_to_json(const ClassScore& s) {
  return json{{"tp", s.tp},     {"n_pred", s.n_pred},
              {"n_gold", s.n_gold}, {"precision", s.precision},
              {"recall", s.recall}, {"f1", s.f1}};
}

ClassScore class_from_json(const json& j) {
  ClassScore s;
  s.tp = j.at("tp").get<std::size_t>();
  s.n_pred = j.at("n_pred").get<std::size_t>();
  s.n_gold = j.at("n_gold").get<std::size_t>();
  s.precision = j.at("precision").get<double>();
  s.recall = j.at("recall").get<double>();
  s.f1 = j.at("f1").get<double>();
  return s;
}

std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

Aggregate parse_aggregate(std::string_view name) {
  if (name == "macro-class") return Aggregate::MacroClass;
  if (name == "per-sample") return Aggregate::PerSample;
  throw ParseError("unknown aggregation '" + std::string(name) +
                   "' (want macro-class or per-sample)");
}

std::string_view aggregate_name(Aggregate aggregate) {
  return aggregate == Aggregate::MacroClass ? "macro-class" : "per-sample";
}

EvalReport score(const std::vector<Sample>& gold,
                 const std::vector<PredictionSet>& pred,
                 const ScoreOptions& options) {
  std::map<std::string, const PredictionSet*> by_id;
  for (const PredictionSet& p : pred) {
    if (!by_id.emplace(p.sample_id, &p).second)
      throw ValidationError("duplicate prediction for sample id '" +
                            p.sample_id + "'");
  }

  std::set<std::string> gold_ids;
  for (const Sample& s : gold) gold_ids.insert(s.id);
  std::vector<std::string> unknown;
  for (const PredictionSet& p : pred)
    if (gold_ids.count(p.sample_id) == 0) unknown.push_back(p.sample_id);
  if (!unknown.empty()) {
    std::string msg = "predictions for unknown sample ids:";
    for (const std::string& id : unknown) msg += " '" + id + "'";
    throw ValidationError(msg);
  }

  EvalReport eval;
  eval.aggregate = options.aggregate;

  struct Accum {
    ClassScore an, lf;
    double an_f1_sum = 0.0, lf_f1_sum = 0.0;
    std::size_t samples = 0;
  };
  Accum total;
  std::map<std::string, Accum> by_lang;

  static const std::vector<Span> kEmpty;
  for (const Sample& s : gold) {
    const PredictionSet* p =
        by_id.count(s.id) != 0 ? by_id.at(s.id) : nullptr;

    const std::vector<Span> gold_an = sorted_unique(s.acronym_spans);
    const std::vector<Span> gold_lf = sorted_unique(s.long_form_spans);
    const std::vector<Span> pred_an = sorted_unique(
        p != nullptr ? p->acronym_spans : kEmpty, &eval.duplicates_removed);
    const std::vector<Span> pred_lf = sorted_unique(
        p != nullptr ? p->long_form_spans : kEmpty, &eval.duplicates_removed);

    auto add = [&](Accum& acc) {
      acc.an.tp += exact_matches(pred_an, gold_an);
      acc.an.n_pred += pred_an.size();
      acc.an.n_gold += gold_an.size();
      acc.lf.tp += exact_matches(pred_lf, gold_lf);
      acc.lf.n_pred += pred_lf.size();
      acc.lf.n_gold += gold_lf.size();
      acc.an_f1_sum += sample_f1(pred_an, gold_an);
      acc.lf_f1_sum += sample_f1(pred_lf, gold_lf);
      acc.samples += 1;
    };
    add(total);
    if (options.per_language)
      add(by_lang[s.language.empty() ? "und" : s.language]);
  }

  auto fill = [&](const Accum& acc, ClassScore& an, ClassScore& lf,
                  double& macro) {
    an = acc.an;
    lf = acc.lf;
    finalize(an);
    finalize(lf);
    if (options.aggregate == Aggregate::PerSample && acc.samples > 0) {
      an.f1 = acc.an_f1_sum / static_cast<double>(acc.samples);
      lf.f1 = acc.lf_f1_sum / static_cast<double>(acc.samples);
    }
    macro = (an.f1 + lf.f1) / 2.0;
  };

  fill(total, eval.an, eval.lf, eval.macro_f1);
  for (const auto& [lang, acc] : by_lang) {
    LanguageScore ls;
    fill(acc, ls.an, ls.lf, ls.macro_f1);
    eval.per_language.emplace(lang, ls);
  }
  return eval;
}

std::string report(const EvalReport& eval, ReportFormat format) {
  if (format == ReportFormat::Json) {
    json j{{"aggregate", std::string(aggregate_name(eval.aggregate))},
           {"an", class_to_json(eval.an)},
           {"lf", class_to_json(eval.lf)},
           {"macro_f1", eval.macro_f1},
           {"duplicates_removed", eval.duplicates_removed}};
    if (!eval.per_language.empty()) {
      json langs = json::object();
      for (const auto& [lang, ls] : eval.per_language)
        langs[lang] = json{{"an", class_to_json(ls.an)},
                           {"lf", class_to_json(ls.lf)},
                           {"macro_f1", ls.macro_f1}};
      j["per_language"] = std::move(langs);
    }
    return j.dump(2) + "\n";
  }

  std::string out;
  auto row = [&](std::string_view label, const ClassScore& s) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "%-8.*s %8s %8s %8s %7zu %7zu %7zu\n",
                  static_cast<int>(label.size()), label.data(),
                  fmt4(s.precision).c_str(), fmt4(s.recall).c_str(),
                  fmt4(s.f1).c_str(), s.tp, s.n_pred, s.n_gold);
    out += buf;
  };
  char header[160];
  std::snprintf(header, sizeof(header), "%-8s %8s %8s %8s %7s %7s %7s\n",
                "class", "P", "R", "F1", "TP", "pred", "gold");
  out += header;
  row("AN", eval.an);
  row("LF", eval.lf);
  out += "macro-F1 " + fmt4(eval.macro_f1) + " (aggregate: " +
         std::string(aggregate_name(eval.aggregate)) + ")\n";
  if (eval.duplicates_removed > 0)
    out += "note: " + std::to_string(eval.duplicates_removed) +
           " duplicate predicted span(s) removed before counting\n";
  for (const auto& [lang, ls] : eval.per_language) {
    out += "[" + lang + "]\n";
    row("  AN", ls.an);
    row("  LF", ls.lf);
    out += "  macro-F1 " + fmt4(ls.macro_f1) + "\n";
  }
  return out;
}

EvalReport eval_from_json(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("eval JSON: ") + e.what());
  }
  EvalReport eval;
  eval.aggregate = parse_aggregate(j.at("aggregate").get<std::string>());
  eval.an = class_from_json(j.at("an"));
  eval.lf = class_from_json(j.at("lf"));
  eval.macro_f1 = j.at("macro_f1").get<double>();
  eval.duplicates_removed = j.value("duplicates_removed", std::size_t{0});
  if (j.contains("per_language")) {
    for (const auto& [lang, lj] : j.at("per_language").items()) {
      LanguageScore ls;
      ls.an = class_from_json(lj.at("an"));
      ls.lf = class_from_json(lj.at("lf"));
      ls.macro_f1 = lj.at("macro_f1").get<double>();
      eval.per_language.emplace(lang, ls);
    }
  }
  return eval;
}

}  // namespace acro

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

// acro: command-line front end for the acronym extraction toolkit.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "acro/augment.hpp"
#include "acro/corpus.hpp"
#include "acro/ensemble.hpp"
#include "acro/linter.hpp"
#include "acro/pipeline.hpp"
#include "acro/predictions.hpp"
#include "acro/rules.hpp"
#include "acro/scorer.hpp"
#include "acro/tagger.hpp"

namespace fs = std::filesystem;

namespace {

struct GlobalFlags {
  bool quiet = false;
  std::string config;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

void flush_warnings(const acro::Diagnostics& diag, bool quiet) {
  if (quiet) return;
  for (const std::string& w : diag.warnings)
    std::cerr << "warning: " << w << "\n";
}

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw acro::Error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw acro::Error("cannot open '" + path.string() + "' for writing");
  out << content;
}

acro::ParseOptions parse_options(const std::string& field_map,
                                 bool validate = true) {
  acro::ParseOptions opts;
  opts.validate = validate;
  if (!field_map.empty()) opts.fields = acro::FieldMap::parse(field_map);
  return opts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acronym / long-form extraction toolkit"};
  app.require_subcommand(1);

  GlobalFlags global;
  app.add_flag("--quiet", global.quiet, "suppress warnings and progress");
  app.add_option("--config", global.config, "pipeline config file");
  app.add_option("--seed", global.seed, "random seed (overrides config)")
      ->each([&](const std::string&) { global.seed_set = true; });

  // convert
  std::string conv_in, conv_out, conv_fields;
  bool conv_force = false;
  auto* convert = app.add_subcommand("convert", "dataset JSON to BIO file");
  convert->add_option("--in", conv_in, "dataset JSON")->required();
  convert->add_option("--out", conv_out, "BIO output path")->required();
  convert->add_option("--field-map", conv_fields,
                      "canonical=actual key remapping");
  convert->add_flag("--force", conv_force,
                    "acronym wins on AN/LF token conflicts");

  // lint
  std::string lint_in, lint_out, lint_fix, lint_out_data, lint_fields;
  auto* lint_cmd =
      app.add_subcommand("lint", "report dataset annotation noise");
  lint_cmd->add_option("--in", lint_in, "dataset JSON")->required();
  lint_cmd->add_option("--out", lint_out, "findings JSONL path");
  lint_cmd->add_option("--fix", lint_fix, "apply a fix (only: l002)");
  lint_cmd->add_option("--out-data", lint_out_data,
                       "cleaned dataset path (with --fix)");
  lint_cmd->add_option("--field-map", lint_fields, "key remapping");

  // harvest
  std::string harv_dir, harv_out, harv_skipped;
  std::size_t harv_min_pairs = 1, harv_limit = 0;
  auto* harvest_cmd = app.add_subcommand(
      "harvest", "mine training samples from article XML");
  harvest_cmd->add_option("--xml-dir", harv_dir, "directory of *.xml files")
      ->required();
  harvest_cmd->add_option("--out", harv_out, "dataset JSON output")
      ->required();
  harvest_cmd->add_option("--min-pairs", harv_min_pairs,
                          "required short+long co-occurrences");
  harvest_cmd->add_option("--limit", harv_limit, "max articles (0 = all)");
  harvest_cmd->add_option("--skipped", harv_skipped,
                          "skipped-article manifest (JSONL)");

  // train
  std::string train_in, train_out;
  acro::TaggerConfig train_cfg;
  auto* train_cmd = app.add_subcommand("train", "train the sequence tagger");
  train_cmd->add_option("--in", train_in, "training BIO file")->required();
  train_cmd->add_option("--out", train_out, "model output path")->required();
  train_cmd->add_option("--epochs", train_cfg.epochs, "training epochs");
  train_cmd->add_option("--window", train_cfg.window, "feature window radius");
  train_cmd->add_option("--max-seq", train_cfg.max_seq_tokens,
                        "hard sequence cut");
  bool train_no_shuffle = false;
  train_cmd->add_flag("--no-shuffle", train_no_shuffle,
                      "keep corpus order between epochs");

  // predict
  std::string pred_model, pred_in, pred_out, pred_fields;
  auto* predict_cmd =
      app.add_subcommand("predict", "tag a dataset with a trained model");
  predict_cmd->add_option("--model", pred_model, "model file")->required();
  predict_cmd->add_option("--in", pred_in, "dataset JSON")->required();
  predict_cmd->add_option("--out", pred_out, "prediction JSON")->required();
  predict_cmd->add_option("--field-map", pred_fields, "key remapping");

  // extract-rules
  std::string rules_mode = "baseline", rules_in, rules_out, rules_fields;
  auto* rules_cmd =
      app.add_subcommand("extract-rules", "run a deterministic extractor");
  rules_cmd->add_option("--mode", rules_mode, "baseline or enhanced")
      ->check(CLI::IsMember({"baseline", "enhanced"}));
  rules_cmd->add_option("--in", rules_in, "dataset JSON")->required();
  rules_cmd->add_option("--out", rules_out, "prediction JSON")->required();
  rules_cmd->add_option("--field-map", rules_fields, "key remapping");

  // merge
  std::string merge_primary, merge_secondary, merge_out;
  std::string merge_policy = "union-dedupe";
  auto* merge_cmd =
      app.add_subcommand("merge", "combine two prediction files");
  merge_cmd->add_option("--primary", merge_primary, "primary predictions")
      ->required();
  merge_cmd->add_option("--secondary", merge_secondary,
                        "secondary predictions")
      ->required();
  merge_cmd->add_option("--policy", merge_policy,
                        "union-dedupe | primary-wins | concat-raw");
  merge_cmd->add_option("--out", merge_out, "merged predictions")->required();

  // postprocess
  std::string post_in, post_data, post_stopwords, post_out, post_lang,
      post_fields;
  auto* post_cmd = app.add_subcommand(
      "postprocess", "strip enclosures and stopword-only long forms");
  post_cmd->add_option("--in", post_in, "prediction JSON")->required();
  post_cmd->add_option("--data", post_data, "dataset JSON (for the texts)")
      ->required();
  post_cmd->add_option("--stopwords", post_stopwords,
                       "stopword file (one word per line)");
  post_cmd->add_option("--out", post_out, "prediction JSON output")
      ->required();
  post_cmd->add_option("--language", post_lang,
                       "fallback language code (default en)");
  post_cmd->add_option("--field-map", post_fields, "key remapping");

  // score
  std::string score_gold, score_pred, score_fields;
  std::string score_aggregate = "macro-class", score_format = "plain";
  bool score_per_language = false;
  auto* score_cmd =
      app.add_subcommand("score", "span-level P/R/F1 against gold data");
  score_cmd->add_option("--gold", score_gold, "gold dataset JSON")
      ->required();
  score_cmd->add_option("--pred", score_pred, "prediction JSON")->required();
  score_cmd->add_option("--aggregate", score_aggregate,
                        "macro-class | per-sample");
  score_cmd->add_option("--format", score_format, "plain | json")
      ->check(CLI::IsMember({"plain", "json"}));
  score_cmd->add_flag("--per-language", score_per_language,
                      "add a per-language breakdown");
  score_cmd->add_option("--field-map", score_fields, "key remapping");

  // report
  std::string report_in;
  auto* report_cmd =
      app.add_subcommand("report", "render a saved JSON eval as text");
  report_cmd->add_option("--in", report_in, "eval JSON file")->required();

  // pipeline
  std::string pl_train, pl_test, pl_dev, pl_out_dir;
  auto* pipeline_cmd =
      app.add_subcommand("pipeline", "run the whole pipeline from a config");
  pipeline_cmd->add_option("--train", pl_train, "override train path");
  pipeline_cmd->add_option("--test", pl_test, "override test path");
  pipeline_cmd->add_option("--dev", pl_dev, "override dev path");
  pipeline_cmd->add_option("--out-dir", pl_out_dir, "override output dir");

  // Global flags (--seed, --config, --quiet) are accepted after the
  // subcommand name as well.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) {
         return true;
       }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  acro::Diagnostics diag;
  try {
    if (convert->parsed()) {
      auto samples =
          acro::read_dataset(conv_in, parse_options(conv_fields), &diag);
      std::vector<acro::TaggedSequence> seqs;
      seqs.reserve(samples.size());
      acro::BioOptions opts;
      opts.acronym_wins = conv_force;
      for (const acro::Sample& s : samples)
        seqs.push_back(acro::to_bio(s, opts, &diag));
      acro::write_bio_file(conv_out, seqs);
    } else if (lint_cmd->parsed()) {
      if (!lint_fix.empty() && lint_fix != "l002" && lint_fix != "L002")
        throw acro::Error("unsupported --fix '" + lint_fix +
                          "' (only l002 is available)");
      auto samples = acro::read_dataset(
          lint_in, parse_options(lint_fields, /*validate=*/false), &diag);
      acro::LintSummary summary = acro::lint_corpus(samples);
      if (!lint_out.empty())
        write_text_file(lint_out,
                        acro::findings_to_jsonl(summary.findings));
      std::cout << "samples: " << summary.total_samples
                << "  flagged: " << summary.flagged_samples << "\n";
      for (const auto& [rule, count] : summary.counts)
        std::cout << acro::lint_rule_name(rule) << ": " << count << "\n";
      if (!lint_fix.empty()) {
        if (lint_out_data.empty())
          throw acro::Error("--fix needs --out-data");
        acro::write_dataset(lint_out_data, acro::fix_l002(samples, &diag));
      }
    } else if (harvest_cmd->parsed()) {
      // One (article_id, samples) batch per article; batches sort by
      // article id while samples keep their sentence-ordinal order.
      std::vector<std::pair<std::string, std::vector<acro::Sample>>> batches;
      std::string skipped;
      std::size_t processed = 0;
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(harv_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".xml")
          files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      for (const fs::path& file : files) {
        if (harv_limit > 0 && processed >= harv_limit) break;
        ++processed;
        if (!global.quiet)
          std::cerr << "[harvest] " << file.filename().string() << "\n";
        acro::ArticleRecord article;
        try {
          article = acro::parse_article(read_text_file(file), &diag);
        } catch (const acro::ParseError& e) {
          skipped += nlohmann::json{{"file", file.filename().string()},
                                    {"reason", e.what()}}
                         .dump() +
                     "\n";
          continue;
        }
        if (article.article_id.empty())
          article.article_id = file.stem().string();
        if (article.abbrevs.empty()) {
          skipped += nlohmann::json{{"file", file.filename().string()},
                                    {"reason", "no abbreviation section"}}
                         .dump() +
                     "\n";
          continue;
        }
        acro::HarvestOptions opts;
        opts.min_pairs = harv_min_pairs;
        auto samples = acro::harvest(article, opts, &diag);
        if (samples.empty()) {
          skipped += nlohmann::json{{"file", file.filename().string()},
                                    {"reason", "no qualifying sentences"}}
                         .dump() +
                     "\n";
          continue;
        }
        batches.emplace_back(article.article_id, std::move(samples));
      }
      std::sort(batches.begin(), batches.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      std::vector<acro::Sample> all;
      for (auto& [id, samples] : batches)
        for (acro::Sample& s : samples) all.push_back(std::move(s));
      acro::write_dataset(harv_out, all);
      if (!harv_skipped.empty()) write_text_file(harv_skipped, skipped);
      if (!global.quiet)
        std::cerr << "[harvest] " << all.size() << " samples from "
                  << processed << " articles\n";
    } else if (train_cmd->parsed()) {
      if (global.seed_set) train_cfg.seed = global.seed;
      train_cfg.shuffle = !train_no_shuffle;
      auto corpus = acro::read_bio_file(train_in);
      acro::TaggerModel model = acro::train(corpus, train_cfg, &diag);
      acro::save_model(train_out, model);
    } else if (predict_cmd->parsed()) {
      acro::TaggerModel model = acro::load_model(pred_model);
      auto samples =
          acro::read_dataset(pred_in, parse_options(pred_fields), &diag);
      std::vector<acro::PredictionSet> preds;
      preds.reserve(samples.size());
      for (const acro::Sample& s : samples) {
        auto tagged = acro::predict(model, acro::tokenize(s.text), s.id);
        auto [an, lf] = acro::from_bio(tagged);
        preds.push_back(
            acro::PredictionSet{s.id, std::move(an), std::move(lf), {}});
      }
      acro::write_predictions(pred_out, preds);
    } else if (rules_cmd->parsed()) {
      auto samples =
          acro::read_dataset(rules_in, parse_options(rules_fields), &diag);
      std::vector<acro::PredictionSet> preds;
      preds.reserve(samples.size());
      for (const acro::Sample& s : samples) {
        const auto tokens = acro::tokenize(s.text);
        acro::PredictionSet p = rules_mode == "enhanced"
                                    ? acro::extract_enhanced(s.text, tokens)
                                    : acro::extract_baseline(s.text, tokens);
        p.sample_id = s.id;
        preds.push_back(std::move(p));
      }
      acro::write_predictions(rules_out, preds);
    } else if (merge_cmd->parsed()) {
      const acro::MergePolicy policy = acro::parse_merge_policy(merge_policy);
      auto primary = acro::read_predictions(merge_primary);
      auto secondary = acro::read_predictions(merge_secondary);
      std::map<std::string, const acro::PredictionSet*> by_id;
      for (const auto& p : secondary) by_id.emplace(p.sample_id, &p);
      std::vector<acro::PredictionSet> merged;
      merged.reserve(primary.size());
      std::vector<std::string> seen;
      for (const auto& p : primary) {
        auto it = by_id.find(p.sample_id);
        const acro::PredictionSet empty{p.sample_id, {}, {}, {}};
        merged.push_back(acro::merge(
            p, it == by_id.end() ? empty : *it->second, policy));
        seen.push_back(p.sample_id);
      }
      for (const auto& p : secondary) {
        if (std::find(seen.begin(), seen.end(), p.sample_id) != seen.end())
          continue;
        const acro::PredictionSet empty{p.sample_id, {}, {}, {}};
        merged.push_back(acro::merge(empty, p, policy));
      }
      acro::write_predictions(merge_out, merged);
    } else if (post_cmd->parsed()) {
      auto preds = acro::read_predictions(post_in);
      auto samples =
          acro::read_dataset(post_data, parse_options(post_fields), &diag);
      std::map<std::string, const acro::Sample*> by_id;
      for (const auto& s : samples) by_id.emplace(s.id, &s);
      const std::string fallback_lang =
          post_lang.empty() ? "en" : post_lang;
      const acro::StopwordList stopwords =
          post_stopwords.empty()
              ? acro::StopwordList::builtin()
              : acro::StopwordList::from_file(post_stopwords, fallback_lang);
      for (auto& p : preds) {
        auto it = by_id.find(p.sample_id);
        if (it == by_id.end())
          throw acro::ValidationError("prediction for unknown sample id '" +
                                      p.sample_id + "'");
        const acro::Sample& s = *it->second;
        const std::string lang =
            s.language.empty() ? fallback_lang : s.language;
        p = acro::strip_enclosures(p, s.text);
        p = acro::drop_stopword_long_forms(p, s.text, stopwords, lang, &diag);
      }
      acro::write_predictions(post_out, preds);
    } else if (score_cmd->parsed()) {
      auto gold =
          acro::read_dataset(score_gold, parse_options(score_fields), &diag);
      auto preds = acro::read_predictions(score_pred);
      acro::ScoreOptions opts;
      opts.aggregate = acro::parse_aggregate(score_aggregate);
      opts.per_language = score_per_language;
      acro::EvalReport eval = acro::score(gold, preds, opts);
      std::cout << acro::report(eval, score_format == "json"
                                          ? acro::ReportFormat::Json
                                          : acro::ReportFormat::Plain);
    } else if (report_cmd->parsed()) {
      acro::EvalReport eval =
          acro::eval_from_json(read_text_file(report_in));
      std::cout << acro::report(eval, acro::ReportFormat::Plain);
    } else if (pipeline_cmd->parsed()) {
      if (global.config.empty())
        throw acro::Error("pipeline needs --config");
      acro::PipelineConfig config =
          acro::PipelineConfig::from_file(global.config);
      if (!pl_train.empty()) config.train = pl_train;
      if (!pl_test.empty()) config.test = pl_test;
      if (!pl_dev.empty()) config.dev = pl_dev;
      if (!pl_out_dir.empty()) config.out_dir = pl_out_dir;
      if (global.seed_set) config.tagger.seed = global.seed;
      acro::PipelineResult result =
          acro::run_pipeline(config, &diag, global.quiet);
      std::cout << acro::report(result.eval, acro::ReportFormat::Plain);
      if (result.dev_eval) {
        std::cout << "[dev]\n"
                  << acro::report(*result.dev_eval, acro::ReportFormat::Plain);
      }
    }
  } catch (const std::exception& e) {
    flush_warnings(diag, global.quiet);
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  flush_warnings(diag, global.quiet);
  return 0;
}

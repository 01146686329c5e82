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

#include "acro/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>

#include "acro/augment.hpp"
#include "acro/rules.hpp"

namespace acro {

namespace {

namespace fs = std::filesystem;

std::string trim(std::string s) {
  const auto issp = [](unsigned char c) { return c == ' ' || c == '\t'; };
  while (!s.empty() && issp(s.back())) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && issp(s[i])) ++i;
  return s.substr(i);
}

template <typename F>
auto stage(std::string_view name, bool quiet, F&& body) {
  if (!quiet) std::cerr << "[pipeline] " << name << "\n";
  try {
    return body();
  } catch (const Error& e) {
    throw Error("stage " + std::string(name) + ": " + e.what());
  }
}

// Sorted *.xml under a directory; deterministic regardless of readdir order.
std::vector<fs::path> xml_files(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".xml")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

PipelineConfig PipelineConfig::from_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config '" + path.string() + "'");
  const fs::path base = path.has_parent_path() ? path.parent_path() : ".";

  auto resolve = [&](const std::string& value) -> fs::path {
    fs::path p(value);
    return p.is_absolute() ? p : base / p;
  };

  PipelineConfig config;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ParseError(path.string() + ":" + std::to_string(line_no) +
                       ": expected 'key = value'");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));

    try {
      if (key == "train") config.train = resolve(value);
      else if (key == "test") config.test = resolve(value);
      else if (key == "dev") config.dev = resolve(value);
      else if (key == "out_dir") config.out_dir = resolve(value);
      else if (key == "stopwords") config.stopwords = resolve(value);
      else if (key == "xml_dir") config.xml_dir = resolve(value);
      else if (key == "harvest_limit") config.harvest_limit = std::stoul(value);
      else if (key == "min_pairs") config.min_pairs = std::stoul(value);
      else if (key == "policy") config.policy = parse_merge_policy(value);
      else if (key == "aggregate") config.aggregate = parse_aggregate(value);
      else if (key == "seed") config.tagger.seed = std::stoull(value);
      else if (key == "epochs")
        config.tagger.epochs = static_cast<std::uint32_t>(std::stoul(value));
      else if (key == "window")
        config.tagger.window = static_cast<std::uint32_t>(std::stoul(value));
      else if (key == "max_seq_tokens")
        config.tagger.max_seq_tokens =
            static_cast<std::uint32_t>(std::stoul(value));
      else if (key == "shuffle")
        config.tagger.shuffle = value == "true" || value == "1";
      else if (key == "language") config.language = value;
      else if (key == "field_map") config.field_map = value;
      else if (key == "force")
        config.force = value == "true" || value == "1";
      else
        throw ParseError("unknown key '" + key + "'");
    } catch (const std::invalid_argument&) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) +
                       ": bad value for '" + key + "'");
    }
  }
  return config;
}

void PipelineConfig::validate() const {
  if (train.empty()) throw Error("pipeline config missing field 'train'");
  if (test.empty()) throw Error("pipeline config missing field 'test'");
  if (out_dir.empty()) throw Error("pipeline config missing field 'out_dir'");
}

PipelineResult run_pipeline(const PipelineConfig& config, Diagnostics* diag,
                            bool quiet) {
  config.validate();
  fs::create_directories(config.out_dir);

  ParseOptions parse_opts;
  if (!config.field_map.empty())
    parse_opts.fields = FieldMap::parse(config.field_map);

  // convert: training data (optionally concatenated with harvested
  // samples) to BIO.
  std::vector<TaggedSequence> train_bio = stage("convert", quiet, [&] {
    std::vector<Sample> train_samples =
        read_dataset(config.train, parse_opts, diag);

    if (!config.xml_dir.empty()) {
      std::vector<Sample> harvested = stage("harvest", quiet, [&] {
        // Articles sort by id; within an article the sentence-ordinal
        // order from harvest() is already the documented one.
        std::vector<std::pair<std::string, std::vector<Sample>>> batches;
        std::size_t processed = 0;
        for (const fs::path& file : xml_files(config.xml_dir)) {
          if (config.harvest_limit > 0 && processed >= config.harvest_limit)
            break;
          ++processed;
          std::ifstream in(file, std::ios::binary);
          std::string xml((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
          ArticleRecord article = parse_article(xml, diag);
          if (article.article_id.empty())
            article.article_id = file.stem().string();
          if (article.abbrevs.empty()) continue;
          HarvestOptions opts;
          opts.min_pairs = config.min_pairs;
          batches.emplace_back(article.article_id,
                               harvest(article, opts, diag));
        }
        std::sort(batches.begin(), batches.end(),
                  [](const auto& a, const auto& b) {
                    return a.first < b.first;
                  });
        std::vector<Sample> all;
        for (auto& [id, samples] : batches)
          for (Sample& s : samples) all.push_back(std::move(s));
        return all;
      });
      train_samples.insert(train_samples.end(), harvested.begin(),
                           harvested.end());
      write_dataset(config.out_dir / "train_combined.json", train_samples);
    }

    BioOptions bio_opts;
    bio_opts.acronym_wins = config.force;
    std::vector<TaggedSequence> seqs;
    seqs.reserve(train_samples.size());
    for (const Sample& s : train_samples)
      seqs.push_back(to_bio(s, bio_opts, diag));
    write_bio_file(config.out_dir / "train.bio", seqs);
    return seqs;
  });

  // train
  const TaggerModel model = stage("train", quiet, [&] {
    TaggerModel m = train(train_bio, config.tagger, diag);
    save_model(config.out_dir / "model.bin", m);
    return m;
  });

  auto evaluate_split = [&](const fs::path& data_path,
                            const std::string& prefix) {
    const std::vector<Sample> samples =
        read_dataset(data_path, parse_opts, diag);

    // predict: the trained tagger is the primary method.
    std::vector<PredictionSet> primary = stage("predict", quiet, [&] {
      std::vector<PredictionSet> preds;
      preds.reserve(samples.size());
      for (const Sample& s : samples) {
        const TaggedSequence tagged = predict(model, tokenize(s.text), s.id);
        auto [an, lf] = from_bio(tagged);
        preds.push_back(PredictionSet{s.id, std::move(an), std::move(lf), {}});
      }
      write_predictions(config.out_dir / (prefix + "pred_tagger.json"), preds);
      return preds;
    });

    // extract-rules: the enhanced matcher is the secondary method.
    std::vector<PredictionSet> secondary =
        stage("extract-rules", quiet, [&] {
          std::vector<PredictionSet> preds;
          preds.reserve(samples.size());
          for (const Sample& s : samples) {
            PredictionSet p = extract_enhanced(s.text, tokenize(s.text));
            p.sample_id = s.id;
            preds.push_back(std::move(p));
          }
          write_predictions(config.out_dir / (prefix + "pred_rules.json"),
                            preds);
          return preds;
        });

    std::vector<PredictionSet> merged = stage("merge", quiet, [&] {
      std::vector<PredictionSet> out;
      out.reserve(primary.size());
      for (std::size_t i = 0; i < primary.size(); ++i)
        out.push_back(merge(primary[i], secondary[i], config.policy));
      write_predictions(config.out_dir / (prefix + "merged.json"), out);
      return out;
    });

    std::vector<PredictionSet> final_preds =
        stage("postprocess", quiet, [&] {
          const StopwordList custom =
              config.stopwords.empty()
                  ? StopwordList{}
                  : StopwordList::from_file(config.stopwords,
                                            config.language);
          const StopwordList& stopwords =
              config.stopwords.empty() ? StopwordList::builtin() : custom;
          std::vector<PredictionSet> out;
          out.reserve(merged.size());
          for (std::size_t i = 0; i < merged.size(); ++i) {
            const Sample& s = samples[i];
            const std::string lang =
                s.language.empty() ? config.language : s.language;
            PredictionSet p = strip_enclosures(merged[i], s.text);
            p = drop_stopword_long_forms(p, s.text, stopwords, lang, diag);
            out.push_back(std::move(p));
          }
          write_predictions(config.out_dir / (prefix + "final.json"), out);
          return out;
        });

    return stage("score", quiet, [&] {
      ScoreOptions opts;
      opts.aggregate = config.aggregate;
      EvalReport eval = score(samples, final_preds, opts);
      std::ofstream out(config.out_dir / (prefix + "eval.json"));
      out << report(eval, ReportFormat::Json);
      return eval;
    });
  };

  PipelineResult result;
  result.eval = evaluate_split(config.test, "");
  if (!config.dev.empty()) result.dev_eval = evaluate_split(config.dev, "dev_");
  return result;
}

}  // namespace acro

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

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "acro/corpus.hpp"
#include "acro/predictions.hpp"
#include "acro/unicode.hpp"

namespace acro {

namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out << content;
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

Span parse_span(const json& j, const std::string& sample_id,
                const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer())
    throw ParseError("sample '" + sample_id + "': field '" + field +
                     "' must hold two-integer [start, end) pairs");
  const auto a = j[0].get<std::int64_t>();
  const auto b = j[1].get<std::int64_t>();
  if (a < 0 || b < 0)
    throw ValidationError("sample '" + sample_id + "': negative offset in '" +
                          field + "'");
  return Span{static_cast<std::size_t>(a), static_cast<std::size_t>(b)};
}

std::vector<Span> parse_span_list(const json& obj, const std::string& key,
                                  const std::string& sample_id,
                                  Diagnostics* diag) {
  if (!obj.contains(key))
    throw ParseError("sample '" + sample_id + "': missing field '" + key +
                     "'");
  const json& arr = obj.at(key);
  if (!arr.is_array())
    throw ParseError("sample '" + sample_id + "': field '" + key +
                     "' must be an array");
  std::vector<Span> spans;
  for (const json& item : arr) {
    Span s = parse_span(item, sample_id, key);
    if (std::find(spans.begin(), spans.end(), s) != spans.end()) {
      warn(diag, "sample '" + sample_id + "': duplicate span [" +
                     std::to_string(s.start) + "," + std::to_string(s.end) +
                     ") in '" + key + "' dropped");
      continue;
    }
    spans.push_back(s);
  }
  return spans;
}

json span_list_to_json(const std::vector<Span>& spans) {
  json arr = json::array();
  for (const Span& s : spans) arr.push_back({s.start, s.end});
  return arr;
}

}  // namespace

// --- BIO files ---------------------------------------------------------

std::string write_bio_string(const std::vector<TaggedSequence>& seqs) {
  std::string out;
  for (const TaggedSequence& seq : seqs) {
    out += "# id = " + seq.sample_id + "\n";
    for (std::size_t i = 0; i < seq.tokens.size(); ++i) {
      out += seq.tokens[i].form;
      out += '\t';
      out += tag_name(seq.tags[i]);
      out += '\n';
    }
    out += '\n';
  }
  return out;
}

void write_bio_file(const std::filesystem::path& path,
                    const std::vector<TaggedSequence>& seqs) {
  write_file(path, write_bio_string(seqs));
}

std::vector<TaggedSequence> read_bio_string(std::string_view content,
                                            std::string_view source) {
  std::vector<TaggedSequence> seqs;
  TaggedSequence current;
  std::size_t pos = 0;  // canonical layout: tokens joined by one space
  bool open = false;

  auto flush = [&] {
    if (open) seqs.push_back(std::move(current));
    current = TaggedSequence{};
    pos = 0;
    open = false;
  };

  std::size_t line_no = 0;
  std::size_t offset = 0;
  while (offset <= content.size()) {
    std::size_t eol = content.find('\n', offset);
    if (eol == std::string_view::npos) {
      if (offset == content.size()) break;
      eol = content.size();
    }
    std::string_view line = content.substr(offset, eol - offset);
    offset = eol + 1;
    ++line_no;

    if (line.empty()) {
      flush();
      continue;
    }
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      if (line.starts_with("# id = ") || line == "# id =") {
        flush();
        current.sample_id = line.size() > 7 ? std::string(line.substr(7)) : "";
        open = true;
        continue;
      }
      throw ParseError(std::string(source) + ":" + std::to_string(line_no) +
                       ": expected 'form<TAB>tag', got '" + std::string(line) +
                       "'");
    }
    std::string form(line.substr(0, tab));
    Tag tag;
    try {
      tag = parse_tag(line.substr(tab + 1));
    } catch (const ParseError& e) {
      throw ParseError(std::string(source) + ":" + std::to_string(line_no) +
                       ": " + e.what());
    }
    const std::size_t len = uni::length(form);
    current.tokens.push_back(Token{std::move(form), Span{pos, pos + len}});
    current.tags.push_back(tag);
    pos += len + 1;
    open = true;
  }
  flush();
  return seqs;
}

std::vector<TaggedSequence> read_bio_file(const std::filesystem::path& path) {
  return read_bio_string(read_file(path), path.string());
}

// --- Dataset JSON -------------------------------------------------------

FieldMap FieldMap::parse(std::string_view mapping) {
  FieldMap map;
  std::size_t start = 0;
  while (start <= mapping.size()) {
    std::size_t comma = mapping.find(',', start);
    if (comma == std::string_view::npos) comma = mapping.size();
    std::string_view entry = mapping.substr(start, comma - start);
    start = comma + 1;
    if (entry.empty()) continue;
    const std::size_t eq = entry.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("bad --field-map entry '" + std::string(entry) +
                       "' (want canonical=actual)");
    const std::string_view key = entry.substr(0, eq);
    const std::string value(entry.substr(eq + 1));
    if (value.empty())
      throw ParseError("bad --field-map entry '" + std::string(entry) +
                       "': empty replacement");
    if (key == "id") map.id = value;
    else if (key == "text") map.text = value;
    else if (key == "acronyms") map.acronyms = value;
    else if (key == "long_forms") map.long_forms = value;
    else if (key == "language") map.language = value;
    else
      throw ParseError("unknown --field-map key '" + std::string(key) + "'");
  }
  return map;
}

std::vector<Sample> parse_dataset(std::string_view json_text,
                                  const ParseOptions& options,
                                  Diagnostics* diag) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("dataset JSON: ") + e.what());
  }
  if (!root.is_array())
    throw ParseError("dataset JSON: expected a top-level array of objects");

  const FieldMap& f = options.fields;
  std::vector<Sample> samples;
  std::set<std::string> seen_ids;
  samples.reserve(root.size());
  for (std::size_t i = 0; i < root.size(); ++i) {
    const json& obj = root[i];
    if (!obj.is_object())
      throw ParseError("dataset JSON: element " + std::to_string(i) +
                       " is not an object");
    Sample sample;
    if (!obj.contains(f.id) || !obj.at(f.id).is_string())
      throw ParseError("dataset JSON: element " + std::to_string(i) +
                       " missing string field '" + f.id + "'");
    sample.id = obj.at(f.id).get<std::string>();
    if (!obj.contains(f.text) || !obj.at(f.text).is_string())
      throw ParseError("sample '" + sample.id + "': missing string field '" +
                       f.text + "'");
    sample.text = obj.at(f.text).get<std::string>();
    sample.acronym_spans = parse_span_list(obj, f.acronyms, sample.id, diag);
    sample.long_form_spans =
        parse_span_list(obj, f.long_forms, sample.id, diag);
    if (obj.contains(f.language) && obj.at(f.language).is_string())
      sample.language = obj.at(f.language).get<std::string>();

    if (options.validate) {
      const std::size_t len = uni::length(sample.text);
      for (const auto* field :
           {&sample.acronym_spans, &sample.long_form_spans}) {
        for (const Span& s : *field) {
          if (s.start >= s.end || s.end > len)
            throw ValidationError(
                "sample '" + sample.id + "': span [" +
                std::to_string(s.start) + "," + std::to_string(s.end) +
                ") out of bounds (text length " + std::to_string(len) + ")");
        }
      }
      if (!seen_ids.insert(sample.id).second)
        throw ValidationError("duplicate sample id '" + sample.id + "'");
    }
    samples.push_back(std::move(sample));
  }
  return samples;
}

std::vector<Sample> read_dataset(const std::filesystem::path& path,
                                 const ParseOptions& options,
                                 Diagnostics* diag) {
  try {
    return parse_dataset(read_file(path), options, diag);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string dataset_to_json(const std::vector<Sample>& samples) {
  json arr = json::array();
  for (const Sample& s : samples) {
    json obj{{"id", s.id},
             {"text", s.text},
             {"acronyms", span_list_to_json(s.acronym_spans)},
             {"long_forms", span_list_to_json(s.long_form_spans)}};
    if (!s.language.empty()) obj["language"] = s.language;
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

void write_dataset(const std::filesystem::path& path,
                   const std::vector<Sample>& samples) {
  write_file(path, dataset_to_json(samples));
}

// --- Prediction JSON ----------------------------------------------------

std::vector<PredictionSet> parse_predictions(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("prediction JSON: ") + e.what());
  }
  if (!root.is_array())
    throw ParseError("prediction JSON: expected a top-level array");

  std::vector<PredictionSet> preds;
  preds.reserve(root.size());
  for (std::size_t i = 0; i < root.size(); ++i) {
    const json& obj = root[i];
    if (!obj.is_object() || !obj.contains("id") || !obj.at("id").is_string())
      throw ParseError("prediction JSON: element " + std::to_string(i) +
                       " missing string field 'id'");
    PredictionSet p;
    p.sample_id = obj.at("id").get<std::string>();
    p.acronym_spans = parse_span_list(obj, "acronyms", p.sample_id, nullptr);
    p.long_form_spans =
        parse_span_list(obj, "long_forms", p.sample_id, nullptr);
    if (obj.contains("pairs")) {
      for (const json& pair : obj.at("pairs")) {
        if (!pair.is_array() || pair.size() != 2)
          throw ParseError("sample '" + p.sample_id +
                           "': 'pairs' entries must be [acronym_index, "
                           "long_form_index]");
        const auto a = pair[0].get<std::size_t>();
        const auto l = pair[1].get<std::size_t>();
        if (a >= p.acronym_spans.size() || l >= p.long_form_spans.size())
          throw ParseError("sample '" + p.sample_id +
                           "': pair index out of range");
        p.pair_links.emplace_back(a, l);
      }
    }
    preds.push_back(std::move(p));
  }
  return preds;
}

std::vector<PredictionSet> read_predictions(
    const std::filesystem::path& path) {
  try {
    return parse_predictions(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string predictions_to_json(const std::vector<PredictionSet>& preds) {
  json arr = json::array();
  for (const PredictionSet& p : preds) {
    json obj{{"id", p.sample_id},
             {"acronyms", span_list_to_json(p.acronym_spans)},
             {"long_forms", span_list_to_json(p.long_form_spans)}};
    if (!p.pair_links.empty()) {
      json pairs = json::array();
      for (const auto& [a, l] : p.pair_links) pairs.push_back({a, l});
      obj["pairs"] = std::move(pairs);
    }
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

void write_predictions(const std::filesystem::path& path,
                       const std::vector<PredictionSet>& preds) {
  write_file(path, predictions_to_json(preds));
}

}  // namespace acro

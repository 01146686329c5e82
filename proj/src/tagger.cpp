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

#include "acro/tagger.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <random>
#include <sstream>

#include "acro/unicode.hpp"

namespace acro {

namespace {

constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;
constexpr char kMagic[8] = {'A', 'C', 'R', 'O', 'M', 'D', 'L', '1'};

const char* kPrevTagNames[kNumTags + 1] = {"O", "B-AN", "I-AN",
                                           "B-LF", "I-LF", "BOS"};

std::uint64_t prev_tag_feature(std::size_t prev) {
  return feature_hash(std::string("prev|") + kPrevTagNames[prev]);
}

// Tokens strictly inside a ( ... ) pair, parens themselves excluded.
std::vector<bool> inside_parens(const std::vector<Token>& tokens) {
  std::vector<bool> inside(tokens.size(), false);
  std::size_t depth = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].form == ")" && depth > 0) --depth;
    inside[i] = depth > 0;
    if (tokens[i].form == "(") ++depth;
  }
  return inside;
}

std::string affix(const std::u32string& cps, bool prefix) {
  const std::size_t n = std::min<std::size_t>(3, cps.size());
  return uni::encode_utf8(prefix
                              ? std::u32string_view(cps).substr(0, n)
                              : std::u32string_view(cps).substr(cps.size() - n));
}

// Deterministic Fisher-Yates; std::shuffle's draw is implementation
// defined, which would break cross-platform model identity.
void shuffle_indices(std::vector<std::size_t>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rng() % i]);
}

std::size_t argmax_tag(const TagWeights& scores) {
  std::size_t best = 0;
  for (std::size_t t = 1; t < kNumTags; ++t)
    if (scores[t] > scores[best]) best = t;
  return best;
}

TagWeights score_tags(const std::unordered_map<std::uint64_t, TagWeights>& w,
                      const FeatureVector& feats, std::uint64_t prev_feat) {
  TagWeights scores{};
  auto add = [&](std::uint64_t id) {
    auto it = w.find(id);
    if (it == w.end()) return;
    for (std::size_t t = 0; t < kNumTags; ++t) scores[t] += it->second[t];
  };
  for (std::uint64_t id : feats) add(id);
  add(prev_feat);
  return scores;
}

// Splits sequences longer than the hard cut into independent chunks;
// per-chunk tags are repaired since a cut can orphan an I-X.
std::vector<TaggedSequence> hard_cut(const std::vector<TaggedSequence>& corpus,
                                     std::size_t max_tokens,
                                     Diagnostics* diag) {
  std::vector<TaggedSequence> out;
  out.reserve(corpus.size());
  for (const TaggedSequence& seq : corpus) {
    if (seq.tokens.size() != seq.tags.size())
      throw ValidationError("sequence '" + seq.sample_id +
                            "': token/tag count mismatch");
    if (seq.tokens.size() <= max_tokens) {
      out.push_back(seq);
      continue;
    }
    warn(diag, "sequence '" + seq.sample_id + "' has " +
                   std::to_string(seq.tokens.size()) +
                   " tokens; splitting at " + std::to_string(max_tokens));
    for (std::size_t start = 0; start < seq.tokens.size();
         start += max_tokens) {
      const std::size_t end =
          std::min(start + max_tokens, seq.tokens.size());
      TaggedSequence chunk;
      chunk.sample_id = seq.sample_id;
      chunk.tokens.assign(seq.tokens.begin() + start, seq.tokens.begin() + end);
      chunk.tags = repair_bio(std::vector<Tag>(seq.tags.begin() + start,
                                               seq.tags.begin() + end));
      out.push_back(std::move(chunk));
    }
  }
  return out;
}

// Little-endian primitives for the model file.
void put_u32(std::string& buf, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) buf.push_back(static_cast<char>(v >> (8 * i)));
}
void put_u64(std::string& buf, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>(v >> (8 * i)));
}
void put_f64(std::string& buf, double v) {
  put_u64(buf, std::bit_cast<std::uint64_t>(v));
}

struct ByteReader {
  std::string_view data;
  std::size_t pos = 0;

  void need(std::size_t n) const {
    if (pos + n > data.size()) throw ParseError("model file truncated");
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
      v |= static_cast<std::uint32_t>(
               static_cast<unsigned char>(data[pos + i]))
           << (8 * i);
    pos += 4;
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
      v |= static_cast<std::uint64_t>(
               static_cast<unsigned char>(data[pos + i]))
           << (8 * i);
    pos += 8;
    return v;
  }
  double f64() { return std::bit_cast<double>(u64()); }
};

}  // namespace

std::pair<std::string, std::string> word_shape(std::string_view form) {
  std::u32string full;
  for (uni::CodePoint cp : uni::decode_utf8(form)) {
    if (uni::is_upper(cp)) full.push_back(U'W');
    else if (uni::is_lower(cp)) full.push_back(U'w');
    else if (uni::is_digit(cp)) full.push_back(U'd');
    else full.push_back(cp);
  }
  std::u32string collapsed;
  for (uni::CodePoint cp : full)
    if (collapsed.empty() || collapsed.back() != cp) collapsed.push_back(cp);
  return {uni::encode_utf8(full), uni::encode_utf8(collapsed)};
}

std::uint64_t feature_hash(std::string_view feature) {
  std::uint64_t h = kFnvOffset;
  for (char c : feature) {
    h ^= static_cast<unsigned char>(c);
    h *= kFnvPrime;
  }
  return h;
}

FeatureVector featurize(const std::vector<Token>& tokens, std::size_t index,
                        const TaggerConfig& config) {
  FeatureVector ids;
  const auto w = static_cast<std::ptrdiff_t>(config.window);
  const auto n = static_cast<std::ptrdiff_t>(tokens.size());
  const auto center = static_cast<std::ptrdiff_t>(index);

  for (std::ptrdiff_t o = -w; o <= w; ++o) {
    const std::string tag = std::to_string(o) + "|";
    const std::ptrdiff_t pos = center + o;
    if (pos < 0 || pos >= n) {
      ids.push_back(feature_hash(tag + "pad"));
      continue;
    }
    const Token& t = tokens[static_cast<std::size_t>(pos)];
    const std::u32string cps = uni::decode_utf8(t.form);
    const auto [full, collapsed] = word_shape(t.form);
    ids.push_back(feature_hash(tag + "lower|" +
                               uni::encode_utf8(uni::lowercase(cps))));
    ids.push_back(feature_hash(tag + "shape|" + full));
    ids.push_back(feature_hash(tag + "cshape|" + collapsed));
    ids.push_back(feature_hash(tag + "pre|" + affix(cps, true)));
    ids.push_back(feature_hash(tag + "suf|" + affix(cps, false)));
  }

  if (index == 0) ids.push_back(feature_hash("0|first"));
  if (!tokens.empty() && index == tokens.size() - 1)
    ids.push_back(feature_hash("0|last"));
  if (inside_parens(tokens)[index]) ids.push_back(feature_hash("0|inparen"));

  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

TaggerModel train(const std::vector<TaggedSequence>& corpus,
                  const TaggerConfig& config, Diagnostics* diag) {
  if (corpus.empty()) throw Error("training corpus is empty");
  if (config.window < 1) throw ValidationError("window must be >= 1");
  if (config.max_seq_tokens < 2 * config.window + 1)
    throw ValidationError("max_seq_tokens must be >= 2*window + 1");

  const std::vector<TaggedSequence> data =
      hard_cut(corpus, config.max_seq_tokens, diag);

  TaggerModel model;
  model.config = config;
  if (config.epochs == 0) return model;

  // Averaged perceptron with lazy accumulation: totals[f] collects
  // w[f] integrated over sequence-level snapshots. The average is over
  // end-of-sequence weight vectors, so a single-sequence, single-epoch
  // run yields exactly the raw update sum.
  std::unordered_map<std::uint64_t, TagWeights> w;
  std::unordered_map<std::uint64_t, TagWeights> totals;
  std::unordered_map<std::uint64_t, std::size_t> last_snapshot;

  std::size_t completed = 0;  // sequences finished so far
  auto touch = [&](std::uint64_t f) {
    auto& row = w[f];
    auto& tot = totals[f];
    auto& last = last_snapshot[f];
    const double span = static_cast<double>(completed - last);
    if (span > 0)
      for (std::size_t t = 0; t < kNumTags; ++t) tot[t] += span * row[t];
    last = completed;
    return &row;
  };

  std::mt19937_64 rng(config.seed);
  std::vector<std::size_t> order(data.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  for (std::uint32_t epoch = 0; epoch < config.epochs; ++epoch) {
    if (config.shuffle) shuffle_indices(order, rng);
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
      const TaggedSequence& seq = data[order[oi]];
      std::size_t prev = kNumTags;  // BOS
      for (std::size_t i = 0; i < seq.tokens.size(); ++i) {
        const FeatureVector feats = featurize(seq.tokens, i, config);
        const std::uint64_t pf = prev_tag_feature(prev);
        const std::size_t predicted = argmax_tag(score_tags(w, feats, pf));
        const auto gold = static_cast<std::size_t>(seq.tags[i]);
        if (predicted != gold) {
          for (std::uint64_t f : feats) {
            TagWeights* row = touch(f);
            (*row)[gold] += 1.0;
            (*row)[predicted] -= 1.0;
          }
          TagWeights* row = touch(pf);
          (*row)[gold] += 1.0;
          (*row)[predicted] -= 1.0;
        }
        prev = predicted;
      }
      ++completed;
    }
  }

  for (auto& [f, row] : w) {
    auto& tot = totals[f];
    const double span =
        static_cast<double>(completed - last_snapshot[f]);
    TagWeights avg{};
    bool nonzero = false;
    for (std::size_t t = 0; t < kNumTags; ++t) {
      avg[t] = (tot[t] + span * row[t]) / static_cast<double>(completed);
      if (avg[t] != 0.0) nonzero = true;
    }
    if (nonzero) model.weights.emplace(f, avg);
  }
  return model;
}

TaggedSequence predict(const TaggerModel& model, std::vector<Token> tokens,
                       std::string sample_id) {
  TaggedSequence out;
  out.sample_id = std::move(sample_id);
  out.tags.reserve(tokens.size());

  const std::size_t chunk_size =
      std::max<std::size_t>(1, model.config.max_seq_tokens);
  for (std::size_t start = 0; start < tokens.size(); start += chunk_size) {
    const std::size_t end = std::min(start + chunk_size, tokens.size());
    const std::vector<Token> chunk(tokens.begin() + start,
                                   tokens.begin() + end);
    std::vector<Tag> tags;
    tags.reserve(chunk.size());
    std::size_t prev = kNumTags;  // BOS
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      const FeatureVector feats = featurize(chunk, i, model.config);
      const std::size_t best = argmax_tag(
          score_tags(model.weights, feats, prev_tag_feature(prev)));
      tags.push_back(static_cast<Tag>(best));
      prev = best;
    }
    for (Tag t : repair_bio(std::move(tags))) out.tags.push_back(t);
  }

  out.tokens = std::move(tokens);
  return out;
}

std::string model_to_bytes(const TaggerModel& model) {
  std::string buf;
  buf.append(kMagic, sizeof(kMagic));
  put_u32(buf, model.config.window);
  put_u32(buf, model.config.max_seq_tokens);
  put_u32(buf, model.config.epochs);
  put_u64(buf, model.config.seed);
  buf.push_back(model.config.shuffle ? 1 : 0);

  std::vector<std::uint64_t> ids;
  ids.reserve(model.weights.size());
  for (const auto& [id, row] : model.weights) ids.push_back(id);
  std::sort(ids.begin(), ids.end());

  put_u64(buf, ids.size());
  for (std::uint64_t id : ids) {
    put_u64(buf, id);
    for (double v : model.weights.at(id)) put_f64(buf, v);
  }
  return buf;
}

void save_model(const std::filesystem::path& path, const TaggerModel& model) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  const std::string bytes = model_to_bytes(model);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

TaggerModel model_from_bytes(std::string_view bytes) {
  ByteReader r{bytes};
  r.need(sizeof(kMagic));
  if (std::memcmp(bytes.data(), kMagic, sizeof(kMagic)) != 0)
    throw ParseError("not a tagger model file (bad magic)");
  r.pos = sizeof(kMagic);

  TaggerModel model;
  model.config.window = r.u32();
  model.config.max_seq_tokens = r.u32();
  model.config.epochs = r.u32();
  model.config.seed = r.u64();
  r.need(1);
  model.config.shuffle = bytes[r.pos++] != 0;

  const std::uint64_t count = r.u64();
  model.weights.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t id = r.u64();
    TagWeights row;
    for (std::size_t t = 0; t < kNumTags; ++t) row[t] = r.f64();
    model.weights.emplace(id, row);
  }
  if (r.pos != bytes.size())
    throw ParseError("model file has trailing bytes");
  return model;
}

TaggerModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return model_from_bytes(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace acro

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

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "acro/corpus.hpp"

namespace acro {

// Hashed feature ids for one token position; sorted, deduplicated.
using FeatureVector = std::vector<std::uint64_t>;

using TagWeights = std::array<double, kNumTags>;

struct TaggerConfig {
  std::uint32_t window = 2;          // token radius on each side
  std::uint32_t max_seq_tokens = 512;  // hard cut, no sliding window
  std::uint32_t epochs = 10;
  std::uint64_t seed = 0;
  bool shuffle = true;
};

// Linear sequence tagger: hashed window features, averaged perceptron
// weights, greedy left-to-right decoding with the previous predicted
// tag as an extra feature.
struct TaggerModel {
  std::unordered_map<std::uint64_t, TagWeights> weights;
  TaggerConfig config;
  std::string version = "ACROMDL1";
};

// Casing pattern: uppercase -> 'W', lowercase -> 'w', digit -> 'd',
// anything else passes through. The collapsed form merges repeats, so
// "CATiB" gives ("WWWwW", "WwW").
std::pair<std::string, std::string> word_shape(std::string_view form);

// 64-bit FNV-1a with the standard offset basis; fixed everywhere so
// feature ids are portable across platforms and runs.
std::uint64_t feature_hash(std::string_view feature);

// Window features for one position: lowercased form, both shapes and
// 3-character affixes for every offset in [-window, +window], boundary
// markers outside the sequence, plus is-first / is-last /
// inside-parentheses at offset 0.
FeatureVector featurize(const std::vector<Token>& tokens, std::size_t index,
                        const TaggerConfig& config);

// Averaged perceptron training. Deterministic for a fixed seed; equal
// seeds produce byte-identical serialized models. Sequences longer than
// max_seq_tokens are hard-cut with a warning. Throws on empty corpus.
TaggerModel train(const std::vector<TaggedSequence>& corpus,
                  const TaggerConfig& config, Diagnostics* diag = nullptr);

// Greedy decoding with BIO repair; ties resolve in tag order
// O < B-AN < I-AN < B-LF < I-LF. Long inputs are processed in
// independent consecutive chunks of max_seq_tokens.
TaggedSequence predict(const TaggerModel& model, std::vector<Token> tokens,
                       std::string sample_id = "");

// Versioned binary model format: magic "ACROMDL1", config block, then
// (feature id, five weights) records sorted by id, little-endian.
void save_model(const std::filesystem::path& path, const TaggerModel& model);
std::string model_to_bytes(const TaggerModel& model);
TaggerModel load_model(const std::filesystem::path& path);
TaggerModel model_from_bytes(std::string_view bytes);

}  // namespace acro

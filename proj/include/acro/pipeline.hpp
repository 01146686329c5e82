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

#include <filesystem>
#include <optional>
#include <string>

#include "acro/ensemble.hpp"
#include "acro/scorer.hpp"
#include "acro/tagger.hpp"

namespace acro {

// End-to-end run configuration. Loaded from a key = value file;
// command-line flags override file values; every random choice flows
// from the single seed.
struct PipelineConfig {
  std::filesystem::path train;
  std::filesystem::path test;
  std::filesystem::path dev;        // optional second evaluation set
  std::filesystem::path out_dir;
  std::filesystem::path stopwords;  // optional override file
  std::filesystem::path xml_dir;    // optional harvest input
  std::size_t harvest_limit = 0;    // 0 = no limit
  std::size_t min_pairs = 1;
  MergePolicy policy = MergePolicy::UnionDedupe;
  Aggregate aggregate = Aggregate::MacroClass;
  TaggerConfig tagger;
  std::string language = "en";
  std::string field_map;
  bool force = false;  // acronym wins on AN/LF token conflicts

  // Relative paths in the file resolve against its directory.
  static PipelineConfig from_file(const std::filesystem::path& path);
  void validate() const;  // throws naming the missing field
};

struct PipelineResult {
  EvalReport eval;
  std::optional<EvalReport> dev_eval;
};

// convert -> (harvest+concat) -> train -> predict -> extract-rules
// -> merge -> postprocess -> score. Writes every intermediate artifact
// under out_dir; a stage failure is rethrown naming the stage, with
// partial artifacts left in place.
PipelineResult run_pipeline(const PipelineConfig& config,
                            Diagnostics* diag = nullptr, bool quiet = true);

}  // namespace acro

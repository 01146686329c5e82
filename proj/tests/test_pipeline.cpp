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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "acro/pipeline.hpp"

using namespace acro;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = fs::path(ACRO_FIXTURE_DIR);

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

PipelineConfig fixture_config(const fs::path& out_dir) {
  PipelineConfig config = PipelineConfig::from_file(kFixtures / "pipeline.cfg");
  config.out_dir = out_dir;
  return config;
}

}  // namespace

TEST_CASE("config parsing resolves paths and rejects missing fields") {
  const PipelineConfig config =
      PipelineConfig::from_file(kFixtures / "pipeline.cfg");
  CHECK(config.train == kFixtures / "fixture_train.json");
  CHECK(config.tagger.seed == 42);
  CHECK(config.tagger.epochs == 10);
  config.validate();

  PipelineConfig missing = config;
  missing.train.clear();
  CHECK_THROWS_WITH_AS(missing.validate(), doctest::Contains("train"), Error);

  const fs::path bad = fs::temp_directory_path() / "acro_bad.cfg";
  {
    std::ofstream out(bad);
    out << "test = x.json\nout_dir = out\n";
  }
  CHECK_THROWS_WITH_AS(PipelineConfig::from_file(bad).validate(),
                       doctest::Contains("train"), Error);
  fs::remove(bad);
}

TEST_CASE("config rejects unknown keys and bad values") {
  const fs::path bad = fs::temp_directory_path() / "acro_bad2.cfg";
  {
    std::ofstream out(bad);
    out << "trian = typo.json\n";
  }
  CHECK_THROWS_AS(PipelineConfig::from_file(bad), ParseError);
  {
    std::ofstream out(bad);
    out << "epochs = many\n";
  }
  CHECK_THROWS_AS(PipelineConfig::from_file(bad), ParseError);
  fs::remove(bad);
}

TEST_CASE("the fixture pipeline runs end to end and is deterministic") {
  const fs::path out1 = fs::temp_directory_path() / "acro_run1";
  const fs::path out2 = fs::temp_directory_path() / "acro_run2";
  fs::remove_all(out1);
  fs::remove_all(out2);

  const PipelineResult r1 = run_pipeline(fixture_config(out1));
  const PipelineResult r2 = run_pipeline(fixture_config(out2));
  CHECK(r1.eval == r2.eval);

  // Every artifact must exist and be byte-identical across runs.
  for (const char* name :
       {"train.bio", "model.bin", "pred_tagger.json", "pred_rules.json",
        "merged.json", "final.json", "eval.json"}) {
    CAPTURE(name);
    REQUIRE(fs::exists(out1 / name));
    CHECK(read_file(out1 / name) == read_file(out2 / name));
  }

  // The fixture pattern is learnable, so the tagger-driven pipeline
  // should land well above the all-miss floor.
  CHECK(r1.eval.macro_f1 > 0.5);

  // Rerunning into the same directory is idempotent.
  const PipelineResult r3 = run_pipeline(fixture_config(out1));
  CHECK(r3.eval == r1.eval);

  fs::remove_all(out1);
  fs::remove_all(out2);
}

TEST_CASE("harvested samples concatenate into the training set") {
  const fs::path out = fs::temp_directory_path() / "acro_harvest_run";
  fs::remove_all(out);
  PipelineConfig config = fixture_config(out);
  config.xml_dir = kFixtures / "xml";
  const PipelineResult result = run_pipeline(config);
  CHECK(result.eval.macro_f1 >= 0.0);

  REQUIRE(fs::exists(out / "train_combined.json"));
  const std::vector<Sample> combined =
      read_dataset(out / "train_combined.json");
  CHECK(combined.size() == 45);  // 40 fixture + 5 harvested
  CHECK(combined.back().id == "pmc-a5-0");
  fs::remove_all(out);
}

TEST_CASE("stage failures name the stage") {
  PipelineConfig config = fixture_config(fs::temp_directory_path() /
                                         "acro_fail");
  config.train = kFixtures / "does_not_exist.json";
  CHECK_THROWS_WITH_AS(run_pipeline(config), doctest::Contains("convert"),
                       Error);
  fs::remove_all(fs::temp_directory_path() / "acro_fail");
}

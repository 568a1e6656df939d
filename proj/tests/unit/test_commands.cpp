// Copyright 2026 The ratingbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "ratingbench/commands.hpp"

using namespace ratingbench;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("ratingbench_unit_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t lines(const std::string& s) { return std::size_t(std::count(s.begin(), s.end(), '\n')); }

std::string error_path(const json& doc, ConfigUse use) {
  try {
    parse_config(doc, use);
  } catch (const ConfigError& e) {
    return e.path();
  }
  return "<none>";
}

json table_doc(const fs::path& out) {
  json doc = json::parse(R"({
    "dataset": {"synth": {"n_teams": 16, "matches": 120, "seed": 1, "draw_margin": 0.4}},
    "split_seed": 3,
    "emulators": ["random", "winrate", "elo", "glicko2", "trueskill", "trueskill_players"],
    "acquisitions": ["random", "most_seen", "least_seen", "likeliest_win", "likeliest_draw",
                     "cross_entropy", "weighted", "ts_quality"],
    "simulator": {"train_budget": 20, "checkpoints": [5, 10, 20], "runs": 2, "seed": 4}
  })");
  doc["output_dir"] = out.string();
  return doc;
}

}  // namespace

TEST_CASE("config validation reports field paths") {
  const json base = table_doc("out");
  CHECK(error_path(base, ConfigUse::kTable) == "<none>");

  json empty = base;
  empty["emulators"] = json::array();
  CHECK(error_path(empty, ConfigUse::kTable) == "emulators");

  json unknown = base;
  unknown["emulators"][2] = "elo2";
  CHECK(error_path(unknown, ConfigUse::kTable) == "emulators[2]");

  json extra = base;
  extra["simulator"]["budget"] = 5;
  CHECK(error_path(extra, ConfigUse::kTable) == "simulator.budget");

  json bad_params = base;
  bad_params["emulators"][2] = {{"type", "elo"}, {"params", {{"k", -1}}}};
  CHECK(error_path(bad_params, ConfigUse::kTable).rfind("emulators[2]", 0) == 0);

  json both = base;
  both["dataset"]["path"] = "x.csv";
  CHECK(error_path(both, ConfigUse::kTable) == "dataset");

  json checkpoint = base;
  checkpoint["simulator"]["checkpoints"] = {5, 50};
  CHECK(error_path(checkpoint, ConfigUse::kTable) == "simulator");

  json weighted = base;
  weighted["acquisitions"][0] = {{"type", "random"}, {"alpha", 2}};
  CHECK(error_path(weighted, ConfigUse::kTable) == "acquisitions[0]");

  json no_synth = json::object();
  CHECK(error_path(no_synth, ConfigUse::kSynth) == "synth");
}

TEST_CASE("config parses emulator objects and overrides") {
  json doc = table_doc("out");
  doc["emulators"] = json::array({json{{"type", "trueskill"}, {"label", "ts_wide"},
                                       {"params", {{"beta", 8.0}}}}});
  doc["acquisitions"] = json::array({json{{"type", "weighted"}, {"alpha", 0.5}, {"beta", 2}}});
  CommandOverrides o;
  o.seed = 77;
  o.jobs = 3;
  o.out = "elsewhere";
  const auto cfg = parse_config(apply_overrides(doc, o, ConfigUse::kTable), ConfigUse::kTable);
  REQUIRE(cfg.emulators.size() == 1);
  CHECK(cfg.emulators[0].display_name() == "ts_wide");
  CHECK(std::get<trueskill::Params>(cfg.emulators[0].params).beta == 8.0);
  CHECK(cfg.acquisitions[0].weighted.alpha == 0.5);
  CHECK(cfg.acquisitions[0].weighted.beta_w == 2.0);
  CHECK(cfg.simulator.seed == 77);
  CHECK(cfg.simulator.jobs == 3);
  CHECK(cfg.output_dir == "elsewhere");
  CHECK(config_hash(cfg.document).size() == 16);
  CHECK(config_hash(cfg.document) != config_hash(doc));
}

TEST_CASE("table command writes the full grid") {
  const fs::path out = scratch("table");
  const auto cfg = parse_config(table_doc(out), ConfigUse::kTable);
  std::ostringstream log;
  const auto result = cmd_table(cfg, log);
  CHECK(result.exit_code == 0);
  const std::string table = slurp(out / "table.csv");
  CHECK(lines(table) == 1 + 144);
  std::size_t undefined = 0;
  std::istringstream rows(table);
  for (std::string line; std::getline(rows, line);) {
    undefined += line.find("undefined") != std::string::npos;
  }
  CHECK(undefined == 12);
  CHECK(fs::exists(out / "manifest.json"));
  const auto manifest = json::parse(slurp(out / "manifest.json"));
  CHECK(manifest["config_hash"] == config_hash(cfg.document));

  const auto again = cmd_table(cfg, log);
  CHECK(slurp(out / "table.csv") == table);
  fs::remove_all(out);
}

TEST_CASE("curve, synth and validate commands") {
  const fs::path out = scratch("curve");
  json doc = table_doc(out);
  doc["emulators"] = {"trueskill", "elo"};
  doc["acquisitions"] = {"random", "ts_quality"};
  doc["curve"] = {{"grid_step", 25}};
  const auto cfg = parse_config(doc, ConfigUse::kCurve);
  std::ostringstream log;
  cmd_curve(cfg, log);
  CHECK(fs::exists(out / "curve_trueskill_random.csv"));
  CHECK(fs::exists(out / "curve_elo_random.csv"));
  CHECK_FALSE(fs::exists(out / "curve_elo_ts_quality.csv"));
  // 60 training matches: 0, 25, 50, 60.
  CHECK(lines(slurp(out / "curve_trueskill_random.csv")) == 5);

  const json synth = {{"synth", {{"n_teams", 12}, {"matches", 90}, {"seed", 5}}},
                      {"output_dir", (out / "syn").string()}};
  cmd_synth(parse_config(synth, ConfigUse::kSynth), log);
  CHECK(lines(slurp(out / "syn" / "synthetic.csv")) == 91);
  CHECK(lines(slurp(out / "syn" / "latent_skills.csv")) == 13);

  CommandOverrides o;
  o.dataset = out / "syn" / "synthetic.csv";
  o.out = out / "val";
  const auto vcfg = parse_config(apply_overrides(json::object(), o, ConfigUse::kValidateDataset),
                                 ConfigUse::kValidateDataset);
  cmd_validate_dataset(vcfg, log);
  const std::string summary = slurp(out / "val" / "dataset_summary.csv");
  CHECK(summary.find("\n90,12,60,") != std::string::npos);
  fs::remove_all(out);
}

TEST_CASE("file tokens") {
  CHECK(file_token("ts wide/2") == "ts_wide_2");
  CHECK(file_token("elo-k16") == "elo-k16");
}

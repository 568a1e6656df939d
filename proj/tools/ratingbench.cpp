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

// ratingbench command-line driver.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ratingbench/commands.hpp"

namespace rb = ratingbench;

namespace {

struct Invocation {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> jobs;
  std::optional<std::string> out;
  std::optional<std::string> dataset;
  std::optional<std::string> format;
};

void add_common(CLI::App* sub, Invocation& inv, bool config_required) {
  auto* opt = sub->add_option("-c,--config", inv.config, "JSON config file");
  if (config_required) opt->required()->check(CLI::ExistingFile);
  sub->add_option("--seed", inv.seed, "master seed override");
  sub->add_option("-j,--jobs", inv.jobs, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("-o,--out", inv.out, "output directory");
}

int run(const std::string& command, rb::ConfigUse use, const Invocation& inv) {
  nlohmann::json doc = inv.config.empty() ? nlohmann::json::object()
                                          : rb::load_config_file(inv.config);
  rb::CommandOverrides o;
  o.seed = inv.seed;
  o.jobs = inv.jobs;
  if (inv.out) o.out = *inv.out;
  if (inv.dataset) o.dataset = *inv.dataset;
  o.format = inv.format;
  doc = rb::apply_overrides(std::move(doc), o, use);
  const rb::RunConfig cfg = rb::parse_config(doc, use);

  rb::CommandResult result;
  if (command == "table") result = rb::cmd_table(cfg, std::cerr);
  else if (command == "curve") result = rb::cmd_curve(cfg, std::cerr);
  else if (command == "sensitivity") result = rb::cmd_sensitivity(cfg, std::cerr);
  else if (command == "synth") result = rb::cmd_synth(cfg, std::cerr);
  else result = rb::cmd_validate_dataset(cfg, std::cerr);
  for (const auto& p : result.outputs) std::cout << p.string() << '\n';
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rating-system benchmark with active match selection"};
  app.set_version_flag("--version", RATINGBENCH_VERSION);
  app.require_subcommand(1);

  Invocation inv;
  auto* table = app.add_subcommand("table", "accuracy table over emulators and AFs");
  add_common(table, inv, true);
  auto* curve = app.add_subcommand("curve", "train/eval accuracy against budget");
  add_common(curve, inv, true);
  auto* sens = app.add_subcommand("sensitivity", "TrueSkill hyperparameter grids");
  add_common(sens, inv, true);
  auto* synth = app.add_subcommand("synth", "generate a synthetic dataset");
  add_common(synth, inv, true);
  auto* validate = app.add_subcommand("validate-dataset", "check a match file");
  add_common(validate, inv, false);
  validate->add_option("--dataset", inv.dataset, "dataset file")->check(CLI::ExistingFile);
  validate->add_option("--format", inv.format, "csv or jsonl");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*table) return run("table", rb::ConfigUse::kTable, inv);
    if (*curve) return run("curve", rb::ConfigUse::kCurve, inv);
    if (*sens) return run("sensitivity", rb::ConfigUse::kSensitivity, inv);
    if (*synth) return run("synth", rb::ConfigUse::kSynth, inv);
    if (inv.config.empty() && !inv.dataset) {
      std::cerr << "error: validate-dataset needs --dataset or --config\n";
      return 2;
    }
    return run("validate-dataset", rb::ConfigUse::kValidateDataset, inv);
  } catch (const rb::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

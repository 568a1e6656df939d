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

#include "ratingbench/commands.hpp"

#include <Eigen/Core>
#include <fstream>
#include <ostream>
#include <set>

#include "ratingbench/csv.hpp"

namespace ratingbench {
namespace fs = std::filesystem;
namespace {

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  return out;
}

void write_manifest(const RunConfig& cfg, const std::string& command,
                    CommandResult& result) {
  nlohmann::ordered_json manifest;
  manifest["command"] = command;
  manifest["config_hash"] = config_hash(cfg.document);
  manifest["config"] = cfg.document;
  manifest["seeds"] = {{"split_seed", cfg.split_seed},
                       {"simulator_seed", cfg.simulator.seed},
                       {"synth_seed", cfg.synth.seed}};
  manifest["versions"] = {
      {"ratingbench", RATINGBENCH_VERSION},
      {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) +
                    "." + std::to_string(EIGEN_MINOR_VERSION)},
      {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                            std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                            std::to_string(NLOHMANN_JSON_VERSION_PATCH)}};
  std::vector<std::string> files;
  for (const auto& p : result.outputs) files.push_back(p.filename().string());
  manifest["outputs"] = files;
  manifest["exit_code"] = result.exit_code;
  const fs::path path = cfg.output_dir / "manifest.json";
  auto out = open_output(path);
  out << manifest.dump(2) << '\n';
}

DatasetSplit load_split(const RunConfig& cfg, std::ostream& log) {
  MatchDataset dataset = resolve_dataset(cfg.dataset);
  auto split = split_dataset(dataset, cfg.split_seed);
  log << "dataset: " << dataset.size() << " matches, train " << split.train.size() << ", eval "
      << split.eval.size() << '\n';
  return split;
}

}  // namespace

std::string file_token(const std::string& label) {
  std::string out = label;
  for (char& c : out) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '_' || c == '-';
    if (!ok) c = '_';
  }
  return out;
}

nlohmann::json apply_overrides(nlohmann::json doc, const CommandOverrides& o, ConfigUse use) {
  if (!doc.is_object()) doc = nlohmann::json::object();
  if (o.seed) {
    if (use == ConfigUse::kSynth) {
      doc["synth"]["seed"] = *o.seed;
    } else {
      doc["simulator"]["seed"] = *o.seed;
    }
  }
  if (o.jobs) doc["simulator"]["jobs"] = *o.jobs;
  if (o.out) doc["output_dir"] = o.out->string();
  if (o.dataset) {
    doc["dataset"] = nlohmann::json{{"path", o.dataset->string()}};
  }
  if (o.format) doc["dataset"]["format"] = *o.format;
  return doc;
}

MatchDataset resolve_dataset(const DatasetSource& source) {
  if (source.path) return load_dataset(*source.path, source.format);
  if (source.synth) return generate(*source.synth).dataset;
  throw ConfigError("dataset", "no dataset source configured");
}

CommandResult cmd_table(const RunConfig& cfg, std::ostream& log) {
  fs::create_directories(cfg.output_dir);
  const auto split = load_split(cfg, log);
  CommandResult result;

  const fs::path table_path = cfg.output_dir / "table.csv";
  const fs::path runs_path = cfg.output_dir / "table_runs.csv";
  auto table = open_output(table_path);
  auto runs = open_output(runs_path);
  table << "emulator,af,budget,mean,stderr,runs\n";
  runs << "emulator,af,budget,run,accuracy\n";

  for (const auto& emulator : cfg.emulators) {
    for (const auto& af : cfg.acquisitions) {
      const auto report = run_experiment(cfg.simulator, emulator, af, split);
      for (const auto& cell : report.checkpoints) {
        table << report.emulator << ',' << report.acquisition << ',' << cell.budget << ',';
        if (!report.defined) {
          table << "undefined,undefined,0\n";
          continue;
        }
        table << fmt_fixed(cell.stats.mean) << ',' << fmt_fixed(cell.stats.std_error) << ','
              << cell.stats.n << '\n';
        for (std::size_t r = 0; r < cell.per_run.size(); ++r) {
          runs << report.emulator << ',' << report.acquisition << ',' << cell.budget << ','
               << r << ',' << fmt_fixed(cell.per_run[r]) << '\n';
        }
      }
      log << report.emulator << " x " << report.acquisition
          << (report.defined ? "" : " (undefined)") << '\n';
    }
  }
  result.outputs = {table_path, runs_path};
  write_manifest(cfg, "table", result);
  return result;
}

CommandResult cmd_curve(const RunConfig& cfg, std::ostream& log) {
  fs::create_directories(cfg.output_dir);
  const auto split = load_split(cfg, log);
  CommandResult result;

  const fs::path index_path = cfg.output_dir / "curve_index.csv";
  auto index = open_output(index_path);
  index << "emulator,af,file,defined\n";
  for (const auto& emulator : cfg.emulators) {
    for (const auto& af : cfg.acquisitions) {
      const auto curve =
          run_training_curve(cfg.simulator, emulator, af, split, cfg.curve.grid_step);
      const std::string name =
          "curve_" + file_token(curve.emulator) + "_" + file_token(curve.acquisition) + ".csv";
      index << curve.emulator << ',' << curve.acquisition << ',' << name << ','
            << (curve.defined ? 1 : 0) << '\n';
      if (!curve.defined) {
        log << curve.emulator << " x " << curve.acquisition << " (undefined)\n";
        continue;
      }
      const fs::path path = cfg.output_dir / name;
      auto out = open_output(path);
      out << "budget,train_acc_mean,train_acc_sigma,eval_acc_mean,eval_acc_sigma\n";
      for (const auto& p : curve.points) {
        out << p.budget << ',' << fmt_fixed(p.train.mean) << ',' << fmt_fixed(p.train.stddev)
            << ',' << fmt_fixed(p.eval.mean) << ',' << fmt_fixed(p.eval.stddev) << '\n';
      }
      result.outputs.push_back(path);
      log << curve.emulator << " x " << curve.acquisition << '\n';
    }
  }
  result.outputs.insert(result.outputs.begin(), index_path);
  write_manifest(cfg, "curve", result);
  return result;
}

CommandResult cmd_sensitivity(const RunConfig& cfg, std::ostream& log) {
  fs::create_directories(cfg.output_dir);
  const auto split = load_split(cfg, log);
  const auto& s = cfg.sensitivity;
  CommandResult result;

  SimulatorConfig sim = cfg.simulator;
  sim.train_budget = s.budget;
  sim.checkpoints = {s.budget};
  sim.runs = s.runs_per_point;

  const fs::path summary_path = cfg.output_dir / "sensitivity_summary.csv";
  auto summary = open_output(summary_path);
  write_summary_header(summary);
  result.outputs.push_back(summary_path);

  for (EmulatorKind variant : s.variants) {
    for (const auto& pair : s.pairs) {
      GridSpec spec;
      spec.pair = pair;
      spec.center = s.center;
      spec.span = s.span;
      spec.resolution = s.resolution;
      const auto grid = run_grid(spec, variant, split, sim, s.acquisition);
      const auto surface = smooth_surface(grid, s.gp, s.display_resolution);

      const std::string stem = "sensitivity_" + std::string(to_string(variant)) + "_" +
                               std::string(to_string(pair.first)) + "_" +
                               std::string(to_string(pair.second));
      const fs::path raw_path = cfg.output_dir / (stem + "_raw.csv");
      const fs::path smooth_path = cfg.output_dir / (stem + "_smoothed.csv");
      {
        auto out = open_output(raw_path);
        write_raw_csv(out, surface);
      }
      {
        auto out = open_output(smooth_path);
        write_smoothed_csv(out, surface);
      }
      write_summary_row(summary, surface, s.near_optimum_tolerance);
      result.outputs.push_back(raw_path);
      result.outputs.push_back(smooth_path);
      log << stem << ": default " << fmt_fixed(surface.default_value, 4) << ", optimum "
          << fmt_fixed(surface.optimum, 4) << ", range " << fmt_fixed(surface.range, 4) << '\n';
    }
  }
  write_manifest(cfg, "sensitivity", result);
  return result;
}

CommandResult cmd_synth(const RunConfig& cfg, std::ostream& log) {
  fs::create_directories(cfg.output_dir);
  const auto data = generate(cfg.synth);
  DatasetFormat format = DatasetFormat::kCsv;
  if (cfg.document.contains("synth") && cfg.document["synth"].contains("format")) {
    format = parse_format(cfg.document["synth"]["format"].get<std::string>());
  }
  CommandResult result;
  const fs::path data_path =
      cfg.output_dir / (format == DatasetFormat::kCsv ? "synthetic.csv" : "synthetic.jsonl");
  const fs::path latent_path = cfg.output_dir / "latent_skills.csv";
  save_dataset(data_path, data.dataset, format);
  {
    auto out = open_output(latent_path);
    write_latent_csv(out, data);
  }
  log << "wrote " << data.dataset.size() << " matches between " << data.latent.size()
      << " teams; oracle accuracy "
      << fmt_fixed(bayes_accuracy(data.latent_map(), data.dataset), 4) << '\n';
  result.outputs = {data_path, latent_path};
  write_manifest(cfg, "synth", result);
  return result;
}

CommandResult cmd_validate_dataset(const RunConfig& cfg, std::ostream& log) {
  fs::create_directories(cfg.output_dir);
  const MatchDataset dataset = resolve_dataset(cfg.dataset);
  std::set<std::string> teams;
  std::set<std::string> players;
  std::size_t win1 = 0;
  std::size_t win2 = 0;
  std::size_t draws = 0;
  for (const auto& m : dataset.records()) {
    teams.insert(m.team1.id);
    teams.insert(m.team2.id);
    players.insert(m.team1.roster.begin(), m.team1.roster.end());
    players.insert(m.team2.roster.begin(), m.team2.roster.end());
    switch (m.outcome) {
      case Outcome::kWin1: ++win1; break;
      case Outcome::kWin2: ++win2; break;
      case Outcome::kDraw: ++draws; break;
    }
  }
  CommandResult result;
  const fs::path path = cfg.output_dir / "dataset_summary.csv";
  auto out = open_output(path);
  out << "matches,teams,players,win1,win2,draws,team_pairs\n"
      << dataset.size() << ',' << teams.size() << ',' << players.size() << ',' << win1 << ','
      << win2 << ',' << draws << ',' << dataset.pair_index().size() << '\n';
  log << "ok: " << dataset.size() << " matches, " << teams.size() << " teams, "
      << players.size() << " players, " << draws << " draws\n";
  result.outputs = {path};
  write_manifest(cfg, "validate-dataset", result);
  return result;
}

}  // namespace ratingbench

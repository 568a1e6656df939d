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

#include "ratingbench/config.hpp"

#include <cstdio>
#include <fstream>
#include <set>

namespace ratingbench {
namespace {

using nlohmann::json;

std::string child(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string element(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const json& require_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  return j;
}

void reject_unknown(const json& j, const std::string& path,
                    std::initializer_list<const char*> allowed) {
  std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items()) {
    if (!keys.count(key)) throw ConfigError(child(path, key), "unknown field");
  }
}

template <typename T>
T read(const json& j, const std::string& path) {
  try {
    if constexpr (std::is_same_v<T, std::size_t> || std::is_same_v<T, std::uint64_t>) {
      if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
        throw ConfigError(path, "expected a non-negative integer");
      }
    } else if constexpr (std::is_same_v<T, double>) {
      if (!j.is_number()) throw ConfigError(path, "expected a number");
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!j.is_string()) throw ConfigError(path, "expected a string");
    }
    return j.get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(path, e.what());
  }
}

template <typename T>
void read_opt(const json& obj, const std::string& path, const char* key, T& out) {
  if (obj.contains(key)) out = read<T>(obj.at(key), child(path, key));
}

template <typename Fn>
auto wrap(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(path, e.what());
  }
}

EloParams parse_elo(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"k", "mu0"});
  EloParams p;
  read_opt(j, path, "k", p.k);
  read_opt(j, path, "mu0", p.mu0);
  wrap(path, [&] { p.validate(); });
  return p;
}

glicko2::Params parse_glicko2(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"mu0", "phi0", "sigma0", "tau", "conv_tol"});
  glicko2::Params p;
  read_opt(j, path, "mu0", p.mu0);
  read_opt(j, path, "phi0", p.phi0);
  read_opt(j, path, "sigma0", p.sigma0);
  read_opt(j, path, "tau", p.tau);
  read_opt(j, path, "conv_tol", p.conv_tol);
  wrap(path, [&] { p.validate(); });
  return p;
}

trueskill::Params parse_trueskill(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"mu0", "sigma0", "beta", "tau", "p_draw"});
  trueskill::Params p;
  read_opt(j, path, "mu0", p.mu0);
  read_opt(j, path, "sigma0", p.sigma0);
  read_opt(j, path, "beta", p.beta);
  read_opt(j, path, "tau", p.tau);
  read_opt(j, path, "p_draw", p.p_draw);
  wrap(path, [&] { p.validate(); });
  return p;
}

EmulatorSpec parse_emulator(const json& j, const std::string& path) {
  if (j.is_string()) {
    return wrap(path, [&] { return EmulatorSpec::defaults(parse_emulator_kind(j.get<std::string>())); });
  }
  require_object(j, path);
  reject_unknown(j, path, {"type", "label", "params"});
  if (!j.contains("type")) throw ConfigError(child(path, "type"), "missing");
  const auto type_path = child(path, "type");
  EmulatorSpec spec = wrap(type_path, [&] {
    return EmulatorSpec::defaults(parse_emulator_kind(read<std::string>(j.at("type"), type_path)));
  });
  read_opt(j, path, "label", spec.label);
  if (j.contains("params")) {
    const auto params_path = child(path, "params");
    const json& params = j.at("params");
    switch (spec.kind) {
      case EmulatorKind::kElo: spec.params = parse_elo(params, params_path); break;
      case EmulatorKind::kGlicko2: spec.params = parse_glicko2(params, params_path); break;
      case EmulatorKind::kTrueSkill:
      case EmulatorKind::kTrueSkillPlayers:
        spec.params = parse_trueskill(params, params_path);
        break;
      default:
        require_object(params, params_path);
        if (!params.empty()) throw ConfigError(params_path, "emulator takes no parameters");
    }
  }
  return spec;
}

AcquisitionSpec parse_acquisition(const json& j, const std::string& path) {
  AcquisitionSpec spec;
  if (j.is_string()) {
    spec.kind = wrap(path, [&] { return parse_acquisition_kind(j.get<std::string>()); });
    return spec;
  }
  require_object(j, path);
  reject_unknown(j, path, {"type", "label", "alpha", "beta"});
  if (!j.contains("type")) throw ConfigError(child(path, "type"), "missing");
  const auto type_path = child(path, "type");
  spec.kind = wrap(type_path, [&] {
    return parse_acquisition_kind(read<std::string>(j.at("type"), type_path));
  });
  read_opt(j, path, "label", spec.label);
  if (spec.kind != AcquisitionKind::kWeighted && (j.contains("alpha") || j.contains("beta"))) {
    throw ConfigError(path, "alpha/beta apply only to the weighted acquisition function");
  }
  read_opt(j, path, "alpha", spec.weighted.alpha);
  read_opt(j, path, "beta", spec.weighted.beta_w);
  if (!std::isfinite(spec.weighted.alpha) || !std::isfinite(spec.weighted.beta_w)) {
    throw ConfigError(path, "alpha and beta must be finite");
  }
  return spec;
}

SynthConfig parse_synth(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"n_teams", "latent_mean", "latent_sd", "performance_sd",
                           "draw_margin", "matches", "pairing", "band_width", "seed",
                           "start_timestamp", "format"});
  SynthConfig c;
  read_opt(j, path, "n_teams", c.n_teams);
  read_opt(j, path, "latent_mean", c.latent_mean);
  read_opt(j, path, "latent_sd", c.latent_sd);
  read_opt(j, path, "performance_sd", c.performance_sd);
  read_opt(j, path, "draw_margin", c.draw_margin);
  read_opt(j, path, "matches", c.matches);
  read_opt(j, path, "band_width", c.band_width);
  read_opt(j, path, "seed", c.seed);
  if (j.contains("start_timestamp")) {
    c.start_timestamp = wrap(child(path, "start_timestamp"),
                             [&] { return j.at("start_timestamp").get<std::int64_t>(); });
  }
  if (j.contains("pairing")) {
    const auto p = child(path, "pairing");
    c.pairing = wrap(p, [&] { return parse_pairing(read<std::string>(j.at("pairing"), p)); });
  }
  wrap(path, [&] { c.validate(); });
  return c;
}

DatasetSource parse_dataset(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"path", "format", "synth"});
  DatasetSource src;
  if (j.contains("path")) {
    src.path = read<std::string>(j.at("path"), child(path, "path"));
    src.format = format_from_extension(*src.path);
  }
  if (j.contains("format")) {
    const auto p = child(path, "format");
    src.format = wrap(p, [&] { return parse_format(read<std::string>(j.at("format"), p)); });
  }
  if (j.contains("synth")) src.synth = parse_synth(j.at("synth"), child(path, "synth"));
  if (src.path.has_value() == src.synth.has_value()) {
    throw ConfigError(path, "give exactly one of 'path' or 'synth'");
  }
  return src;
}

SimulatorConfig parse_simulator(const json& j, const std::string& path, bool need_budget) {
  require_object(j, path);
  reject_unknown(j, path, {"candidate_pool_size", "train_budget", "checkpoints", "runs", "seed",
                           "jobs"});
  SimulatorConfig c;
  read_opt(j, path, "candidate_pool_size", c.candidate_pool_size);
  read_opt(j, path, "train_budget", c.train_budget);
  read_opt(j, path, "runs", c.runs);
  read_opt(j, path, "seed", c.seed);
  std::size_t jobs = c.jobs;
  read_opt(j, path, "jobs", jobs);
  c.jobs = unsigned(std::max<std::size_t>(1, jobs));
  if (j.contains("checkpoints")) {
    const auto p = child(path, "checkpoints");
    if (!j.at("checkpoints").is_array()) throw ConfigError(p, "expected an array");
    c.checkpoints.clear();
    for (std::size_t i = 0; i < j.at("checkpoints").size(); ++i) {
      c.checkpoints.push_back(read<std::size_t>(j.at("checkpoints")[i], element(p, i)));
    }
  } else if (need_budget && j.contains("train_budget")) {
    c.checkpoints = {c.train_budget};
  }
  if (need_budget) {
    wrap(path, [&] { c.validate(); });
  } else if (c.candidate_pool_size < 1 || c.runs < 1) {
    throw ConfigError(path, "candidate_pool_size and runs must be at least 1");
  }
  return c;
}

SensitivitySettings parse_sensitivity(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"variants", "pairs", "resolution", "span", "runs_per_point", "budget",
                           "display_resolution", "near_optimum_tolerance", "acquisition",
                           "defaults", "gp"});
  SensitivitySettings s;
  if (j.contains("variants")) {
    const auto p = child(path, "variants");
    if (!j.at("variants").is_array() || j.at("variants").empty()) {
      throw ConfigError(p, "expected a non-empty array");
    }
    s.variants.clear();
    for (std::size_t i = 0; i < j.at("variants").size(); ++i) {
      const auto ep = element(p, i);
      auto kind = wrap(ep, [&] {
        return parse_emulator_kind(read<std::string>(j.at("variants")[i], ep));
      });
      if (!is_trueskill(kind)) throw ConfigError(ep, "sensitivity needs a TrueSkill emulator");
      s.variants.push_back(kind);
    }
  }
  if (j.contains("pairs")) {
    const auto p = child(path, "pairs");
    if (!j.at("pairs").is_array() || j.at("pairs").empty()) {
      throw ConfigError(p, "expected a non-empty array");
    }
    s.pairs.clear();
    for (std::size_t i = 0; i < j.at("pairs").size(); ++i) {
      const auto ep = element(p, i);
      const json& pair = j.at("pairs")[i];
      if (!pair.is_array() || pair.size() != 2) throw ConfigError(ep, "expected [param, param]");
      auto a = wrap(ep, [&] { return parse_ts_param(read<std::string>(pair[0], ep)); });
      auto b = wrap(ep, [&] { return parse_ts_param(read<std::string>(pair[1], ep)); });
      if (a == b) throw ConfigError(ep, "parameters must differ");
      s.pairs.emplace_back(a, b);
    }
  }
  read_opt(j, path, "resolution", s.resolution);
  read_opt(j, path, "span", s.span);
  read_opt(j, path, "runs_per_point", s.runs_per_point);
  read_opt(j, path, "budget", s.budget);
  read_opt(j, path, "display_resolution", s.display_resolution);
  read_opt(j, path, "near_optimum_tolerance", s.near_optimum_tolerance);
  if (j.contains("acquisition")) {
    s.acquisition = parse_acquisition(j.at("acquisition"), child(path, "acquisition"));
  }
  if (j.contains("defaults")) s.center = parse_trueskill(j.at("defaults"), child(path, "defaults"));
  if (j.contains("gp")) {
    const auto p = child(path, "gp");
    const json& gp = require_object(j.at("gp"), p);
    reject_unknown(gp, p, {"kernel_variance", "lengthscale_sq", "prior_mean", "noise_variance"});
    read_opt(gp, p, "kernel_variance", s.gp.kernel_variance);
    read_opt(gp, p, "lengthscale_sq", s.gp.lengthscale_sq);
    read_opt(gp, p, "prior_mean", s.gp.prior_mean);
    read_opt(gp, p, "noise_variance", s.gp.noise_variance);
    if (!(s.gp.kernel_variance > 0 && s.gp.lengthscale_sq > 0 && s.gp.noise_variance >= 0)) {
      throw ConfigError(p, "kernel_variance and lengthscale_sq must be positive");
    }
  }
  if (s.resolution < 3 || s.resolution % 2 == 0) {
    throw ConfigError(child(path, "resolution"), "must be odd and at least 3");
  }
  if (!(s.span > 0)) throw ConfigError(child(path, "span"), "must be positive");
  if (s.runs_per_point < 1) throw ConfigError(child(path, "runs_per_point"), "must be >= 1");
  if (s.budget < 1) throw ConfigError(child(path, "budget"), "must be >= 1");
  if (s.display_resolution < 2) {
    throw ConfigError(child(path, "display_resolution"), "must be >= 2");
  }
  return s;
}

template <typename T, typename Fn>
std::vector<T> parse_list(const json& doc, const char* key, Fn&& parse) {
  if (!doc.contains(key)) throw ConfigError(key, "missing");
  const json& list = doc.at(key);
  if (!list.is_array()) throw ConfigError(key, "expected an array");
  if (list.empty()) throw ConfigError(key, "must not be empty");
  std::vector<T> out;
  for (std::size_t i = 0; i < list.size(); ++i) out.push_back(parse(list[i], element(key, i)));
  return out;
}

}  // namespace

RunConfig parse_config(const json& doc, ConfigUse use) {
  require_object(doc, "<root>");
  reject_unknown(doc, "", {"dataset", "split_seed", "emulators", "acquisitions", "simulator",
                           "curve", "sensitivity", "synth", "output_dir"});
  RunConfig cfg;
  cfg.document = doc;
  read_opt(doc, "", "split_seed", cfg.split_seed);
  if (doc.contains("output_dir")) cfg.output_dir = read<std::string>(doc.at("output_dir"), "output_dir");

  const bool needs_dataset = use != ConfigUse::kSynth;
  if (needs_dataset) {
    if (!doc.contains("dataset")) throw ConfigError("dataset", "missing");
    cfg.dataset = parse_dataset(doc.at("dataset"), "dataset");
  }
  if (use == ConfigUse::kTable || use == ConfigUse::kCurve) {
    cfg.emulators = parse_list<EmulatorSpec>(doc, "emulators", parse_emulator);
    cfg.acquisitions = parse_list<AcquisitionSpec>(doc, "acquisitions", parse_acquisition);
  }
  if (use == ConfigUse::kTable || use == ConfigUse::kCurve || use == ConfigUse::kSensitivity) {
    const json empty = json::object();
    const json& sim = doc.contains("simulator") ? doc.at("simulator") : empty;
    cfg.simulator = parse_simulator(sim, "simulator", use == ConfigUse::kTable);
  }
  if (use == ConfigUse::kCurve && doc.contains("curve")) {
    const json& curve = require_object(doc.at("curve"), "curve");
    reject_unknown(curve, "curve", {"grid_step"});
    read_opt(curve, "curve", "grid_step", cfg.curve.grid_step);
    if (cfg.curve.grid_step < 1) throw ConfigError("curve.grid_step", "must be >= 1");
  }
  if (use == ConfigUse::kSensitivity && doc.contains("sensitivity")) {
    cfg.sensitivity = parse_sensitivity(doc.at("sensitivity"), "sensitivity");
  }
  if (use == ConfigUse::kSynth) {
    if (!doc.contains("synth")) throw ConfigError("synth", "missing");
    cfg.synth = parse_synth(doc.at("synth"), "synth");
  }
  return cfg;
}

json load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string(), "cannot open config file");
  try {
    return json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string(), e.what());
  }
}

std::string config_hash(const json& doc) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : doc.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace ratingbench

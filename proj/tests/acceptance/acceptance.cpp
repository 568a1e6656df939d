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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is non-zero
// when any criterion fails.

#include <algorithm>
#include <boost/math/distributions/students_t.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ratingbench/acquisition.hpp"
#include "ratingbench/commands.hpp"
#include "ratingbench/emulators.hpp"
#include "ratingbench/gaussian.hpp"
#include "ratingbench/glicko2.hpp"
#include "ratingbench/gp.hpp"
#include "ratingbench/sensitivity.hpp"
#include "ratingbench/simulator.hpp"
#include "ratingbench/synthgen.hpp"
#include "ratingbench/trueskill.hpp"

namespace rb = ratingbench;
namespace fs = std::filesystem;
using rb::gauss::GaussianMoments;

namespace {

enum class Status { kPass, kFail, kSkip };

struct Verdict {
  Status status = Status::kFail;
  std::string detail;
};

Verdict verdict(bool ok, std::string detail) {
  return {ok ? Status::kPass : Status::kFail, std::move(detail)};
}

std::string num(double v, int precision = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

rb::Team team(const std::string& id) {
  rb::Team t;
  t.id = id;
  for (std::size_t i = 0; i < rb::kRosterSize; ++i) t.roster[i] = id + "_p" + std::to_string(i + 1);
  return t;
}

// ---------------------------------------------------------------- criterion 1

// Posterior mean and sd of one entity's skill given the outcome, by adaptive
// quadrature over that skill. `sign` is +1 for a team-A entity, -1 for team B.
// d = perf_A - perf_B; given the entity's skill s, d ~ N(diff + sign (s - mu), cond_var).
GaussianMoments quadrature_posterior(double mu, double var, double diff, double cond_var,
                                     double eps, rb::Outcome outcome, int sign) {
  using boost::math::quadrature::gauss_kronrod;
  const double sd = std::sqrt(var);
  const double cond_sd = std::sqrt(cond_var);
  auto likelihood = [&](double u) {
    const double m = diff + sign * sd * u;
    switch (outcome) {
      case rb::Outcome::kWin1: return rb::gauss::std_cdf((m - eps) / cond_sd);
      case rb::Outcome::kWin2: return rb::gauss::std_cdf((-eps - m) / cond_sd);
      case rb::Outcome::kDraw:
        return rb::gauss::std_cdf((eps - m) / cond_sd) - rb::gauss::std_cdf((-eps - m) / cond_sd);
    }
    return 0.0;
  };
  auto moment = [&](int k) {
    auto f = [&](double u) { return std::pow(u, k) * rb::gauss::std_pdf(u) * likelihood(u); };
    double total = 0.0;
    const double edges[] = {-40, -10, -5, -2, 0, 2, 5, 10, 40};
    for (int i = 0; i + 1 < 9; ++i) {
      total += gauss_kronrod<double, 61>::integrate(f, edges[i], edges[i + 1], 10, 1e-12);
    }
    return total;
  };
  const double z = moment(0);
  const double m1 = moment(1) / z;
  const double m2 = moment(2) / z;
  return {mu + sd * m1, var * (m2 - m1 * m1)};
}

Verdict criterion_1() {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> mean(10, 40), sigma(1, 9), beta(1, 8), p_draw(0.02, 0.4),
      tau(0.0, 0.5);
  double worst = 0.0;
  std::size_t checks = 0;
  const auto start = std::chrono::steady_clock::now();
  for (int state = 0; state < 100; ++state) {
    rb::trueskill::Params params;
    params.beta = beta(rng);
    params.p_draw = p_draw(rng);
    params.tau = tau(rng);
    const rb::Outcome decisive = (rng() & 1) ? rb::Outcome::kWin1 : rb::Outcome::kWin2;
    for (std::size_t size : {1, 5}) {
      std::vector<GaussianMoments> a(size), b(size);
      for (auto& r : a) r = {mean(rng), std::pow(sigma(rng), 2)};
      for (auto& r : b) r = {mean(rng), std::pow(sigma(rng), 2)};
      for (rb::Outcome outcome : {decisive, rb::Outcome::kDraw}) {
        auto ua = a;
        auto ub = b;
        rb::trueskill::update(ua, ub, outcome, params);

        const double t2 = params.tau * params.tau;
        double c2 = 2.0 * double(size) * params.beta * params.beta;
        double diff = 0.0;
        for (const auto& r : a) c2 += r.variance + t2, diff += r.mean;
        for (const auto& r : b) c2 += r.variance + t2, diff -= r.mean;
        const double eps = rb::trueskill::draw_margin(params.p_draw, params.beta, 2 * size);
        for (int side = 0; side < 2; ++side) {
          const auto& before = side == 0 ? a : b;
          const auto& after = side == 0 ? ua : ub;
          for (std::size_t i = 0; i < size; ++i) {
            const double var = before[i].variance + t2;
            const auto q = quadrature_posterior(before[i].mean, var, diff, c2 - var, eps, outcome,
                                                side == 0 ? 1 : -1);
            worst = std::max(worst, std::abs(q.mean - after[i].mean));
            worst = std::max(worst, std::abs(std::sqrt(q.variance) - std::sqrt(after[i].variance)));
            ++checks;
          }
        }
      }
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return verdict(worst <= 1e-6 && seconds < 60.0,
                 std::to_string(checks) + " posteriors, max |error| " + sci(worst) + ", " + num(seconds, 1) + " s");
}

// ---------------------------------------------------------------- criterion 2

Verdict criterion_2() {
  const rb::glicko2::Rating player{1500, 200, 0.06};
  const std::vector<rb::glicko2::Game> games{{{1400, 30, 0.06}, 1.0},
                                             {{1550, 100, 0.06}, 0.0},
                                             {{1700, 300, 0.06}, 0.0}};
  const auto r = rb::glicko2::rate(player, games, 0.5, 1e-6);
  const bool ok = std::abs(r.rating - 1464.06) <= 0.01 && std::abs(r.deviation - 151.52) <= 0.01;
  return verdict(ok, "r' = " + num(r.rating) + ", RD' = " + num(r.deviation) +
                         ", sigma' = " + num(r.volatility, 6));
}

// ---------------------------------------------------------------- criterion 3

Verdict criterion_3() {
  rb::SynthConfig sc;
  sc.matches = 20000;
  sc.seed = 3;
  const auto data = rb::generate(sc);
  std::size_t win1 = 0;
  std::size_t win2 = 0;
  for (const auto& m : data.dataset.records()) {
    win1 += m.outcome == rb::Outcome::kWin1;
    win2 += m.outcome == rb::Outcome::kWin2;
  }
  rb::RandomEmulator random(3);
  const double acc = rb::evaluate(random, data.dataset);
  return verdict(std::abs(acc - 0.5) <= 0.01 && win1 + win2 >= 10000,
                 "accuracy " + num(100 * acc, 2) + "% over " + std::to_string(win1 + win2) +
                     " predictions (" + std::to_string(win1) + " team1 / " +
                     std::to_string(win2) + " team2 wins)");
}

// ---------------------------------------------------------------- criterion 4

struct Gap {
  std::string better;
  std::string worse;
};

// One-sided Welch test that mean(a) > mean(b) at the 95% level.
bool significantly_greater(const rb::SampleStats& a, const rb::SampleStats& b, double& t) {
  const double va = a.stddev * a.stddev / double(a.n);
  const double vb = b.stddev * b.stddev / double(b.n);
  t = (a.mean - b.mean) / std::sqrt(va + vb);
  const double df = (va + vb) * (va + vb) /
                    (va * va / double(a.n - 1) + vb * vb / double(b.n - 1));
  const boost::math::students_t dist(df);
  return t > boost::math::quantile(dist, 0.95);
}

Verdict criterion_4() {
  rb::SynthConfig sc;
  sc.n_teams = 400;
  sc.matches = 4000;
  sc.seed = 1;
  const auto split = rb::split_dataset(rb::generate(sc).dataset, 1);
  rb::SimulatorConfig sim;
  sim.train_budget = 500;
  sim.checkpoints = {500};
  sim.runs = 30;
  sim.seed = 1;
  const auto emulator = rb::EmulatorSpec::defaults(rb::EmulatorKind::kTrueSkillPlayers);
  std::map<std::string, rb::SampleStats> stats;
  for (auto kind : {rb::AcquisitionKind::kRandom, rb::AcquisitionKind::kWeighted,
                    rb::AcquisitionKind::kMostSeen, rb::AcquisitionKind::kLikeliestDraw,
                    rb::AcquisitionKind::kLikeliestWin}) {
    const auto report = rb::run_experiment(sim, emulator, {kind, {}, {}}, split);
    stats[std::string(rb::to_string(kind))] = report.checkpoints.front().stats;
  }
  const std::vector<Gap> gaps{{"weighted", "random"},
                              {"random", "most_seen"},
                              {"likeliest_draw", "random"},
                              {"random", "likeliest_win"}};
  bool ok = true;
  std::string detail = "trueskill_players @500:";
  for (const auto& [name, s] : stats) detail += " " + name + "=" + num(100 * s.mean, 2) + "%";
  detail += ";";
  for (const auto& g : gaps) {
    double t = 0.0;
    const bool pass = significantly_greater(stats[g.better], stats[g.worse], t);
    ok = ok && pass;
    detail += " " + g.better + ">" + g.worse + " t=" + num(t, 2) + (pass ? "" : " (not significant)");
  }
  return verdict(ok, detail);
}

// ---------------------------------------------------------------- criterion 5

Verdict criterion_5() {
  const char* path = std::getenv("RATINGBENCH_HLTV_DATASET");
  if (path == nullptr || *path == '\0') {
    return {Status::kSkip,
            "RATINGBENCH_HLTV_DATASET not set; the real 9,929-match dataset is absent, so "
            "criteria 3 and 4 stand in for this one"};
  }
  const auto dataset = rb::load_dataset(path, rb::format_from_extension(path));
  if (dataset.size() != 9929) {
    return verdict(false, "expected 9929 matches, found " + std::to_string(dataset.size()));
  }
  const auto split = rb::split_dataset(dataset, 0);
  rb::SimulatorConfig sim;
  sim.train_budget = 2000;
  sim.checkpoints = {2000};
  sim.runs = 100;
  sim.seed = 0;
  const auto ts = rb::run_experiment(sim, rb::EmulatorSpec::defaults(rb::EmulatorKind::kTrueSkill),
                                     {rb::AcquisitionKind::kRandom, {}, {}}, split);
  const auto tsp = rb::run_experiment(
      sim, rb::EmulatorSpec::defaults(rb::EmulatorKind::kTrueSkillPlayers),
      {rb::AcquisitionKind::kWeighted, {}, {}}, split);
  const double a = ts.checkpoints.front().stats.mean;
  const double b = tsp.checkpoints.front().stats.mean;
  return verdict(std::abs(a - 0.622) <= 0.015 && std::abs(b - 0.641) <= 0.015,
                 "trueskill/random " + num(100 * a, 2) + "% (target 62.2%), trueskill_players/weighted " +
                     num(100 * b, 2) + "% (target 64.1%)");
}

// ---------------------------------------------------------------- criterion 6

Verdict criterion_6() {
  rb::SynthConfig sc;
  sc.n_teams = 400;
  sc.matches = 6000;
  sc.seed = 1;
  const auto data = rb::generate(sc);
  const auto split = rb::split_dataset(data.dataset, 1);
  const double bayes = rb::bayes_accuracy(data.latent_map(), split.eval);
  rb::SimulatorConfig sim;
  sim.train_budget = 2000;
  sim.checkpoints = {100, 2000};
  sim.runs = 30;
  sim.seed = 1;
  bool ok = true;
  std::string detail = "bayes " + num(100 * bayes, 2) + "%;";
  for (auto kind : {rb::EmulatorKind::kWinRate, rb::EmulatorKind::kElo, rb::EmulatorKind::kGlicko2,
                    rb::EmulatorKind::kTrueSkill, rb::EmulatorKind::kTrueSkillPlayers}) {
    const auto r = rb::run_experiment(sim, rb::EmulatorSpec::defaults(kind),
                                      {rb::AcquisitionKind::kRandom, {}, {}}, split);
    const auto& early = r.checkpoints[0].stats;
    const auto& late = r.checkpoints[1].stats;
    const bool pass = late.mean > early.mean && late.mean <= bayes + 3 * late.std_error &&
                      early.mean <= bayes + 3 * early.std_error;
    ok = ok && pass;
    detail += " " + std::string(rb::to_string(kind)) + " " + num(100 * early.mean, 1) + "->" +
              num(100 * late.mean, 1) + "%";
  }
  return verdict(ok, detail);
}

// ---------------------------------------------------------------- criterion 7

Verdict criterion_7() {
  using GP = rb::GaussianProcess<double>;
  bool ok = true;
  std::string failed;

  GP prior;
  prior.fit(GP::Matrix(0, 2), GP::Vector(0));
  GP::Matrix probe(3, 2);
  probe << 0, 0, 0.4, -0.7, 3, 3;
  const auto pm = prior.predict(probe);
  if (!(pm.array() == 0.60).all()) ok = false, failed += " prior";

  GP single;
  GP::Matrix x0(1, 2);
  x0 << 0.3, -0.2;
  GP::Vector y0(1);
  y0 << 0.68;
  single.fit(x0, y0);
  const double tolerance = 3.0 * std::sqrt(single.config().noise_variance);
  if (std::abs(single.predict(x0)(0) - 0.68) > tolerance) ok = false, failed += " interpolation";

  GP::Matrix xs(6, 2);
  xs << 0, 0, 0.5, 0, 0, 0.5, -0.5, 0.33, 1, -1, -1, 1;
  GP::Vector ys(6);
  ys << 0.61, 0.65, 0.58, 0.62, 0.55, 0.70;
  GP forward;
  forward.fit(xs, ys);
  Eigen::PermutationMatrix<Eigen::Dynamic> perm(6);
  perm.indices() << 5, 3, 0, 4, 1, 2;
  GP shuffled;
  shuffled.fit(perm * xs, perm * ys);
  const double perm_diff = (forward.predict(probe) - shuffled.predict(probe)).cwiseAbs().maxCoeff();
  if (perm_diff > 1e-12) ok = false, failed += " permutation";
  if (!(forward.kernel().array() == forward.kernel().transpose().array()).all()) {
    ok = false, failed += " symmetry";
  }

  GP::Matrix far(4, 2);
  far << 11, 0, 0, -11, -9, 9, 12, 12;
  const double far_diff = (forward.predict(far).array() - 0.60).abs().maxCoeff();
  if (far_diff > 1e-4) ok = false, failed += " far-field";

  return verdict(ok, ok ? "prior exact, interpolation within 3*sqrt(noise), permutation diff " +
                              sci(perm_diff) + ", far-field diff " + sci(far_diff)
                        : "failed:" + failed);
}

// ---------------------------------------------------------------- criterion 8

Verdict criterion_8() {
  rb::SynthConfig sc;
  sc.n_teams = 400;
  sc.matches = 6000;
  sc.seed = 1;
  const auto split = rb::split_dataset(rb::generate(sc).dataset, 1);
  rb::SimulatorConfig sim;
  sim.train_budget = 2000;
  sim.checkpoints = {2000};
  sim.runs = 1;
  sim.seed = 1;
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (const auto& pair : rb::all_param_pairs()) {
    rb::GridSpec spec;
    spec.pair = pair;
    std::map<rb::EmulatorKind, rb::SensitivitySurface> surfaces;
    for (auto variant : {rb::EmulatorKind::kTrueSkill, rb::EmulatorKind::kTrueSkillPlayers}) {
      surfaces[variant] = rb::smooth_surface(rb::run_grid(spec, variant, split, sim));
      const auto& s = surfaces[variant];
      ok = ok && s.defaults_near_optimum(0.02);
    }
    const auto& team_s = surfaces[rb::EmulatorKind::kTrueSkill];
    const auto& player_s = surfaces[rb::EmulatorKind::kTrueSkillPlayers];
    ok = ok && player_s.range <= team_s.range;
    detail += std::string(detail.empty() ? "" : "; ") + std::string(rb::to_string(pair.first)) +
              "/" + std::string(rb::to_string(pair.second)) + ": team gap " +
              num(100 * (team_s.optimum - team_s.default_value), 2) + "% range " +
              num(100 * team_s.range, 2) + "%, players gap " +
              num(100 * (player_s.optimum - player_s.default_value), 2) + "% range " +
              num(100 * player_s.range, 2) + "%";
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ok = ok && seconds < 900.0;
  return verdict(ok, detail + "; " + num(seconds, 1) + " s");
}

// ---------------------------------------------------------------- criterion 9

std::map<std::string, std::string> csv_snapshot(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (entry.path().extension() != ".csv") continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    out[fs::relative(entry.path(), dir).string()] = ss.str();
  }
  return out;
}

Verdict criterion_9() {
  const fs::path root = fs::temp_directory_path() / "ratingbench_acceptance_determinism";
  fs::remove_all(root);
  const nlohmann::json synth_source = {{"n_teams", 30}, {"matches", 400}, {"seed", 7},
                                       {"draw_margin", 0.3}};
  nlohmann::json base = {{"dataset", {{"synth", synth_source}}},
                         {"split_seed", 2},
                         {"emulators", {"random", "elo", "glicko2", "trueskill", "trueskill_players"}},
                         {"acquisitions", {"random", "cross_entropy", "weighted", "ts_quality"}},
                         {"simulator", {{"train_budget", 100},
                                        {"checkpoints", {50, 100}},
                                        {"runs", 3},
                                        {"seed", 5},
                                        {"jobs", 2}}},
                         {"curve", {{"grid_step", 50}}},
                         {"sensitivity", {{"budget", 60}, {"resolution", 3},
                                          {"display_resolution", 9}}},
                         {"synth", synth_source}};
  struct Job {
    std::string name;
    rb::ConfigUse use;
    std::function<rb::CommandResult(const rb::RunConfig&, std::ostream&)> run;
  };
  const std::vector<Job> jobs{{"table", rb::ConfigUse::kTable, rb::cmd_table},
                              {"curve", rb::ConfigUse::kCurve, rb::cmd_curve},
                              {"sensitivity", rb::ConfigUse::kSensitivity, rb::cmd_sensitivity},
                              {"synth", rb::ConfigUse::kSynth, rb::cmd_synth}};
  bool ok = true;
  std::size_t files = 0;
  std::string mismatched;
  std::ostringstream log;
  for (const auto& job : jobs) {
    nlohmann::json doc = base;
    doc["output_dir"] = (root / job.name).string();
    const auto cfg = rb::parse_config(doc, job.use);
    job.run(cfg, log);
    const auto first = csv_snapshot(root / job.name);
    job.run(cfg, log);
    const auto second = csv_snapshot(root / job.name);
    if (first != second || first.empty()) {
      ok = false;
      mismatched += " " + job.name;
    }
    files += first.size();
  }
  rb::CommandOverrides o;
  o.dataset = root / "synth" / "synthetic.csv";
  o.out = root / "validate";
  const auto vcfg = rb::parse_config(rb::apply_overrides({}, o, rb::ConfigUse::kValidateDataset),
                                     rb::ConfigUse::kValidateDataset);
  rb::cmd_validate_dataset(vcfg, log);
  const auto v1 = csv_snapshot(root / "validate");
  rb::cmd_validate_dataset(vcfg, log);
  if (v1 != csv_snapshot(root / "validate") || v1.empty()) ok = false, mismatched += " validate";
  files += v1.size();
  fs::remove_all(root);
  return verdict(ok, ok ? std::to_string(files) + " CSV files byte-identical across reruns"
                        : "differences in:" + mismatched);
}

// ---------------------------------------------------------------- criterion 10

Verdict criterion_10() {
  rb::WinRateEmulator fresh;
  const double draw = rb::af_likeliest_draw(fresh, team("a"), team("b"));
  rb::WinRateEmulator once;
  once.fit({"m1", team("a"), team("b"), rb::Outcome::kDraw, 0});
  const double ce = rb::af_cross_entropy(once, team("a"), team("b"));
  const double weighted = rb::af_weighted(fresh, team("a"), team("b"), {1.0, 1.0});
  const bool ok = std::abs(draw - std::log(2.0)) <= 1e-12 && std::abs(ce - 2.0794) <= 1e-4 &&
                  weighted == 2.0;
  return verdict(ok, "likeliest_draw(0.5) = " + num(draw, 15) + ", cross_entropy = " + num(ce, 6) +
                         ", weighted = " + num(weighted, 1));
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"TrueSkill updates match quadrature posteriors", criterion_1},
      {"Glicko-2 reference example", criterion_2},
      {"Random emulator baseline", criterion_3},
      {"AF ordering at desk scale", criterion_4},
      {"Real-data reproduction", criterion_5},
      {"Monotone learning below the Bayes bound", criterion_6},
      {"GP regression suite", criterion_7},
      {"Sensitivity surface shape", criterion_8},
      {"Determinism", criterion_9},
      {"Entropy, CE and Weighted spot checks", criterion_10}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {Status::kFail, std::string("exception: ") + e.what()};
    }
    const char* tag = v.status == Status::kPass ? "PASS" : (v.status == Status::kSkip ? "SKIP" : "FAIL");
    if (v.status == Status::kFail) ++failures;
    std::printf("criterion %2zu: %s  %s -- %s\n", i + 1, tag, criteria[i].first.c_str(),
                v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

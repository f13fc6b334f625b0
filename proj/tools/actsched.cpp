// Copyright 2026 The Authors.
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


// Command-line front end for the actuator scheduling library.
//
// Exit codes: 0 success, 2 infeasible budget, 3 uncontrollable system,
// 1 anything else.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "actsched.hpp"
#include "json.hpp"

namespace {

using actsched::Json;
using actsched::Matrix;
using actsched::MetricKind;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUncontrollable = 3;

Json NumberOrNull(std::optional<double> v) {
  if (!v || !std::isfinite(*v)) return Json(nullptr);
  return Json(*v);
}

// All six metrics of W, or nulls when W is singular.
Json MetricReport(const Matrix& w, const Matrix& pool) {
  Json out = Json::object();
  const bool pd = actsched::IsPositiveDefinite(w);
  for (MetricKind m : actsched::kAllMetrics) {
    std::optional<double> v;
    if (pd) v = actsched::Evaluate(m, w, &pool);
    out[std::string(actsched::MetricName(m))] = NumberOrNull(v);
  }
  out["controllable"] = pd;
  return out;
}

void Emit(const Json& j, const std::string& path) {
  const std::string text = j.dump(1) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    actsched::internal::WriteFile(path, text);
  }
}

actsched::NamedSystem ResolveSystem(const std::string& path) {
  if (path.empty() || path == "example1") return {actsched::Example1System(false), "example1"};
  if (path == "example1-bmin") return {actsched::Example1System(true), "example1_bmin"};
  return actsched::LoadSystem(path);
}

MetricKind ResolveMetric(const std::string& name) {
  const auto m = actsched::ParseMetric(name);
  if (!m) throw actsched::Error("unknown metric " + name);
  return *m;
}

struct ScheduleArgs {
  std::string system;
  std::string algo = "two-sided";
  int t = 0;
  double d = 0.0;
  std::string metric = "A";
  double alpha = 0.0;
  std::uint64_t seed = 0;
  std::string out;
  std::string report;
  std::string heatmap;
};

int RunSchedule(const ScheduleArgs& a) {
  const actsched::NamedSystem named = ResolveSystem(a.system);
  const actsched::LtiSystem& sys = named.system;
  const int t = a.t > 0 ? a.t : sys.states();
  const MetricKind metric = ResolveMetric(a.metric);
  const Matrix c = actsched::ControllabilityMatrix(sys, t);
  const Matrix w = actsched::Symmetrized(c * c.transpose());
  const double alpha = a.alpha > 0.0 ? a.alpha : actsched::DefaultRidge(w);

  Json params = {{"t", t}, {"d", a.d}, {"metric", a.metric}};
  Json bounds = Json::object();
  std::optional<std::uint64_t> seed;
  actsched::Schedule sched;

  const auto weighted = [&](const actsched::WeightedScheduleResult& r) {
    sched = r.schedule;
    bounds["kappa"] = r.kappa;
    bounds["effective_d"] = r.effective_d;
    bounds["budget"] = actsched::BudgetKindName(r.budget_kind);
    bounds["epsilon"] = NumberOrNull(r.epsilon);
    bounds["gamma"] = NumberOrNull(r.gamma);
    bounds["rho_bound_factor"] = NumberOrNull(r.rho_bound_factor);
  };

  if (a.algo == "two-sided") {
    weighted(actsched::ScheduleTwoSided(sys, t, a.d));
  } else if (a.algo == "max-ratio") {
    weighted(actsched::ScheduleMaxRatio(sys, t, a.d));
  } else if (a.algo == "per-input") {
    weighted(actsched::SchedulePerInput(sys, t, a.d));
  } else if (a.algo == "per-time") {
    weighted(actsched::SchedulePerTime(sys, t, a.d));
  } else if (a.algo == "unweighted") {
    weighted(actsched::ScheduleUnweighted(sys, t, a.d));
  } else if (a.algo == "leverage") {
    seed = a.seed;
    sched = actsched::SampleSchedule(sys, t, a.d, a.seed);
    bounds["draws"] = actsched::CeilBudget(t, a.d);
  } else if (a.algo == "greedy-static") {
    const int k = static_cast<int>(std::floor(a.d + 1e-9));
    const auto r = actsched::GreedyStatic(sys, t, k, metric, &c, alpha);
    sched = r.schedule;
    Json inputs = Json::array();
    for (int j : r.inputs) inputs.push_back(j);
    bounds["inputs"] = inputs;
    params["alpha"] = alpha;
  } else if (a.algo == "greedy-tv") {
    sched = actsched::GreedyTimeVarying(sys, t, a.d, metric, &c, alpha).schedule;
    params["alpha"] = alpha;
  } else if (a.algo == "brute-force") {
    const auto r = actsched::BruteForceSchedule(sys, t, a.d, metric, &c, alpha);
    sched = r.schedule;
    params["alpha"] = alpha;
  } else {
    throw actsched::Error("unknown algorithm " + a.algo);
  }

  const actsched::ScheduleRecord rec{sched, a.algo, params, seed};
  if (!a.out.empty()) actsched::SaveSchedule(rec, a.out);
  if (!a.heatmap.empty()) actsched::EmitHeatmap(sched, a.heatmap);

  const Matrix ws = actsched::ScheduledGramian(c, sched);
  Json report;
  report["system"] = named.name;
  report["algo"] = a.algo;
  report["params"] = params;
  report["seed"] = seed ? Json(*seed) : Json(nullptr);
  report["d_avg"] = sched.AverageActive();
  report["support"] = sched.SupportSize();
  report["bounds"] = bounds;
  report["full"] = MetricReport(w, c);
  report["scheduled"] = MetricReport(ws, c);
  if (bounds.contains("epsilon") && !bounds["epsilon"].is_null()) {
    report["sandwich_ok"] =
        actsched::IsEpsDApproximation(w, ws, bounds["epsilon"].get<double>());
  }
  report["energy"] = {{"max_ratio", actsched::MaxScalingRatio(sched)},
                      {"max_per_input", actsched::MaxPerInputEnergy(sched)},
                      {"max_per_time", actsched::MaxPerTimeEnergy(sched)}};
  Emit(report, a.report);
  return kExitOk;
}

std::string Cell(std::optional<double> v) {
  if (!v) return "uncontrollable";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", *v);
  return buf;
}

std::optional<double> TraceInverseOrNull(const Matrix& w) {
  if (!actsched::IsPositiveDefinite(w)) return std::nullopt;
  return actsched::Evaluate(MetricKind::kAOptimality, w);
}

void PrintRow(const std::string& label, double d, std::optional<double> v) {
  std::printf("%-42s %8.4g  %s\n", label.c_str(), d, Cell(v).c_str());
}

// Unweighted and greedy schedules of the fixed 8-state example at t = 8.
int ReproduceExample1() {
  using actsched::Schedule;
  const auto sys = actsched::Example1System(false);
  const int t = 8;
  const Matrix c = actsched::ControllabilityMatrix(sys, t);
  const Matrix w = actsched::Symmetrized(c * c.transpose());
  const double alpha = actsched::DefaultRidge(w);
  std::printf("%-42s %8s  %s\n", "schedule", "d", "tr(W_s^-1)");

  Matrix grid = Matrix::Zero(8, t);
  grid.col(t - 1).setOnes();
  PrintRow("all inputs at the last step", 1.0,
           TraceInverseOrNull(actsched::ScheduledGramian(c, Schedule(grid))));
  grid.setZero();
  grid.row(0).setOnes();
  PrintRow("input 1 at every step", 1.0,
           TraceInverseOrNull(actsched::ScheduledGramian(c, Schedule(grid))));

  for (int support : {9, 15}) {
    const auto r = actsched::ScheduleUnweightedWithSupport(sys, t, support);
    if (!r) continue;
    PrintRow("unweighted dual-set, support " + std::to_string(support),
             r->schedule.AverageActive(),
             TraceInverseOrNull(actsched::ScheduledGramian(c, r->schedule)));
  }
  PrintRow("static inputs {1,2,8} (B_min)", 3.0,
           TraceInverseOrNull(actsched::Gramian(actsched::Example1System(true), t)));
  const auto best = actsched::BruteForceStatic(sys, t, 3.0, MetricKind::kAOptimality,
                                               nullptr, alpha);
  std::string label = "best static 3-subset {";
  for (size_t i = 0; i < best.inputs.size(); ++i) {
    label += (i ? "," : "") + std::to_string(best.inputs[i] + 1);
  }
  PrintRow(label + "}", 3.0,
           best.controllable ? std::optional<double>(best.value) : std::nullopt);
  const auto gs = actsched::GreedyStatic(sys, t, 3, MetricKind::kAOptimality,
                                         nullptr, alpha);
  label = "greedy static {";
  for (size_t i = 0; i < gs.inputs.size(); ++i) {
    label += (i ? "," : "") + std::to_string(gs.inputs[i] + 1);
  }
  PrintRow(label + "}", 3.0, gs.value);
  const auto gt = actsched::GreedyTimeVarying(sys, t, 3.0, MetricKind::kAOptimality,
                                              nullptr, alpha);
  PrintRow("greedy time-varying", gt.schedule.AverageActive(), gt.value);
  PrintRow("fully actuated", 8.0, TraceInverseOrNull(w));
  return kExitOk;
}

// Consensus on random geometric graphs, t = n: leverage sampling at d = 40,
// static greedy with 160 leaders, full actuation.
int ReproduceExample2(int seeds, int nodes, double radius) {
  std::printf("%6s %12s %12s %12s %10s\n", "seed", "leverage", "static",
              "full", "components");
  const int leaders = static_cast<int>(std::lround(0.8 * nodes));
  const double d = 0.2 * nodes;
  for (int seed = 1; seed <= seeds; ++seed) {
    const auto graph = actsched::RandomGeometricGraph(nodes, radius, seed);
    const auto sys = actsched::ConsensusSystem(graph);
    const int t = nodes;
    const Matrix c = actsched::ControllabilityMatrix(sys, t);
    const Matrix w = actsched::Symmetrized(c * c.transpose());
    const auto dist = actsched::MakeSamplingDistribution(
        actsched::LeverageScores(c, nodes, t), nodes);
    const auto lev = actsched::SampleSchedule(dist, d, seed)
                         .NormalizedEnergy(d * t);
    const auto gs = actsched::GreedyStatic(sys, t, leaders, MetricKind::kAOptimality,
                                           nullptr, actsched::DefaultRidge(w));
    std::printf("%6d %12s %12s %12s %10d\n", seed,
                Cell(TraceInverseOrNull(actsched::ScheduledGramian(c, lev))).c_str(),
                Cell(gs.value).c_str(), Cell(TraceInverseOrNull(w)).c_str(),
                actsched::ConnectedComponents(graph));
  }
  return kExitOk;
}

// Swing model: weighted and unweighted schedules against full actuation.
int ReproduceExample3(double d) {
  const auto sys = actsched::SwingSystem(actsched::DefaultSwingParameters());
  const int t = sys.states();
  const Matrix c = actsched::ControllabilityMatrix(sys, t);
  const Matrix w = actsched::Symmetrized(c * c.transpose());
  std::printf("%-42s %8s  %s\n", "schedule", "d_avg", "tr(W_s^-1)");
  const auto row = [&](const std::string& label, const actsched::Schedule& s) {
    PrintRow(label, s.AverageActive(),
             TraceInverseOrNull(actsched::ScheduledGramian(c, s)));
  };
  row("max-ratio weighted", actsched::ScheduleMaxRatio(sys, t, d).schedule);
  row("per-time weighted", actsched::SchedulePerTime(sys, t, d).schedule);
  row("unweighted dual-set", actsched::ScheduleUnweighted(sys, t, d).schedule);
  const auto gt = actsched::GreedyTimeVarying(sys, t, d, MetricKind::kAOptimality,
                                              nullptr, actsched::DefaultRidge(w));
  row("greedy time-varying", gt.schedule);
  PrintRow("fully actuated", sys.inputs(), TraceInverseOrNull(w));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse actuator scheduling for discrete-time linear systems"};
  app.require_subcommand(1);

  std::string system;
  int t = 0;
  std::string out;

  auto* gramian = app.add_subcommand("gramian", "Controllability Gramian W(t)");
  gramian->add_option("--system", system, "System JSON file, or example1 / example1-bmin");
  gramian->add_option("--t", t, "Horizon (default n)");
  gramian->add_option("--out", out, "Output JSON path (default stdout)");

  std::string schedule_path;
  auto* metrics = app.add_subcommand("metrics", "All six metrics of W and optionally W_s");
  metrics->add_option("--system", system, "System JSON file");
  metrics->add_option("--t", t, "Horizon (default n)");
  metrics->add_option("--schedule", schedule_path, "Schedule JSON file");
  metrics->add_option("--out", out, "Output JSON path");

  ScheduleArgs sa;
  auto* schedule = app.add_subcommand("schedule", "Run one scheduler");
  schedule->add_option("--system", sa.system, "System JSON file");
  schedule->add_option("--algo", sa.algo, "Scheduler")
      ->check(CLI::IsMember({"two-sided", "max-ratio", "per-input", "per-time",
                             "unweighted", "leverage", "greedy-static",
                             "greedy-tv", "brute-force"}));
  schedule->add_option("--t", sa.t, "Horizon (default n)");
  schedule->add_option("--d", sa.d, "Average active actuators per step")->required();
  schedule->add_option("--metric", sa.metric, "Metric for greedy and exhaustive search");
  schedule->add_option("--alpha", sa.alpha, "Ridge (default 1e-8 lambda_max(W))");
  schedule->add_option("--seed", sa.seed, "Sampler seed");
  schedule->add_option("--out", sa.out, "Schedule JSON path");
  schedule->add_option("--report", sa.report, "Report JSON path (default stdout)");
  schedule->add_option("--heatmap", sa.heatmap, "Heatmap CSV path");

  auto* leverage = app.add_subcommand("leverage", "Column and input leverage scores");
  leverage->add_option("--system", system, "System JSON file");
  leverage->add_option("--t", t, "Horizon (default n)");
  leverage->add_option("--out", out, "Output JSON path");

  actsched::GridRange d_range{0.5, 8.0, 16};
  actsched::GridRange r_range{1.0, 8.0, 15};
  auto* surface = app.add_subcommand("epsilon-surface", "Approximation factor over (d, t/n)");
  surface->add_option("--d-min", d_range.lo);
  surface->add_option("--d-max", d_range.hi);
  surface->add_option("--d-count", d_range.count);
  surface->add_option("--ratio-min", r_range.lo, "Smallest t/n");
  surface->add_option("--ratio-max", r_range.hi, "Largest t/n");
  surface->add_option("--ratio-count", r_range.count);
  surface->add_option("--out", out, "CSV path")->required();

  std::string which;
  int seeds = 20;
  int nodes = 200;
  double radius = 0.125;
  double swing_d = 4.0;
  auto* reproduce = app.add_subcommand("reproduce", "Desk-scale experiments");
  reproduce->add_option("which", which)
      ->required()
      ->check(CLI::IsMember({"example1", "example2", "example3"}));
  reproduce->add_option("--seeds", seeds, "Graphs for example2");
  reproduce->add_option("--nodes", nodes, "Nodes for example2");
  reproduce->add_option("--radius", radius, "Connection radius for example2");
  reproduce->add_option("--d", swing_d, "Budget for example3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*gramian || *metrics || *leverage) {
      const auto named = ResolveSystem(system);
      const auto& sys = named.system;
      const int horizon = t > 0 ? t : sys.states();
      const Matrix c = actsched::ControllabilityMatrix(sys, horizon);
      const Matrix w = actsched::Symmetrized(c * c.transpose());
      Json j;
      j["system"] = named.name;
      j["t"] = horizon;
      if (*gramian) {
        const auto ev = actsched::SymEigenvalues(w);
        j["W"] = actsched::internal::MatrixToJson(w);
        j["lambda_min"] = ev(0);
        j["lambda_max"] = ev(ev.size() - 1);
        j["controllable"] = actsched::IsPositiveDefinite(w);
      } else if (*metrics) {
        j["full"] = MetricReport(w, c);
        if (!schedule_path.empty()) {
          const auto rec = actsched::LoadSchedule(schedule_path);
          j["scheduled"] = MetricReport(actsched::ScheduledGramian(c, rec.schedule), c);
          j["d_avg"] = rec.schedule.AverageActive();
        }
      } else {
        const auto lev = actsched::LeverageScores(c, sys.inputs(), horizon);
        j["scores"] = actsched::internal::MatrixToJson(lev.scores);
        j["total"] = lev.total;
        j["rank"] = lev.rank;
        Json groups = Json::array();
        for (int i = 0; i < sys.inputs(); ++i) groups.push_back(lev.scores.row(i).sum());
        j["group"] = groups;
      }
      Emit(j, out);
      return kExitOk;
    }
    if (*schedule) return RunSchedule(sa);
    if (*surface) {
      actsched::EpsilonSurface(d_range, r_range, out);
      return kExitOk;
    }
    if (which == "example1") return ReproduceExample1();
    if (which == "example2") return ReproduceExample2(seeds, nodes, radius);
    return ReproduceExample3(swing_d);
  } catch (const actsched::InvalidBudget& e) {
    std::cerr << "infeasible budget: " << e.what() << "\n";
    return kExitBudget;
  } catch (const actsched::SingularGramian& e) {
    std::cerr << "uncontrollable: " << e.what() << "\n";
    return kExitUncontrollable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}

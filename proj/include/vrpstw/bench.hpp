#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "vrpstw/feasibility.hpp"
#include "vrpstw/gen.hpp"
#include "vrpstw/improve.hpp"
#include "vrpstw/model.hpp"
#include "vrpstw/sweep.hpp"

namespace vrpstw {

enum class DirectionChoice { ccw, cw, both };

const char* to_string(DirectionChoice d);
std::optional<DirectionChoice> parse_direction(const std::string& name);

struct PipelineOptions {
  SweepVariant variant = SweepVariant::a;
  DirectionChoice direction = DirectionChoice::both;
  bool improve = false;
  RouterOptions router;
};

struct PhaseTimings {
  double sweep_s = 0.0;
  double improve_s = 0.0;
  double routing_s = 0.0;
  friend bool operator==(const PhaseTimings&, const PhaseTimings&) = default;
};

struct RunReport {
  std::string instance;
  std::optional<std::uint64_t> seed;
  std::size_t n = 0;
  double capacity = 0.0;
  SweepVariant variant = SweepVariant::a;
  DirectionChoice direction = DirectionChoice::both;
  std::optional<Direction> chosen_direction;
  bool improve = false;
  double wall_s = 0.0;
  PhaseTimings phases;
  Objective initial;  // after the sweep, before improvement
  Objective objective;
  std::size_t improve_moves = 0;
  std::size_t improve_evaluations = 0;
  /// Objective after each accepted improvement move.
  std::vector<Objective> improve_trace;
  std::string validation = "failed";
  std::vector<std::string> diagnostics;

  bool ok() const { return validation == "ok"; }
  friend bool operator==(const RunReport&, const RunReport&) = default;
};

struct PipelineResult {
  Schedule schedule;
  RunReport report;
};

/// Sweep, optional improvement, then optimal routing of every cluster.
/// Failures (unroutable clusters, budget exhaustion, infeasible singletons)
/// come back as a report with validation "failed" and diagnostics, and an
/// empty schedule.
PipelineResult run_pipeline(const Instance& instance, const PipelineOptions& options);

nlohmann::json to_json(const RunReport& report);
RunReport report_from_json(const nlohmann::json& j);

/// Mean values of one (variant, capacity, improve) cell; durations in hours.
struct SummaryRow {
  SweepVariant variant = SweepVariant::a;
  double capacity = 0.0;
  bool improve = false;
  std::size_t runs = 0;
  double mean_t_s = 0.0;
  double mean_vehicles = 0.0;
  double mean_duration_h = 0.0;
  double mean_travel_h = 0.0;
};

struct Summary {
  std::vector<SummaryRow> rows;
  std::vector<std::string> warnings;
};

/// Only validated reports enter the means; cells without any are reported
/// in `warnings`.
Summary aggregate(std::span<const RunReport> reports);
std::string summary_csv(const Summary& summary);

struct BenchPlan {
  std::vector<std::size_t> sizes{250};
  std::vector<double> capacities{200.0};
  std::vector<std::uint64_t> seeds{1};
  std::vector<SweepVariant> variants{SweepVariant::a};
  std::vector<bool> improve{false};
  DirectionChoice direction = DirectionChoice::both;
  RouterOptions router;
  unsigned jobs = 1;
};

/// Runs every (size, capacity, seed) instance through every (variant,
/// improve) combination. Runs are distributed over `jobs` threads; each run
/// is itself single-threaded, so results do not depend on `jobs`.
/// `on_done` is called under a lock as runs finish.
std::vector<RunReport> run_bench(const BenchPlan& plan,
                                 const std::function<void(const RunReport&)>& on_done = {});

}  // namespace vrpstw

#include "vrpstw/bench.hpp"

#include "vrpstw/io.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

namespace vrpstw {

using nlohmann::json;

const char* to_string(DirectionChoice d) {
  switch (d) {
    case DirectionChoice::ccw: return "ccw";
    case DirectionChoice::cw: return "cw";
    case DirectionChoice::both: return "both";
  }
  return "unknown";
}

std::optional<DirectionChoice> parse_direction(const std::string& name) {
  if (name == "ccw") return DirectionChoice::ccw;
  if (name == "cw") return DirectionChoice::cw;
  if (name == "both") return DirectionChoice::both;
  return std::nullopt;
}

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

PipelineResult run_pipeline(const Instance& instance, const PipelineOptions& options) {
  Stopwatch total;
  PipelineResult out;
  RunReport& report = out.report;
  report.n = instance.size();
  report.capacity = instance.capacity().units();
  report.variant = options.variant;
  report.direction = options.direction;
  report.improve = options.improve;

  ClusterChecker checker(instance, options.router);
  try {
    Stopwatch sweep_clock;
    RoutedClustering routed;
    if (options.direction == DirectionChoice::both) {
      routed = best_of_directions(instance, options.variant, checker);
    } else {
      const auto dir = options.direction == DirectionChoice::cw ? Direction::clockwise
                                                                : Direction::counterclockwise;
      PolarView view(instance, dir);
      routed = route_clustering(run_sweep(options.variant, view, checker), checker);
    }
    report.phases.sweep_s = sweep_clock.seconds();
    report.chosen_direction = routed.clustering.direction;
    report.initial = routed.objective;

    for (std::size_t i = 0; i < routed.routes.size(); ++i) {
      if (!routed.routes[i].feasible()) {
        report.diagnostics.push_back("cluster " + std::to_string(i) + " of " +
                                     std::to_string(routed.clustering.size()) + " is " +
                                     to_string(routed.routes[i].level));
      }
    }

    Clustering clustering = std::move(routed.clustering);
    if (routed.feasible && options.improve) {
      Stopwatch improve_clock;
      auto improved = improve(clustering, checker);
      report.phases.improve_s = improve_clock.seconds();
      report.improve_moves = improved.moves.size();
      report.improve_evaluations = improved.evaluations;
      for (const auto& move : improved.moves) report.improve_trace.push_back(move.after);
      if (improved.budget_skips > 0) {
        report.diagnostics.push_back(std::to_string(improved.budget_skips) +
                                     " improvement candidates skipped on router budget");
      }
      clustering = std::move(improved.clustering);
    }

    if (routed.feasible) {
      Stopwatch routing_clock;
      for (const auto& cluster : clustering.clusters) {
        if (cluster.empty()) continue;
        auto route = checker.route(cluster);
        if (!route.feasible()) {
          report.diagnostics.push_back(std::string("final routing failed: ") +
                                       to_string(route.level));
          out.schedule.tours.clear();
          break;
        }
        out.schedule.tours.push_back(*route.tour);
      }
      report.phases.routing_s = routing_clock.seconds();
    }
  } catch (const SweepError& e) {
    report.diagnostics.push_back(e.what());
  } catch (const ImproveLimitExceeded& e) {
    report.diagnostics.push_back(e.what());
  }

  if (report.diagnostics.empty() || !out.schedule.tours.empty() || instance.size() == 0) {
    const auto violations = validate_schedule(out.schedule, instance);
    for (const auto& v : violations) report.diagnostics.push_back(v.message);
    if (violations.empty()) {
      report.objective = schedule_objective(out.schedule, instance);
      report.validation = "ok";
    }
  }
  if (!report.ok()) out.schedule.tours.clear();
  report.wall_s = total.seconds();
  return out;
}

namespace {

json objective_json(const Objective& o) {
  return json{{"vehicles", o.vehicles}, {"duration_s", o.duration}, {"travel_s", o.travel}};
}

Objective objective_from(const json& j) {
  return {j.at("vehicles").get<std::int64_t>(), j.at("duration_s").get<Seconds>(),
          j.at("travel_s").get<Seconds>()};
}

}  // namespace

json to_json(const RunReport& r) {
  json trace = json::array();
  for (const auto& o : r.improve_trace) trace.push_back(objective_json(o));
  json out{{"instance", r.instance},
           {"n", r.n},
           {"capacity", r.capacity},
           {"variant", to_string(r.variant)},
           {"direction", to_string(r.direction)},
           {"improve", r.improve},
           {"wall_s", r.wall_s},
           {"phases",
            {{"sweep_s", r.phases.sweep_s},
             {"improve_s", r.phases.improve_s},
             {"routing_s", r.phases.routing_s}}},
           {"initial", objective_json(r.initial)},
           {"objective", objective_json(r.objective)},
           {"improve_moves", r.improve_moves},
           {"improve_evaluations", r.improve_evaluations},
           {"improve_trace", std::move(trace)},
           {"validation", r.validation},
           {"diagnostics", r.diagnostics}};
  out["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  out["chosen_direction"] = r.chosen_direction ? json(to_string(*r.chosen_direction)) : json(nullptr);
  return out;
}

RunReport report_from_json(const json& j) {
  try {
    RunReport r;
    r.instance = j.at("instance").get<std::string>();
    if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
    r.n = j.at("n").get<std::size_t>();
    r.capacity = j.at("capacity").get<double>();
    auto variant = parse_variant(j.at("variant").get<std::string>());
    auto direction = parse_direction(j.at("direction").get<std::string>());
    if (!variant || !direction) throw io::ParseError("report has unknown variant or direction");
    r.variant = *variant;
    r.direction = *direction;
    if (!j.at("chosen_direction").is_null()) {
      r.chosen_direction = j.at("chosen_direction").get<std::string>() == "cw"
                               ? Direction::clockwise
                               : Direction::counterclockwise;
    }
    r.improve = j.at("improve").get<bool>();
    r.wall_s = j.at("wall_s").get<double>();
    r.phases.sweep_s = j.at("phases").at("sweep_s").get<double>();
    r.phases.improve_s = j.at("phases").at("improve_s").get<double>();
    r.phases.routing_s = j.at("phases").at("routing_s").get<double>();
    r.initial = objective_from(j.at("initial"));
    r.objective = objective_from(j.at("objective"));
    r.improve_moves = j.at("improve_moves").get<std::size_t>();
    r.improve_evaluations = j.at("improve_evaluations").get<std::size_t>();
    for (const auto& o : j.at("improve_trace")) r.improve_trace.push_back(objective_from(o));
    r.validation = j.at("validation").get<std::string>();
    r.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw io::ParseError(std::string("malformed report: ") + e.what());
  }
}

Summary aggregate(std::span<const RunReport> reports) {
  using Cell = std::tuple<int, double, bool>;
  std::map<Cell, SummaryRow> cells;
  std::map<Cell, std::size_t> failures;
  for (const auto& r : reports) {
    const Cell key{static_cast<int>(r.variant), r.capacity, r.improve};
    if (!r.ok()) {
      ++failures[key];
      continue;
    }
    auto& row = cells[key];
    row.variant = r.variant;
    row.capacity = r.capacity;
    row.improve = r.improve;
    ++row.runs;
    row.mean_t_s += r.wall_s;
    row.mean_vehicles += static_cast<double>(r.objective.vehicles);
    row.mean_duration_h += static_cast<double>(r.objective.duration) / 3600.0;
    row.mean_travel_h += static_cast<double>(r.objective.travel) / 3600.0;
  }

  Summary out;
  for (auto& [key, row] : cells) {
    const auto k = static_cast<double>(row.runs);
    row.mean_t_s /= k;
    row.mean_vehicles /= k;
    row.mean_duration_h /= k;
    row.mean_travel_h /= k;
    out.rows.push_back(row);
  }
  for (const auto& [key, count] : failures) {
    if (cells.count(key)) continue;
    std::ostringstream msg;
    msg << "no validated run for variant " << to_string(static_cast<SweepVariant>(std::get<0>(key)))
        << ", capacity " << std::get<1>(key) << ", improve "
        << (std::get<2>(key) ? "on" : "off") << " (" << count << " failed); cell omitted";
    out.warnings.push_back(msg.str());
  }
  return out;
}

std::string summary_csv(const Summary& summary) {
  std::ostringstream out;
  out << "variant,improve,capacity,runs,t_s,lambda1,lambda2_h,lambda3_h\n";
  out.setf(std::ios::fixed);
  for (const auto& row : summary.rows) {
    out.precision(1);
    out << to_string(row.variant) << ',' << (row.improve ? "on" : "off") << ',' << row.capacity
        << ',' << row.runs << ',';
    out.precision(3);
    out << row.mean_t_s << ',';
    out.precision(2);
    out << row.mean_vehicles << ',' << row.mean_duration_h << ',' << row.mean_travel_h << '\n';
  }
  return out.str();
}

std::vector<RunReport> run_bench(const BenchPlan& plan,
                                 const std::function<void(const RunReport&)>& on_done) {
  struct Task {
    std::size_t n;
    double capacity;
    std::uint64_t seed;
    std::vector<std::size_t> slots;  // one per (variant, improve)
  };
  std::vector<Task> tasks;
  std::size_t slot = 0;
  for (auto n : plan.sizes) {
    for (auto capacity : plan.capacities) {
      for (auto seed : plan.seeds) {
        Task task{n, capacity, seed, {}};
        for (std::size_t k = 0; k < plan.variants.size() * plan.improve.size(); ++k) {
          task.slots.push_back(slot++);
        }
        tasks.push_back(std::move(task));
      }
    }
  }

  std::vector<RunReport> reports(slot);
  std::mutex lock;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      const auto& task = tasks[t];
      GenConfig config;
      config.n = task.n;
      config.capacity = task.capacity;
      config.seed = task.seed;
      const Instance instance = generate(config);
      std::size_t k = 0;
      for (auto variant : plan.variants) {
        for (bool improve : plan.improve) {
          auto result = run_pipeline(instance, {variant, plan.direction, improve, plan.router});
          result.report.seed = task.seed;
          result.report.instance = "n" + std::to_string(task.n) + "_c" +
                                   std::to_string(static_cast<long long>(task.capacity)) + "_s" +
                                   std::to_string(task.seed);
          std::lock_guard guard(lock);
          reports[task.slots[k++]] = result.report;
          if (on_done) on_done(result.report);
        }
      }
    }
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(plan.jobs, tasks.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return reports;
}

}  // namespace vrpstw

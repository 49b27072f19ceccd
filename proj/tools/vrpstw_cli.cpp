#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "vrpstw/bench.hpp"
#include "vrpstw/gen.hpp"
#include "vrpstw/io.hpp"
#include "vrpstw/router.hpp"

namespace fs = std::filesystem;
using namespace vrpstw;
using nlohmann::json;

namespace {

const std::map<std::string, SweepVariant> kVariants{{"traditional", SweepVariant::traditional},
                                                    {"a", SweepVariant::a},
                                                    {"b", SweepVariant::b},
                                                    {"c", SweepVariant::c}};
const std::map<std::string, DirectionChoice> kDirections{
    {"cw", DirectionChoice::cw}, {"ccw", DirectionChoice::ccw}, {"both", DirectionChoice::both}};

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    io::write_file(out, text);
  }
}

RouterOptions router_options(double budget) {
  RouterOptions r;
  if (budget > 0.0) r.time_budget_s = budget;
  return r;
}

struct GenArgs {
  GenConfig config;
  void attach(CLI::App* cmd) {
    cmd->add_option("--n", config.n, "Number of customers")->check(CLI::PositiveNumber);
    cmd->add_option("--capacity", config.capacity, "Vehicle capacity")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", config.seed, "Random seed");
    cmd->add_option("--grid", config.grid_m, "Grid side length in metres");
    cmd->add_option("--speed", config.speed_kmh, "Vehicle speed in km/h");
    cmd->add_option("--windows", config.window_count, "Number of one-hour windows");
    cmd->add_option("--service", config.service_s, "Service time in seconds");
    cmd->add_flag("--corner-depot", config.corner_depot, "Depot at (0, 0) instead of the centre");
  }
};

void print_report(const RunReport& r) {
  std::cerr << to_string(r.variant) << " improve=" << (r.improve ? "on" : "off")
            << " direction=" << (r.chosen_direction ? to_string(*r.chosen_direction) : "-")
            << " validation=" << r.validation << " vehicles=" << r.objective.vehicles
            << " duration_h=" << r.objective.duration / 3600.0
            << " travel_h=" << r.objective.travel / 3600.0 << " t=" << r.wall_s << "s\n";
  for (const auto& d : r.diagnostics) std::cerr << "  " << d << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vehicle routing with structured time windows"};
  app.require_subcommand(1);

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  GenArgs gen_args;
  gen_args.attach(gen_cmd);
  std::string gen_out;
  gen_cmd->add_option("--out", gen_out, "Output file (stdout when omitted)");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Run the full pipeline on one instance");
  std::string solve_instance;
  GenArgs solve_gen;
  SweepVariant solve_variant = SweepVariant::a;
  DirectionChoice solve_direction = DirectionChoice::both;
  std::string solve_improve = "off";
  double solve_budget = 0.0;
  std::string solve_out;
  solve_cmd->add_option("instance", solve_instance,
                        "Instance JSON; generated from --n/--capacity/--seed when omitted");
  solve_gen.attach(solve_cmd);
  solve_cmd->add_option("--variant", solve_variant)
      ->transform(CLI::CheckedTransformer(kVariants, CLI::ignore_case))
      ->option_text("{traditional,a,b,c}");
  solve_cmd->add_option("--direction", solve_direction, "Sweep direction")
      ->transform(CLI::CheckedTransformer(kDirections, CLI::ignore_case).description("{cw,ccw,both}"))
      ->option_text("{cw,ccw,both}");
  solve_cmd->add_option("--improve", solve_improve)->check(CLI::IsMember({"on", "off"}));
  solve_cmd->add_option("--router-budget-s", solve_budget, "Per-call router limit, 0 = none")->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--out", solve_out, "Directory for schedule.json and report.json");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Batch runs over generated instances");
  std::vector<std::size_t> bench_n{250};
  std::vector<double> bench_capacity{200.0};
  std::uint64_t bench_seed = 1;
  std::size_t bench_seeds = 5;
  std::vector<std::string> bench_variants{"a", "b", "c"};
  std::string bench_improve = "both";
  DirectionChoice bench_direction = DirectionChoice::both;
  double bench_budget = 0.0;
  unsigned bench_jobs = 1;
  std::string bench_out;
  bench_cmd->add_option("--n", bench_n, "Instance sizes")->expected(1, -1)->delimiter(',');
  bench_cmd->add_option("--capacity", bench_capacity, "Capacities")->expected(1, -1)->delimiter(',');
  bench_cmd->add_option("--seed", bench_seed, "First seed");
  bench_cmd->add_option("--seeds", bench_seeds, "Number of consecutive seeds");
  bench_cmd->add_option("--variant", bench_variants, "Variants")
      ->expected(1, -1)
      ->delimiter(',')
      ->check(CLI::IsMember({"traditional", "a", "b", "c"}));
  bench_cmd->add_option("--improve", bench_improve)->check(CLI::IsMember({"on", "off", "both"}));
  bench_cmd->add_option("--direction", bench_direction, "Sweep direction")
      ->transform(CLI::CheckedTransformer(kDirections, CLI::ignore_case).description("{cw,ccw,both}"))
      ->option_text("{cw,ccw,both}");
  bench_cmd->add_option("--router-budget-s", bench_budget)->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--jobs", bench_jobs, "Concurrent pipelines")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--out", bench_out, "Directory for reports and summary.csv");

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "Check a schedule against an instance");
  std::string validate_instance;
  std::string validate_schedule_path;
  validate_cmd->add_option("instance", validate_instance)->required()->check(CLI::ExistingFile);
  validate_cmd->add_option("schedule", validate_schedule_path)
      ->required()
      ->check(CLI::ExistingFile);

  // route
  auto* route_cmd = app.add_subcommand("route", "Route a single cluster");
  std::string route_instance;
  std::string route_cluster;
  std::string route_mode = "optimize";
  double route_budget = 0.0;
  std::string route_out;
  route_cmd->add_option("instance", route_instance)->required()->check(CLI::ExistingFile);
  route_cmd->add_option("cluster", route_cluster, "JSON {\"customers\": [ids]}")
      ->required()
      ->check(CLI::ExistingFile);
  route_cmd->add_option("--mode", route_mode)->check(CLI::IsMember({"optimize", "feasibility"}));
  route_cmd->add_option("--router-budget-s", route_budget)->check(CLI::NonNegativeNumber);
  route_cmd->add_option("--out", route_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and friends exit 0; usage errors share the bad-input code.
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*gen_cmd) {
      validate(gen_args.config);
      io::InstanceFile file{generate(gen_args.config), gen_args.config};
      emit(io::canonical(io::to_json(file)), gen_out);
      return 0;
    }

    if (*solve_cmd) {
      std::optional<io::InstanceFile> file;
      if (solve_instance.empty()) {
        file = io::InstanceFile{generate(solve_gen.config), solve_gen.config};
      } else {
        file = io::load_instance(solve_instance);
      }
      const PipelineOptions options{solve_variant, solve_direction, solve_improve == "on",
                                    router_options(solve_budget)};
      auto result = run_pipeline(file->instance, options);
      result.report.instance =
          solve_instance.empty() ? "generated" : fs::path(solve_instance).stem().string();
      if (file->generator) result.report.seed = file->generator->seed;
      print_report(result.report);
      const auto report_text = io::canonical(to_json(result.report));
      if (solve_out.empty()) {
        std::cout << report_text;
      } else {
        io::write_file(fs::path(solve_out) / "report.json", report_text);
        if (result.report.ok()) {
          io::write_file(fs::path(solve_out) / "schedule.json",
                         io::canonical(io::to_json(result.schedule, file->instance)));
        }
      }
      return result.report.ok() ? 0 : 1;
    }

    if (*bench_cmd) {
      BenchPlan plan;
      plan.sizes = bench_n;
      plan.capacities = bench_capacity;
      plan.seeds.clear();
      for (std::size_t k = 0; k < bench_seeds; ++k) plan.seeds.push_back(bench_seed + k);
      plan.variants.clear();
      for (const auto& v : bench_variants) plan.variants.push_back(kVariants.at(v));
      if (bench_improve == "both") {
        plan.improve = {false, true};
      } else {
        plan.improve = {bench_improve == "on"};
      }
      plan.direction = bench_direction;
      plan.router = router_options(bench_budget);
      plan.jobs = bench_jobs;

      const auto reports = run_bench(plan, [&](const RunReport& r) {
        std::cerr << r.instance << " ";
        print_report(r);
        if (!bench_out.empty()) {
          const auto name = r.instance + "_" + to_string(r.variant) + "_" +
                            (r.improve ? "improve" : "plain") + ".json";
          io::write_file(fs::path(bench_out) / "reports" / name, io::canonical(to_json(r)));
        }
      });
      const auto summary = aggregate(reports);
      for (const auto& w : summary.warnings) std::cerr << "warning: " << w << "\n";
      const auto csv = summary_csv(summary);
      if (bench_out.empty()) {
        std::cout << csv;
      } else {
        io::write_file(fs::path(bench_out) / "summary.csv", csv);
      }
      std::size_t failed = 0;
      for (const auto& r : reports) failed += r.ok() ? 0 : 1;
      std::cerr << reports.size() - failed << "/" << reports.size() << " runs validated\n";
      return failed == 0 ? 0 : 1;
    }

    if (*validate_cmd) {
      const auto file = io::load_instance(validate_instance);
      const auto schedule =
          io::schedule_from_json(io::parse(io::read_file(validate_schedule_path)), file.instance);
      const auto violations = validate_schedule(schedule, file.instance);
      for (const auto& v : violations) {
        std::cout << to_string(v.kind) << ": " << v.message << "\n";
      }
      if (violations.empty()) {
        const auto o = schedule_objective(schedule, file.instance);
        std::cout << "ok vehicles=" << o.vehicles << " duration_s=" << o.duration
                  << " travel_s=" << o.travel << "\n";
        return 0;
      }
      return 1;
    }

    if (*route_cmd) {
      const auto file = io::load_instance(route_instance);
      RoutingRequest request;
      request.customers =
          io::cluster_from_json(io::parse(io::read_file(route_cluster)), file.instance);
      request.mode = route_mode == "optimize" ? RoutingMode::optimize : RoutingMode::feasibility;
      if (route_budget > 0.0) request.time_budget_s = route_budget;
      const auto result = solve(file.instance, request);
      emit(io::canonical(io::to_json(result, file.instance)), route_out);
      return result.status == RoutingStatus::feasible ? 0 : 1;
    }
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

// Python bindings. Structured values cross the boundary as JSON text; the
// vrpstw package decodes them into dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vrpstw/bench.hpp"
#include "vrpstw/feasibility.hpp"
#include "vrpstw/gen.hpp"
#include "vrpstw/io.hpp"
#include "vrpstw/router.hpp"

namespace py = pybind11;
using namespace vrpstw;
using nlohmann::json;

namespace {

io::InstanceFile generate_file(std::size_t n, double capacity, std::uint64_t seed,
                               std::size_t window_count, bool corner_depot) {
  GenConfig cfg;
  cfg.n = n;
  cfg.capacity = capacity;
  cfg.seed = seed;
  cfg.window_count = window_count;
  cfg.corner_depot = corner_depot;
  return {generate(cfg), cfg};
}

std::string solve_json(const io::InstanceFile& file, const std::string& variant,
                       const std::string& direction, bool improve,
                       std::optional<double> router_budget_s) {
  PipelineOptions opt;
  const auto v = parse_variant(variant);
  if (!v) throw py::value_error("unknown variant '" + variant + "'");
  const auto d = parse_direction(direction);
  if (!d) throw py::value_error("unknown direction '" + direction + "'");
  opt.variant = *v;
  opt.direction = *d;
  opt.improve = improve;
  opt.router.time_budget_s = router_budget_s;
  PipelineResult result;
  {
    py::gil_scoped_release release;
    result = run_pipeline(file.instance, opt);
  }
  if (file.generator) result.report.seed = file.generator->seed;
  json out{{"report", to_json(result.report)}};
  out["schedule"] = result.report.ok() ? io::to_json(result.schedule, file.instance) : json();
  return out.dump();
}

std::string route_json(const io::InstanceFile& file, const std::vector<int>& ids,
                       const std::string& mode, std::optional<double> budget) {
  RoutingRequest req;
  for (int id : ids) {
    const auto idx = file.instance.find(id);
    if (!idx) throw py::key_error("unknown customer " + std::to_string(id));
    req.customers.push_back(*idx);
  }
  if (mode == "optimize") {
    req.mode = RoutingMode::optimize;
  } else if (mode == "feasibility") {
    req.mode = RoutingMode::feasibility;
  } else {
    throw py::value_error("mode must be 'optimize' or 'feasibility'");
  }
  req.time_budget_s = budget;
  RoutingResult r;
  {
    py::gil_scoped_release release;
    r = solve(file.instance, req);
  }
  return io::to_json(r, file.instance).dump();
}

std::vector<std::string> validate_json(const io::InstanceFile& file, const std::string& schedule) {
  const auto s = io::schedule_from_json(io::parse(schedule), file.instance);
  std::vector<std::string> out;
  for (const auto& v : validate_schedule(s, file.instance)) out.push_back(v.message);
  return out;
}

Seconds arborescence(const std::vector<std::vector<Seconds>>& matrix, std::optional<std::size_t> root) {
  const std::size_t n = matrix.size();
  std::vector<Seconds> flat;
  flat.reserve(n * n);
  for (const auto& row : matrix) {
    if (row.size() != n) throw py::value_error("matrix must be square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return root ? min_arborescence_rooted(flat, n, *root) : min_arborescence_any_root(flat, n);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sweep heuristics for vehicle routing with structured time windows";

  py::register_exception<io::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<io::InstanceFile>(m, "Instance")
      .def_static("from_json", [](const std::string& text) { return io::instance_from_json(io::parse(text)); },
                  py::arg("text"))
      .def_static("load", [](const std::string& path) { return io::load_instance(path); }, py::arg("path"))
      .def("to_json", [](const io::InstanceFile& f) { return io::canonical(io::to_json(f)); })
      .def("save", [](const io::InstanceFile& f, const std::string& path) { io::save_instance(path, f); },
           py::arg("path"))
      .def("__len__", [](const io::InstanceFile& f) { return f.instance.size(); })
      .def_property_readonly("capacity", [](const io::InstanceFile& f) { return f.instance.capacity().units(); })
      .def_property_readonly("speed_kmh", [](const io::InstanceFile& f) { return f.instance.speed_kmh(); })
      .def_property_readonly("window_count", [](const io::InstanceFile& f) { return f.instance.windows().size(); })
      .def_property_readonly("seed", [](const io::InstanceFile& f) -> std::optional<std::uint64_t> {
        if (f.generator) return f.generator->seed;
        return std::nullopt;
      })
      .def("__repr__", [](const io::InstanceFile& f) {
        return "<Instance n=" + std::to_string(f.instance.size()) +
               " windows=" + std::to_string(f.instance.windows().size()) + ">";
      });

  m.def("generate", &generate_file, py::arg("n") = 250, py::arg("capacity") = 200.0,
        py::arg("seed") = 1, py::arg("window_count") = 10, py::arg("corner_depot") = false);
  m.def("_solve", &solve_json, py::arg("instance"), py::arg("variant") = "a",
        py::arg("direction") = "both", py::arg("improve") = false,
        py::arg("router_budget_s") = std::nullopt);
  m.def("_route", &route_json, py::arg("instance"), py::arg("customers"),
        py::arg("mode") = "optimize", py::arg("router_budget_s") = std::nullopt);
  m.def("_validate", &validate_json, py::arg("instance"), py::arg("schedule"));
  m.def("travel_time",
        [](std::pair<double, double> p, std::pair<double, double> q, double speed_kmh) {
          if (!(speed_kmh > 0.0)) throw py::value_error("speed must be positive");
          return travel_time({p.first, p.second}, {q.first, q.second}, kmh_to_mps(speed_kmh));
        },
        py::arg("p"), py::arg("q"), py::arg("speed_kmh") = 20.0);
  m.def("lex_compare",
        [](std::tuple<std::int64_t, Seconds, Seconds> a, std::tuple<std::int64_t, Seconds, Seconds> b) {
          const auto c = lex_compare({std::get<0>(a), std::get<1>(a), std::get<2>(a)},
                                     {std::get<0>(b), std::get<1>(b), std::get<2>(b)});
          return c < 0 ? -1 : (c > 0 ? 1 : 0);
        },
        py::arg("a"), py::arg("b"));
  m.def("min_arborescence", &arborescence, py::arg("matrix"), py::arg("root") = std::nullopt);
}

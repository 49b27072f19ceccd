#include "vrpstw/io.hpp"

#include <fstream>
#include <sstream>

namespace vrpstw::io {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + " must be an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing field " + where + "." + key);
  return *it;
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + " must be a number");
  return j.get<double>();
}

std::int64_t integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + " must be an integer");
  return j.get<std::int64_t>();
}

const json& array(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + " must be an array");
  return j;
}

std::string at(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

CustomerIndex lookup(const Instance& instance, std::int64_t id, const std::string& where) {
  auto idx = instance.find(static_cast<int>(id));
  if (!idx) throw ParseError(where + " references unknown customer " + std::to_string(id));
  return *idx;
}

}  // namespace

json to_json(const GenConfig& c) {
  return json{{"n", c.n},
              {"capacity", c.capacity},
              {"seed", c.seed},
              {"grid_m", c.grid_m},
              {"speed_kmh", c.speed_kmh},
              {"window_count", c.window_count},
              {"window_length_s", c.window_length_s},
              {"service_s", c.service_s},
              {"weight_mean", c.weight_mean},
              {"weight_sd", c.weight_sd},
              {"weight_min", c.weight_min},
              {"weight_max", c.weight_max},
              {"uniform_fraction", c.uniform_fraction},
              {"corner_depot", c.corner_depot}};
}

GenConfig gen_config_from_json(const json& j) {
  const std::string w = "generator";
  GenConfig c;
  c.n = static_cast<std::size_t>(integer(field(j, "n", w), w + ".n"));
  c.capacity = number(field(j, "capacity", w), w + ".capacity");
  const auto& seed = field(j, "seed", w);
  if (!seed.is_number_unsigned()) throw ParseError(w + ".seed must be a non-negative integer");
  c.seed = seed.get<std::uint64_t>();
  c.grid_m = number(field(j, "grid_m", w), w + ".grid_m");
  c.speed_kmh = number(field(j, "speed_kmh", w), w + ".speed_kmh");
  c.window_count = static_cast<std::size_t>(integer(field(j, "window_count", w), w));
  c.window_length_s = integer(field(j, "window_length_s", w), w + ".window_length_s");
  c.service_s = integer(field(j, "service_s", w), w + ".service_s");
  c.weight_mean = number(field(j, "weight_mean", w), w + ".weight_mean");
  c.weight_sd = number(field(j, "weight_sd", w), w + ".weight_sd");
  c.weight_min = number(field(j, "weight_min", w), w + ".weight_min");
  c.weight_max = number(field(j, "weight_max", w), w + ".weight_max");
  c.uniform_fraction = number(field(j, "uniform_fraction", w), w + ".uniform_fraction");
  const auto& corner = field(j, "corner_depot", w);
  if (!corner.is_boolean()) throw ParseError(w + ".corner_depot must be a boolean");
  c.corner_depot = corner.get<bool>();
  return c;
}

json to_json(const InstanceFile& file) {
  const Instance& inst = file.instance;
  json windows = json::array();
  for (const auto& w : inst.windows()) {
    windows.push_back({{"id", w.id}, {"start_s", w.start}, {"end_s", w.end}});
  }
  json customers = json::array();
  for (const auto& c : inst.customers()) {
    customers.push_back({{"id", c.id},
                         {"x", c.location.x},
                         {"y", c.location.y},
                         {"window", inst.windows()[c.window].id},
                         {"weight", c.weight.units()},
                         {"service_s", c.service}});
  }
  json out{{"capacity", inst.capacity().units()},
           {"speed_kmh", inst.speed_kmh()},
           {"depot", {inst.depot().x, inst.depot().y}},
           {"windows", std::move(windows)},
           {"customers", std::move(customers)}};
  if (file.generator) out["generator"] = to_json(*file.generator);
  return out;
}

InstanceFile instance_from_json(const json& j) {
  const std::string root = "instance";
  std::vector<TimeWindow> windows;
  const auto& jw = array(field(j, "windows", root), "windows");
  for (std::size_t i = 0; i < jw.size(); ++i) {
    const auto where = at("windows", i);
    windows.push_back({static_cast<int>(integer(field(jw[i], "id", where), where + ".id")),
                       integer(field(jw[i], "start_s", where), where + ".start_s"),
                       integer(field(jw[i], "end_s", where), where + ".end_s")});
  }
  auto window_index = [&](std::int64_t id, const std::string& where) {
    for (std::size_t k = 0; k < windows.size(); ++k) {
      if (windows[k].id == id) return k;
    }
    throw ParseError(where + " references unknown window " + std::to_string(id));
  };

  std::vector<Customer> customers;
  const auto& jc = array(field(j, "customers", root), "customers");
  customers.reserve(jc.size());
  for (std::size_t i = 0; i < jc.size(); ++i) {
    const auto where = at("customers", i);
    const auto& c = jc[i];
    Customer cust;
    cust.id = static_cast<int>(integer(field(c, "id", where), where + ".id"));
    cust.location = {number(field(c, "x", where), where + ".x"),
                     number(field(c, "y", where), where + ".y")};
    cust.window = window_index(integer(field(c, "window", where), where + ".window"), where);
    cust.weight = Weight::from_units(number(field(c, "weight", where), where + ".weight"));
    cust.service = integer(field(c, "service_s", where), where + ".service_s");
    customers.push_back(cust);
  }

  const auto& depot = array(field(j, "depot", root), "depot");
  if (depot.size() != 2) throw ParseError("depot must be [x, y]");

  InstanceFile file{Instance(std::move(windows), std::move(customers),
                             Point{number(depot[0], "depot[0]"), number(depot[1], "depot[1]")},
                             Weight::from_units(number(field(j, "capacity", root), "capacity")),
                             number(field(j, "speed_kmh", root), "speed_kmh")),
                    std::nullopt};
  if (auto it = j.find("generator"); it != j.end()) file.generator = gen_config_from_json(*it);
  return file;
}

json to_json(const Tour& tour, const Instance& instance) {
  json ids = json::array();
  for (auto a : tour.customers) ids.push_back(instance.customer(a).id);
  return json{{"customers", std::move(ids)}, {"arrivals_s", tour.arrivals}};
}

Tour tour_from_json(const json& j, const Instance& instance) {
  const std::string where = "tour";
  Tour tour;
  const auto& ids = array(field(j, "customers", where), where + ".customers");
  const auto& arrivals = array(field(j, "arrivals_s", where), where + ".arrivals_s");
  if (arrivals.size() != ids.size()) {
    throw ParseError(where + ": " + std::to_string(ids.size()) + " customers but " +
                     std::to_string(arrivals.size()) + " arrivals");
  }
  for (std::size_t i = 0; i < ids.size(); ++i) {
    tour.customers.push_back(lookup(instance, integer(ids[i], at("customers", i)), where));
  }
  for (std::size_t i = 0; i < arrivals.size(); ++i) {
    tour.arrivals.push_back(integer(arrivals[i], at("arrivals_s", i)));
  }
  return tour;
}

json to_json(const Schedule& schedule, const Instance& instance) {
  json tours = json::array();
  for (const auto& tour : schedule.tours) tours.push_back(to_json(tour, instance));
  return json{{"tours", std::move(tours)}};
}

Schedule schedule_from_json(const json& j, const Instance& instance) {
  Schedule schedule;
  const auto& tours = array(field(j, "tours", "schedule"), "tours");
  for (std::size_t i = 0; i < tours.size(); ++i) {
    try {
      schedule.tours.push_back(tour_from_json(tours[i], instance));
    } catch (const ParseError& e) {
      throw ParseError(at("tours", i) + ": " + e.what());
    }
  }
  return schedule;
}

json to_json(const RoutingResult& result, const Instance& instance) {
  json out{{"status", to_string(result.status)}};
  if (result.tour) {
    out["tour"] = to_json(*result.tour, instance);
  }
  if (result.objective) {
    out["duration_s"] = result.objective->duration;
    out["travel_s"] = result.objective->travel;
  }
  return out;
}

std::vector<CustomerIndex> cluster_from_json(const json& j, const Instance& instance) {
  std::vector<CustomerIndex> out;
  const auto& ids = array(field(j, "customers", "cluster"), "cluster.customers");
  for (std::size_t i = 0; i < ids.size(); ++i) {
    out.push_back(lookup(instance, integer(ids[i], at("customers", i)), "cluster"));
  }
  return out;
}

std::string canonical(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("parse error at byte " + std::to_string(e.byte) + ": " + e.what(), e.byte);
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

InstanceFile load_instance(const std::filesystem::path& path) {
  return instance_from_json(parse(read_file(path)));
}

void save_instance(const std::filesystem::path& path, const InstanceFile& file) {
  write_file(path, canonical(to_json(file)));
}

}  // namespace vrpstw::io

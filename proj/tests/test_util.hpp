#pragma once

#include <memory>
#include <vector>

#include "vrpstw/model.hpp"

namespace testutil {

using namespace vrpstw;

struct Stop {
  std::size_t window = 0;
  double weight = 1.0;
  Seconds service = 300;
  Point location{};
};

// Instance whose travel times come from `times`, an (n+1)x(n+1) matrix with
// the depot last.
inline Instance matrix_instance(std::vector<TimeWindow> windows, const std::vector<Stop>& stops,
                                std::vector<std::vector<Seconds>> times, double capacity = 100.0) {
  std::vector<Customer> cs;
  for (std::size_t i = 0; i < stops.size(); ++i) {
    cs.push_back({static_cast<int>(i + 1), stops[i].location, stops[i].window,
                  Weight::from_units(stops[i].weight), stops[i].service});
  }
  Instance base(std::move(windows), std::move(cs), {0.0, 0.0}, Weight::from_units(capacity),
                20.0);
  std::vector<Seconds> flat;
  for (const auto& row : times) flat.insert(flat.end(), row.begin(), row.end());
  return base.with_travel_times(std::make_shared<MatrixTravelTimes>(stops.size(), std::move(flat)));
}

// Instance on coordinates with the default rounded Euclidean times.
inline Instance point_instance(std::vector<TimeWindow> windows, const std::vector<Stop>& stops,
                               Point depot = {0.0, 0.0}, double capacity = 100.0,
                               double speed_kmh = 20.0) {
  std::vector<Customer> cs;
  for (std::size_t i = 0; i < stops.size(); ++i) {
    cs.push_back({static_cast<int>(i + 1), stops[i].location, stops[i].window,
                  Weight::from_units(stops[i].weight), stops[i].service});
  }
  return Instance(std::move(windows), std::move(cs), depot, Weight::from_units(capacity),
                  speed_kmh);
}

inline std::vector<CustomerIndex> all_customers(const Instance& inst) {
  std::vector<CustomerIndex> out(inst.size());
  for (CustomerIndex a = 0; a < inst.size(); ++a) out[a] = a;
  return out;
}

}  // namespace testutil

#include "vrpstw/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace vrpstw {

Weight Weight::from_units(double units) {
  if (!std::isfinite(units)) throw ConfigError("weight must be finite");
  return Weight(std::llround(units * 1000.0));
}

double distance(Point p, Point q) { return std::hypot(p.x - q.x, p.y - q.y); }

Seconds travel_time(Point p, Point q, double speed_mps) {
  if (!(speed_mps > 0.0) || !std::isfinite(speed_mps)) {
    throw ConfigError("travel speed must be positive");
  }
  return static_cast<Seconds>(std::llround(distance(p, q) / speed_mps));
}

MatrixTravelTimes::MatrixTravelTimes(std::size_t customers, std::vector<Seconds> times)
    : n_(customers), times_(std::move(times)) {
  if (times_.size() != (n_ + 1) * (n_ + 1)) {
    throw ConfigError("travel matrix must be (n+1)x(n+1)");
  }
  if (std::any_of(times_.begin(), times_.end(), [](Seconds t) { return t < 0; })) {
    throw ConfigError("travel times must be nonnegative");
  }
}

Seconds MatrixTravelTimes::travel(Node from, Node to) const {
  return times_[index(from) * (n_ + 1) + index(to)];
}

Instance::Instance(std::vector<TimeWindow> windows, std::vector<Customer> customers, Point depot,
                   Weight capacity, double speed_kmh)
    : windows_(std::move(windows)),
      customers_(std::move(customers)),
      depot_(depot),
      capacity_(capacity),
      speed_kmh_(speed_kmh) {
  if (!(speed_kmh_ > 0.0) || !std::isfinite(speed_kmh_)) {
    throw ConfigError("speed_kmh must be positive");
  }
  if (capacity_ <= Weight{}) throw ConfigError("capacity must be positive");
  if (customers_.size() >= kDepot) throw ConfigError("too many customers");

  for (std::size_t j = 0; j < windows_.size(); ++j) {
    const auto& w = windows_[j];
    if (w.start >= w.end) {
      throw ConfigError("window " + std::to_string(w.id) + " has start >= end");
    }
    if (j > 0 && w.start < windows_[j - 1].end) {
      throw ConfigError("windows must be sorted and non-overlapping (window " +
                        std::to_string(w.id) + ")");
    }
    for (std::size_t k = 0; k < j; ++k) {
      if (windows_[k].id == w.id) {
        throw ConfigError("duplicate window id " + std::to_string(w.id));
      }
    }
  }

  by_id_.reserve(customers_.size());
  for (std::size_t i = 0; i < customers_.size(); ++i) {
    const auto& c = customers_[i];
    const std::string who = "customer " + std::to_string(c.id);
    if (!by_id_.emplace(c.id, static_cast<CustomerIndex>(i)).second) {
      throw ConfigError("duplicate " + who);
    }
    if (c.window >= windows_.size()) throw ConfigError(who + " references a missing window");
    if (c.weight <= Weight{} || c.weight > capacity_) {
      throw ConfigError(who + " weight must lie in ]0, capacity]");
    }
    if (c.service <= 0) throw ConfigError(who + " service time must be positive");
    if (!std::isfinite(c.location.x) || !std::isfinite(c.location.y)) {
      throw ConfigError(who + " has non-finite coordinates");
    }
  }
}

Seconds Instance::travel(Node from, Node to) const {
  if (provider_) return provider_->travel(from, to);
  return travel_time(location(from), location(to), speed_mps());
}

std::optional<CustomerIndex> Instance::find(int customer_id) const {
  auto it = by_id_.find(customer_id);
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Instance::find_window(int window_id) const {
  for (std::size_t j = 0; j < windows_.size(); ++j) {
    if (windows_[j].id == window_id) return j;
  }
  return std::nullopt;
}

Instance Instance::with_travel_times(std::shared_ptr<const TravelTimeProvider> provider) const {
  Instance copy = *this;
  copy.provider_ = std::move(provider);
  return copy;
}

std::strong_ordering lex_compare(const Objective& a, const Objective& b) { return a <=> b; }

TourCost tour_objectives(const Tour& tour, const Instance& instance) {
  if (tour.customers.empty()) throw std::domain_error("tour has no customers");
  if (tour.arrivals.size() != tour.customers.size()) {
    throw std::domain_error("tour arrivals do not match its customers");
  }
  const auto first = tour.customers.front();
  const auto last = tour.customers.back();
  TourCost cost;
  cost.duration = instance.travel(kDepot, first) + tour.arrivals.back() - tour.arrivals.front() +
                  instance.customer(last).service + instance.travel(last, kDepot);
  cost.travel = instance.travel(kDepot, first) + instance.travel(last, kDepot);
  for (std::size_t i = 0; i + 1 < tour.customers.size(); ++i) {
    cost.travel += instance.travel(tour.customers[i], tour.customers[i + 1]);
  }
  return cost;
}

Objective schedule_objective(const Schedule& schedule, const Instance& instance) {
  Objective total;
  total.vehicles = static_cast<std::int64_t>(schedule.tours.size());
  for (const auto& tour : schedule.tours) {
    const auto cost = tour_objectives(tour, instance);
    total.duration += cost.duration;
    total.travel += cost.travel;
  }
  return total;
}

Weight total_weight(std::span<const CustomerIndex> customers, const Instance& instance) {
  Weight sum;
  for (auto a : customers) sum += instance.customer(a).weight;
  return sum;
}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::capacity: return "capacity";
    case Violation::Kind::window: return "window";
    case Violation::Kind::chaining: return "chaining";
    case Violation::Kind::duplicate_customer: return "duplicate_customer";
    case Violation::Kind::missing_customer: return "missing_customer";
    case Violation::Kind::unknown_customer: return "unknown_customer";
    case Violation::Kind::malformed_tour: return "malformed_tour";
  }
  return "unknown";
}

std::vector<Violation> validate_schedule(const Schedule& schedule, const Instance& instance) {
  using Kind = Violation::Kind;
  std::vector<Violation> out;
  std::vector<int> seen(instance.size(), 0);

  for (std::size_t t = 0; t < schedule.tours.size(); ++t) {
    const auto& tour = schedule.tours[t];
    const std::string where = "tour " + std::to_string(t);
    if (tour.customers.empty()) {
      out.push_back({Kind::malformed_tour, t, std::nullopt, where + " is empty"});
      continue;
    }
    if (tour.arrivals.size() != tour.customers.size()) {
      out.push_back({Kind::malformed_tour, t, std::nullopt,
                     where + " has " + std::to_string(tour.arrivals.size()) + " arrivals for " +
                         std::to_string(tour.customers.size()) + " customers"});
      continue;
    }
    bool known = true;
    for (auto a : tour.customers) {
      if (a >= instance.size()) {
        out.push_back({Kind::unknown_customer, t, std::nullopt,
                       where + " references customer index " + std::to_string(a)});
        known = false;
      }
    }
    if (!known) continue;

    Weight load;
    for (std::size_t i = 0; i < tour.customers.size(); ++i) {
      const auto a = tour.customers[i];
      const auto& c = instance.customer(a);
      load += c.weight;
      if (seen[a]++ == 1) {
        out.push_back({Kind::duplicate_customer, t, c.id,
                       "customer " + std::to_string(c.id) + " appears in more than one place"});
      }
      const auto& w = instance.window_of(a);
      const Seconds alpha = tour.arrivals[i];
      if (alpha < w.start || alpha > w.end) {
        std::ostringstream msg;
        msg << where << ": customer " << c.id << " arrives at " << alpha << " outside ["
            << w.start << ", " << w.end << "]";
        out.push_back({Kind::window, t, c.id, msg.str()});
      }
      if (i + 1 < tour.customers.size()) {
        const auto b = tour.customers[i + 1];
        const Seconds need = c.service + instance.travel(a, b);
        if (tour.arrivals[i + 1] - alpha < need) {
          std::ostringstream msg;
          msg << where << ": gap " << c.id << " -> " << instance.customer(b).id << " is "
              << tour.arrivals[i + 1] - alpha << " s, needs " << need << " s";
          out.push_back({Kind::chaining, t, c.id, msg.str()});
        }
      }
    }
    if (load > instance.capacity()) {
      std::ostringstream msg;
      msg << where << " load " << load.units() << " exceeds capacity "
          << instance.capacity().units();
      out.push_back({Kind::capacity, t, std::nullopt, msg.str()});
    }
  }

  for (std::size_t a = 0; a < instance.size(); ++a) {
    if (seen[a] == 0) {
      const int id = instance.customers()[a].id;
      out.push_back({Kind::missing_customer, std::nullopt, id,
                     "customer " + std::to_string(id) + " is not served"});
    }
  }
  return out;
}

}  // namespace vrpstw

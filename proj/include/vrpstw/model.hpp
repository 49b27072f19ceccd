#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace vrpstw {

/// All times are integral seconds.
using Seconds = std::int64_t;

/// Position of a customer inside Instance::customers().
using CustomerIndex = std::uint32_t;

/// Travel-time endpoint: a customer index, or kDepot.
using Node = std::uint32_t;
inline constexpr Node kDepot = std::numeric_limits<Node>::max();

/// Raised for invalid parameters (nonpositive speed, broken window order, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Order weight with a fixed precision of 1/1000 unit, so sums compare exactly.
class Weight {
 public:
  constexpr Weight() = default;

  static constexpr Weight from_milli(std::int64_t milli) { return Weight(milli); }
  static Weight from_units(double units);

  constexpr std::int64_t milli() const { return milli_; }
  double units() const { return static_cast<double>(milli_) / 1000.0; }

  constexpr Weight& operator+=(Weight other) {
    milli_ += other.milli_;
    return *this;
  }
  friend constexpr Weight operator+(Weight a, Weight b) { return Weight(a.milli_ + b.milli_); }
  friend constexpr auto operator<=>(Weight, Weight) = default;

 private:
  constexpr explicit Weight(std::int64_t milli) : milli_(milli) {}
  std::int64_t milli_ = 0;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

double distance(Point p, Point q);

/// Rounded Euclidean travel time in seconds; speed in meters per second.
Seconds travel_time(Point p, Point q, double speed_mps);

/// km/h to m/s.
constexpr double kmh_to_mps(double kmh) { return kmh / 3.6; }

struct TimeWindow {
  int id = 0;
  Seconds start = 0;
  Seconds end = 0;
  Seconds length() const { return end - start; }
  friend bool operator==(const TimeWindow&, const TimeWindow&) = default;
};

struct Customer {
  int id = 0;
  Point location;
  std::size_t window = 0;  // index into Instance::windows()
  Weight weight;
  Seconds service = 0;
  friend bool operator==(const Customer&, const Customer&) = default;
};

/// Pluggable source of travel times. The default instance behaviour is the
/// rounded Euclidean time; a provider overrides it, e.g. with a matrix.
class TravelTimeProvider {
 public:
  virtual ~TravelTimeProvider() = default;
  virtual Seconds travel(Node from, Node to) const = 0;
};

/// Dense (n+1)x(n+1) matrix provider. Row/column n is the depot.
class MatrixTravelTimes final : public TravelTimeProvider {
 public:
  MatrixTravelTimes(std::size_t customers, std::vector<Seconds> times);
  Seconds travel(Node from, Node to) const override;

 private:
  std::size_t index(Node node) const { return node == kDepot ? n_ : node; }
  std::size_t n_;
  std::vector<Seconds> times_;
};

/// A validated problem instance. Immutable after construction.
class Instance {
 public:
  Instance(std::vector<TimeWindow> windows, std::vector<Customer> customers, Point depot,
           Weight capacity, double speed_kmh);

  const std::vector<TimeWindow>& windows() const { return windows_; }
  const std::vector<Customer>& customers() const { return customers_; }
  std::size_t size() const { return customers_.size(); }
  Point depot() const { return depot_; }
  Weight capacity() const { return capacity_; }
  double speed_kmh() const { return speed_kmh_; }
  double speed_mps() const { return kmh_to_mps(speed_kmh_); }

  const Customer& customer(CustomerIndex a) const { return customers_[a]; }
  const TimeWindow& window_of(CustomerIndex a) const { return windows_[customers_[a].window]; }
  Point location(Node node) const { return node == kDepot ? depot_ : customers_[node].location; }

  Seconds travel(Node from, Node to) const;

  std::optional<CustomerIndex> find(int customer_id) const;
  std::optional<std::size_t> find_window(int window_id) const;

  /// Returns a copy whose travel times come from `provider`.
  Instance with_travel_times(std::shared_ptr<const TravelTimeProvider> provider) const;

 private:
  std::vector<TimeWindow> windows_;
  std::vector<Customer> customers_;
  Point depot_;
  Weight capacity_;
  double speed_kmh_;
  std::unordered_map<int, CustomerIndex> by_id_;
  std::shared_ptr<const TravelTimeProvider> provider_;
};

struct Tour {
  std::vector<CustomerIndex> customers;
  std::vector<Seconds> arrivals;
  friend bool operator==(const Tour&, const Tour&) = default;
};

struct Schedule {
  std::vector<Tour> tours;
  friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// Lexicographic objective (vehicles, duration, travel). The defaulted
/// comparison is exactly the lexicographic order.
struct Objective {
  std::int64_t vehicles = 0;
  Seconds duration = 0;
  Seconds travel = 0;

  Objective& operator+=(const Objective& o) {
    vehicles += o.vehicles;
    duration += o.duration;
    travel += o.travel;
    return *this;
  }
  friend Objective operator+(Objective a, const Objective& b) { return a += b; }
  friend Objective operator-(Objective a, const Objective& b) {
    return {a.vehicles - b.vehicles, a.duration - b.duration, a.travel - b.travel};
  }
  friend auto operator<=>(const Objective&, const Objective&) = default;
};

std::strong_ordering lex_compare(const Objective& a, const Objective& b);

struct TourCost {
  Seconds duration = 0;
  Seconds travel = 0;
  friend auto operator<=>(const TourCost&, const TourCost&) = default;
};

/// Duration and travel time of one tour. Throws std::domain_error on an empty
/// tour or when arrivals are missing.
TourCost tour_objectives(const Tour& tour, const Instance& instance);

/// Sums over tours; vehicles is the tour count.
Objective schedule_objective(const Schedule& schedule, const Instance& instance);

Weight total_weight(std::span<const CustomerIndex> customers, const Instance& instance);

struct Violation {
  enum class Kind {
    capacity,
    window,
    chaining,
    duplicate_customer,
    missing_customer,
    unknown_customer,
    malformed_tour,
  };
  Kind kind;
  std::optional<std::size_t> tour;
  std::optional<int> customer_id;
  std::string message;
};

std::string to_string(Violation::Kind kind);

/// Every violated tour and partition condition. Empty means feasible.
std::vector<Violation> validate_schedule(const Schedule& schedule, const Instance& instance);

}  // namespace vrpstw

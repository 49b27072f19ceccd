#pragma once

#include <numbers>
#include <span>
#include <vector>

#include "vrpstw/model.hpp"

namespace vrpstw {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

enum class Direction { counterclockwise, clockwise };

const char* to_string(Direction d);

/// Maps any angle into [0, 2pi).
double normalize_angle(double radians);

/// Raw polar angle of `p` around `origin` in [0, 2pi); 0 when p == origin.
double raw_angle(Point p, Point origin);

/// Angle of a customer relative to the zero angle, mirrored for clockwise sweeps.
double angle_of(const Customer& customer, Point depot, double zero_angle, Direction direction);

/// Midpoint of the largest circular gap between consecutive customer angles.
/// Ties keep the first gap in sorted order. Throws std::domain_error when empty.
double choose_zero_angle(std::span<const Customer> customers, Point depot);

/// Polar representation of all customers of an instance.
///
/// Angles are strictly increasing along order(): customers sharing an exact
/// angle are ordered by (distance to depot, id) and nudged apart by one ulp so
/// that every position in the order can be separated by a sector boundary.
class PolarView {
 public:
  PolarView(const Instance& instance, Direction direction);
  PolarView(const Instance& instance, double zero_angle, Direction direction);

  double zero_angle() const { return zero_angle_; }
  Direction direction() const { return direction_; }

  double angle(CustomerIndex a) const { return angles_[a]; }
  std::span<const double> angles() const { return angles_; }

  /// All customers in increasing angle.
  std::span<const CustomerIndex> order() const { return order_; }

  /// Customers of window j in increasing angle.
  std::span<const CustomerIndex> window_order(std::size_t j) const { return window_orders_[j]; }
  std::size_t window_count() const { return window_orders_.size(); }

  /// Customers with angle in [from, to), in angular order.
  std::vector<CustomerIndex> sector(double from, double to) const;
  std::vector<CustomerIndex> sector(std::size_t window, double from, double to) const;

  /// Boundary angle placed before position `pos` of `ordered`: 0 at the
  /// front, 2pi at the back, otherwise strictly above the previous angle
  /// and at most the next one.
  double boundary_before(std::span<const CustomerIndex> ordered, std::size_t pos) const;

  /// Number of customers in `ordered` with angle below `theta`.
  std::size_t count_below(std::span<const CustomerIndex> ordered, double theta) const;

 private:
  void build(const Instance& instance);

  double zero_angle_;
  Direction direction_;
  std::vector<double> angles_;
  std::vector<CustomerIndex> order_;
  std::vector<std::vector<CustomerIndex>> window_orders_;
};

}  // namespace vrpstw

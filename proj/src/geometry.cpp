#include "vrpstw/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace vrpstw {

const char* to_string(Direction d) {
  return d == Direction::clockwise ? "cw" : "ccw";
}

double normalize_angle(double radians) {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double raw_angle(Point p, Point origin) {
  if (p == origin) return 0.0;
  return normalize_angle(std::atan2(p.y - origin.y, p.x - origin.x));
}

double angle_of(const Customer& customer, Point depot, double zero_angle, Direction direction) {
  if (customer.location == depot) return 0.0;
  const double rel = raw_angle(customer.location, depot) - zero_angle;
  return normalize_angle(direction == Direction::clockwise ? -rel : rel);
}

double choose_zero_angle(std::span<const Customer> customers, Point depot) {
  if (customers.empty()) throw std::domain_error("zero angle needs at least one customer");
  std::vector<double> raw;
  raw.reserve(customers.size());
  for (const auto& c : customers) raw.push_back(raw_angle(c.location, depot));
  std::sort(raw.begin(), raw.end());

  double best_gap = -1.0;
  double best_mid = 0.0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const double from = raw[i];
    const double to = i + 1 < raw.size() ? raw[i + 1] : raw.front() + kTwoPi;
    const double gap = to - from;
    if (gap > best_gap) {
      best_gap = gap;
      best_mid = from + gap / 2.0;
    }
  }
  return normalize_angle(best_mid);
}

PolarView::PolarView(const Instance& instance, Direction direction)
    : PolarView(instance,
                instance.size() == 0 ? 0.0
                                     : choose_zero_angle(instance.customers(), instance.depot()),
                direction) {}

PolarView::PolarView(const Instance& instance, double zero_angle, Direction direction)
    : zero_angle_(normalize_angle(zero_angle)), direction_(direction) {
  build(instance);
}

void PolarView::build(const Instance& instance) {
  const auto n = instance.size();
  angles_.resize(n);
  std::vector<double> dist(n);
  for (CustomerIndex a = 0; a < n; ++a) {
    const auto& c = instance.customer(a);
    angles_[a] = angle_of(c, instance.depot(), zero_angle_, direction_);
    dist[a] = distance(c.location, instance.depot());
  }
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), CustomerIndex{0});
  std::sort(order_.begin(), order_.end(), [&](CustomerIndex a, CustomerIndex b) {
    if (angles_[a] != angles_[b]) return angles_[a] < angles_[b];
    if (dist[a] != dist[b]) return dist[a] < dist[b];
    return instance.customer(a).id < instance.customer(b).id;
  });
  for (std::size_t k = 1; k < n; ++k) {
    double& cur = angles_[order_[k]];
    const double prev = angles_[order_[k - 1]];
    if (cur <= prev) cur = std::nextafter(prev, kTwoPi);
  }

  window_orders_.assign(instance.windows().size(), {});
  for (auto a : order_) window_orders_[instance.customer(a).window].push_back(a);
}

std::vector<CustomerIndex> PolarView::sector(double from, double to) const {
  if (from > to) throw std::domain_error("sector bounds must satisfy from <= to");
  std::vector<CustomerIndex> out;
  for (auto a : order_) {
    if (angles_[a] >= from && angles_[a] < to) out.push_back(a);
  }
  return out;
}

std::vector<CustomerIndex> PolarView::sector(std::size_t window, double from, double to) const {
  if (from > to) throw std::domain_error("sector bounds must satisfy from <= to");
  std::vector<CustomerIndex> out;
  for (auto a : window_orders_.at(window)) {
    if (angles_[a] >= from && angles_[a] < to) out.push_back(a);
  }
  return out;
}

double PolarView::boundary_before(std::span<const CustomerIndex> ordered, std::size_t pos) const {
  if (pos == 0) return 0.0;
  if (pos >= ordered.size()) return kTwoPi;
  const double lo = angles_[ordered[pos - 1]];
  const double hi = angles_[ordered[pos]];
  const double mid = lo + (hi - lo) / 2.0;
  return mid > lo ? mid : hi;
}

std::size_t PolarView::count_below(std::span<const CustomerIndex> ordered, double theta) const {
  auto it = std::partition_point(ordered.begin(), ordered.end(),
                                 [&](CustomerIndex a) { return angles_[a] < theta; });
  return static_cast<std::size_t>(it - ordered.begin());
}

}  // namespace vrpstw

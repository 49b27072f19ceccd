#pragma once

#include <optional>
#include <span>
#include <vector>

#include "vrpstw/model.hpp"

namespace vrpstw {

enum class RoutingMode { feasibility, optimize };
enum class RoutingStatus { feasible, infeasible, budget_exhausted };

const char* to_string(RoutingStatus status);

struct RoutingRequest {
  std::vector<CustomerIndex> customers;
  RoutingMode mode = RoutingMode::optimize;
  /// Wall-clock limit in seconds; unlimited when empty.
  std::optional<double> time_budget_s;
};

struct RoutingResult {
  RoutingStatus status = RoutingStatus::infeasible;
  std::optional<Tour> tour;
  /// Set in optimize mode only: the lexicographic optimum (duration, travel).
  std::optional<TourCost> objective;
};

/// Exact single-tour router for structured windows.
///
/// Any time-feasible tour visits windows in increasing order, so the search
/// is a Held-Karp style label-setting run per window, chained across windows.
/// A label describes a partial path as a function of the depot departure
/// time y: the arrival at its last customer is max(y + A, B) for y <= L.
/// Completing a path can only get worse when A, B or -L grow, and A is fixed
/// by (visited set, last customer, travel time T), so optimize mode keeps the
/// Pareto frontier over (T, B, -L) per state and feasibility mode keeps only
/// the smallest B.
///
/// Throws std::domain_error for an empty or duplicated customer set.
RoutingResult solve(const Instance& instance, const RoutingRequest& request);

struct SequenceTiming {
  TourCost cost;
  std::vector<Seconds> arrivals;
};

/// Minimum-duration timing of a fixed visiting order, in O(k).
///
/// Departs as late as possible (latest feasible first arrival), then
/// arrives as early as possible at every later customer. Returns nullopt
/// when the order is not time-feasible or not in window order.
std::optional<SequenceTiming> min_duration_for_sequence(std::span<const CustomerIndex> sequence,
                                                        const Instance& instance);

}  // namespace vrpstw

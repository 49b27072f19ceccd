#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "vrpstw/model.hpp"
#include "vrpstw/router.hpp"

namespace vrpstw {

bool capacity_feasible(std::span<const Weight> weights, Weight capacity);
bool capacity_feasible(std::span<const CustomerIndex> cluster, const Instance& instance);

/// Minimum spanning arborescence of the complete digraph on `n` nodes rooted
/// at `root` (Chu-Liu/Edmonds). `weights` is row-major n x n, w[u*n+v] is the
/// weight of arc u -> v; the diagonal is ignored.
Seconds min_arborescence_rooted(std::span<const Seconds> weights, std::size_t n, std::size_t root);

/// Minimum over all roots of min_arborescence_rooted. Throws std::domain_error
/// for n == 0; returns 0 for n == 1.
Seconds min_arborescence_any_root(std::span<const Seconds> weights, std::size_t n);

/// Min arborescence length over `nodes` with arc weight t(u,v) + s(u).
Seconds min_arborescence_length(std::span<const CustomerIndex> nodes, const Instance& instance);

/// True iff, per window, the cluster's customers of that window admit a
/// spanning arborescence no longer than the window.
bool tree_feasible(std::span<const CustomerIndex> cluster, const Instance& instance);

enum class FeasibilityLevel {
  capacity_infeasible,
  tree_infeasible,
  time_infeasible,
  budget_exhausted,
  feasible,
};

const char* to_string(FeasibilityLevel level);

struct FeasibilityVerdict {
  FeasibilityLevel level = FeasibilityLevel::feasible;
  std::optional<Tour> witness;
  bool feasible() const { return level == FeasibilityLevel::feasible; }
};

struct RouterOptions {
  std::optional<double> time_budget_s;
};

/// Optimal route of a cluster, after the capacity and tree filters.
struct ClusterRoute {
  FeasibilityLevel level = FeasibilityLevel::feasible;
  std::optional<Tour> tour;
  TourCost cost;
  bool feasible() const { return level == FeasibilityLevel::feasible; }
};

/// Layered cluster checks (capacity, then tree, then exact routing) with
/// verdicts memoized by the sorted customer set. One checker belongs to one
/// solver run; it is not safe for concurrent use.
class ClusterChecker {
 public:
  struct Stats {
    std::size_t checks = 0;
    std::size_t memo_hits = 0;
    std::size_t capacity_rejections = 0;
    std::size_t tree_rejections = 0;
    std::size_t router_calls = 0;
    std::size_t budget_exhaustions = 0;
  };

  explicit ClusterChecker(const Instance& instance, RouterOptions options = {});

  const Instance& instance() const { return instance_; }
  const RouterOptions& options() const { return options_; }

  /// Feasibility verdict with a witness tour when feasible.
  FeasibilityVerdict check(std::span<const CustomerIndex> cluster);

  /// Lexicographically optimal (duration, travel) route; empty clusters are
  /// feasible with zero cost and no tour.
  ClusterRoute route(std::span<const CustomerIndex> cluster);

  const Stats& stats() const { return stats_; }

 private:
  using Key = std::vector<CustomerIndex>;
  struct KeyHash {
    std::size_t operator()(const Key& key) const;
  };

  Key make_key(std::span<const CustomerIndex> cluster) const;
  std::optional<FeasibilityLevel> prefilter(const Key& key);

  const Instance& instance_;
  RouterOptions options_;
  Stats stats_;
  std::unordered_map<Key, FeasibilityVerdict, KeyHash> verdicts_;
  std::unordered_map<Key, ClusterRoute, KeyHash> routes_;
};

}  // namespace vrpstw

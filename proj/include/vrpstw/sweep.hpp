#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vrpstw/feasibility.hpp"
#include "vrpstw/geometry.hpp"
#include "vrpstw/model.hpp"

namespace vrpstw {

enum class SweepVariant { traditional, a, b, c };

const char* to_string(SweepVariant variant);
std::optional<SweepVariant> parse_variant(const std::string& name);

/// Raised when no feasible clustering exists (a customer cannot even be
/// served alone) or when the router budget runs out during a sweep.
class SweepError : public std::runtime_error {
 public:
  SweepError(const std::string& what, std::optional<int> customer_id)
      : std::runtime_error(what), customer_id_(customer_id) {}
  std::optional<int> customer_id() const { return customer_id_; }

 private:
  std::optional<int> customer_id_;
};

/// Sector boundaries and the induced partition.
///
/// global_angles: cluster i is C(angles[i], angles[i+1]).
/// window_angles: cluster i is the union over windows j of
/// C_j(window_angles[j][i], window_angles[j][i+1]).
struct Clustering {
  enum class Kind { global_angles, window_angles };

  Kind kind = Kind::global_angles;
  Direction direction = Direction::counterclockwise;
  double zero_angle = 0.0;
  std::vector<double> angles;
  std::vector<std::vector<double>> window_angles;
  std::vector<std::vector<CustomerIndex>> clusters;

  std::size_t size() const { return clusters.size(); }
};

/// Clusters recomputed from the recorded boundaries alone.
std::vector<std::vector<CustomerIndex>> clusters_from_boundaries(const Clustering& clustering,
                                                                 const PolarView& view);

/// Discrete window-dependent boundaries: cut(j, i) is the position in the
/// angular order of window j where cluster i starts; cluster i's window-j
/// slice is [cut(j, i), cut(j, i + 1)).
class WindowCuts {
 public:
  WindowCuts(const PolarView& view, std::size_t clusters);

  /// Lifts global angles: every window uses the same boundaries.
  static WindowCuts from_global(const PolarView& view, std::span<const double> angles);
  static WindowCuts from_clustering(const PolarView& view, const Clustering& clustering);

  const PolarView& view() const { return *view_; }
  std::size_t cluster_count() const { return cuts_.empty() ? 0 : cuts_.front().size() - 1; }
  std::size_t window_count() const { return cuts_.size(); }
  std::size_t window_size(std::size_t j) const { return view_->window_order(j).size(); }

  std::size_t cut(std::size_t j, std::size_t i) const { return cuts_[j][i]; }
  void set_cut(std::size_t j, std::size_t i, std::size_t pos) { cuts_[j][i] = pos; }

  std::span<const CustomerIndex> slice(std::size_t j, std::size_t cluster) const;
  std::vector<CustomerIndex> members(std::size_t cluster) const;
  bool empty(std::size_t cluster) const;

  /// Appends an empty cluster after the last one.
  void add_cluster();
  /// Removes an empty cluster.
  void erase_cluster(std::size_t cluster);

  /// True when every window's customers are fully assigned.
  bool complete() const;

  Clustering to_clustering() const;
  std::uint64_t hash() const;

  friend bool operator==(const WindowCuts& a, const WindowCuts& b) { return a.cuts_ == b.cuts_; }

 private:
  const PolarView* view_;
  std::vector<std::vector<std::size_t>> cuts_;
};

Clustering traditional_sweep(const Instance& instance, const PolarView& view);
Clustering sweep_variant_a(const PolarView& view, ClusterChecker& checker);
Clustering sweep_variant_b(const PolarView& view, ClusterChecker& checker);
Clustering sweep_variant_c(const PolarView& view, ClusterChecker& checker);

Clustering run_sweep(SweepVariant variant, const PolarView& view, ClusterChecker& checker);

/// A clustering together with its per-cluster optimal routes.
struct RoutedClustering {
  Clustering clustering;
  std::vector<ClusterRoute> routes;
  Objective objective;
  /// False when some cluster has no feasible route (possible for the
  /// traditional sweep only); the objective then covers the feasible ones.
  bool feasible = true;
};

RoutedClustering route_clustering(Clustering clustering, ClusterChecker& checker);

/// Runs `variant` counterclockwise and clockwise, routes both, and keeps the
/// lexicographically better one (counterclockwise on ties; a feasible result
/// always beats an infeasible one).
RoutedClustering best_of_directions(const Instance& instance, SweepVariant variant,
                                    ClusterChecker& checker);

}  // namespace vrpstw

#include "vrpstw/sweep.hpp"

#include <algorithm>

namespace vrpstw {

const char* to_string(SweepVariant variant) {
  switch (variant) {
    case SweepVariant::traditional: return "traditional";
    case SweepVariant::a: return "a";
    case SweepVariant::b: return "b";
    case SweepVariant::c: return "c";
  }
  return "unknown";
}

std::optional<SweepVariant> parse_variant(const std::string& name) {
  if (name == "traditional") return SweepVariant::traditional;
  if (name == "a" || name == "A") return SweepVariant::a;
  if (name == "b" || name == "B") return SweepVariant::b;
  if (name == "c" || name == "C") return SweepVariant::c;
  return std::nullopt;
}

namespace {

void sort_by_angle(std::vector<CustomerIndex>& cluster, const PolarView& view) {
  std::sort(cluster.begin(), cluster.end(),
            [&](CustomerIndex a, CustomerIndex b) { return view.angle(a) < view.angle(b); });
}

}  // namespace

std::vector<std::vector<CustomerIndex>> clusters_from_boundaries(const Clustering& clustering,
                                                                 const PolarView& view) {
  std::vector<std::vector<CustomerIndex>> out(clustering.size());
  for (std::size_t i = 0; i < clustering.size(); ++i) {
    if (clustering.kind == Clustering::Kind::global_angles) {
      out[i] = view.sector(clustering.angles[i], clustering.angles[i + 1]);
    } else {
      for (std::size_t j = 0; j < clustering.window_angles.size(); ++j) {
        auto part =
            view.sector(j, clustering.window_angles[j][i], clustering.window_angles[j][i + 1]);
        out[i].insert(out[i].end(), part.begin(), part.end());
      }
      sort_by_angle(out[i], view);
    }
  }
  return out;
}

// --- WindowCuts -------------------------------------------------------------

WindowCuts::WindowCuts(const PolarView& view, std::size_t clusters)
    : view_(&view), cuts_(view.window_count(), std::vector<std::size_t>(clusters + 1, 0)) {}

WindowCuts WindowCuts::from_global(const PolarView& view, std::span<const double> angles) {
  if (angles.empty()) return WindowCuts(view, 0);
  WindowCuts out(view, angles.size() - 1);
  for (std::size_t j = 0; j < view.window_count(); ++j) {
    for (std::size_t i = 0; i < angles.size(); ++i) {
      out.cuts_[j][i] = view.count_below(view.window_order(j), angles[i]);
    }
  }
  return out;
}

WindowCuts WindowCuts::from_clustering(const PolarView& view, const Clustering& clustering) {
  if (clustering.kind == Clustering::Kind::global_angles) {
    return from_global(view, clustering.angles);
  }
  WindowCuts out(view, clustering.size());
  for (std::size_t j = 0; j < view.window_count(); ++j) {
    for (std::size_t i = 0; i <= clustering.size(); ++i) {
      out.cuts_[j][i] = view.count_below(view.window_order(j), clustering.window_angles[j][i]);
    }
  }
  return out;
}

std::span<const CustomerIndex> WindowCuts::slice(std::size_t j, std::size_t cluster) const {
  const auto order = view_->window_order(j);
  const std::size_t from = cuts_[j][cluster];
  const std::size_t to = cuts_[j][cluster + 1];
  if (to <= from) return {};
  return order.subspan(from, to - from);
}

std::vector<CustomerIndex> WindowCuts::members(std::size_t cluster) const {
  std::vector<CustomerIndex> out;
  for (std::size_t j = 0; j < cuts_.size(); ++j) {
    auto part = slice(j, cluster);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

bool WindowCuts::empty(std::size_t cluster) const {
  for (std::size_t j = 0; j < cuts_.size(); ++j) {
    if (!slice(j, cluster).empty()) return false;
  }
  return true;
}

void WindowCuts::add_cluster() {
  for (auto& row : cuts_) row.push_back(row.back());
}

void WindowCuts::erase_cluster(std::size_t cluster) {
  if (!empty(cluster)) throw std::logic_error("only empty clusters can be erased");
  for (auto& row : cuts_) row.erase(row.begin() + static_cast<std::ptrdiff_t>(cluster) + 1);
}

bool WindowCuts::complete() const {
  for (std::size_t j = 0; j < cuts_.size(); ++j) {
    if (cuts_[j].front() != 0 || cuts_[j].back() != window_size(j)) return false;
    if (!std::is_sorted(cuts_[j].begin(), cuts_[j].end())) return false;
  }
  return true;
}

Clustering WindowCuts::to_clustering() const {
  Clustering out;
  out.kind = Clustering::Kind::window_angles;
  out.direction = view_->direction();
  out.zero_angle = view_->zero_angle();
  const std::size_t m = cluster_count();
  out.window_angles.resize(cuts_.size());
  for (std::size_t j = 0; j < cuts_.size(); ++j) {
    const auto order = view_->window_order(j);
    for (std::size_t i = 0; i <= m; ++i) {
      const std::size_t pos = cuts_[j][i];
      double theta = view_->boundary_before(order, pos);
      if (i == 0) theta = 0.0;
      if (i == m && m > 0) theta = kTwoPi;
      out.window_angles[j].push_back(theta);
    }
  }
  out.clusters.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    out.clusters[i] = members(i);
    sort_by_angle(out.clusters[i], *view_);
  }
  return out;
}

std::uint64_t WindowCuts::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& row : cuts_) {
    for (auto c : row) {
      h ^= c + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  }
  return h;
}

// --- global-angle sweeps ----------------------------------------------------

namespace {

enum class Admission { admitted, rejected };

// Greedy sweep over the global angular order; returns the cut positions
// 0 = p_0 < p_1 < ... < p_m = n.
template <class Admit>
std::vector<std::size_t> sweep_positions(const Instance& instance, const PolarView& view,
                                         Admit&& admit) {
  const auto order = view.order();
  std::vector<std::size_t> cuts{0};
  std::vector<CustomerIndex> cluster;
  std::size_t p = 0;
  while (p < order.size()) {
    cluster.assign(1, order[p]);
    if (admit(cluster) == Admission::rejected) {
      const int id = instance.customer(order[p]).id;
      throw SweepError("customer " + std::to_string(id) + " cannot be served by any vehicle", id);
    }
    ++p;
    while (p < order.size()) {
      cluster.push_back(order[p]);
      if (admit(cluster) == Admission::rejected) break;
      ++p;
    }
    cuts.push_back(p);
  }
  return cuts;
}

Clustering global_clustering(const PolarView& view, const std::vector<std::size_t>& cuts) {
  Clustering out;
  out.kind = Clustering::Kind::global_angles;
  out.direction = view.direction();
  out.zero_angle = view.zero_angle();
  out.angles.push_back(0.0);
  const auto order = view.order();
  for (std::size_t k = 1; k < cuts.size(); ++k) {
    out.angles.push_back(k + 1 == cuts.size() ? kTwoPi : view.boundary_before(order, cuts[k]));
    out.clusters.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(cuts[k - 1]),
                              order.begin() + static_cast<std::ptrdiff_t>(cuts[k]));
  }
  return out;
}

Admission admit_full(ClusterChecker& checker, std::span<const CustomerIndex> cluster) {
  const auto verdict = checker.check(cluster);
  if (verdict.level == FeasibilityLevel::budget_exhausted) {
    throw SweepError("router budget exhausted while checking a cluster of " +
                         std::to_string(cluster.size()) + " customers",
                     std::nullopt);
  }
  return verdict.feasible() ? Admission::admitted : Admission::rejected;
}

bool feasible(ClusterChecker& checker, std::span<const CustomerIndex> cluster) {
  return admit_full(checker, cluster) == Admission::admitted;
}

void drop_empty_clusters(WindowCuts& cuts) {
  for (std::size_t i = cuts.cluster_count(); i-- > 0;) {
    if (cuts.empty(i)) cuts.erase_cluster(i);
  }
}

}  // namespace

Clustering traditional_sweep(const Instance& instance, const PolarView& view) {
  auto cuts = sweep_positions(instance, view, [&](std::span<const CustomerIndex> cluster) {
    return capacity_feasible(cluster, instance) ? Admission::admitted : Admission::rejected;
  });
  return global_clustering(view, cuts);
}

Clustering sweep_variant_a(const PolarView& view, ClusterChecker& checker) {
  auto cuts = sweep_positions(checker.instance(), view, [&](std::span<const CustomerIndex> c) {
    return admit_full(checker, c);
  });
  return global_clustering(view, cuts);
}

// --- window-angle sweeps ----------------------------------------------------

Clustering sweep_variant_b(const PolarView& view, ClusterChecker& checker) {
  const Instance& instance = checker.instance();
  WindowCuts cuts(view, 0);
  for (std::size_t j = 0; j < view.window_count(); ++j) {
    const std::size_t size = cuts.window_size(j);
    const auto order = view.window_order(j);
    std::size_t p = 0;
    std::size_t i = 0;
    while (p < size) {
      const bool fresh = i == cuts.cluster_count();
      if (fresh) cuts.add_cluster();
      for (std::size_t k = i; k <= cuts.cluster_count(); ++k) cuts.set_cut(j, k, p);

      // Grow cluster i's window-j slice one customer at a time.
      auto cluster = cuts.members(i);
      while (p < size) {
        cluster.push_back(order[p]);
        if (!feasible(checker, cluster)) break;
        ++p;
        cuts.set_cut(j, i + 1, p);
      }
      if (fresh && cuts.slice(j, i).empty()) {
        const int id = instance.customer(order[p]).id;
        throw SweepError("customer " + std::to_string(id) + " cannot be served by any vehicle",
                         id);
      }
      ++i;
    }
    for (std::size_t k = i; k <= cuts.cluster_count(); ++k) cuts.set_cut(j, k, size);
  }
  drop_empty_clusters(cuts);
  return cuts.to_clustering();
}

namespace {

// Moves window-j customers from cluster i backwards, one per ripple: cluster
// i hands its first customer to i-1, which may pass its own first customer
// on to i-2, and so on, keeping every touched earlier cluster feasible.
// Returns true once cluster i is feasible; failed ripples are undone.
bool shrink_from_below(WindowCuts& cuts, std::size_t j, std::size_t i, ClusterChecker& checker) {
  while (true) {
    if (feasible(checker, cuts.members(i))) return true;
    if (i == 0 || cuts.slice(j, i).empty()) return false;

    std::vector<std::size_t> saved;
    for (std::size_t k = 0; k <= i; ++k) saved.push_back(cuts.cut(j, k));
    auto undo = [&] {
      for (std::size_t k = 0; k <= i; ++k) cuts.set_cut(j, k, saved[k]);
    };

    cuts.set_cut(j, i, cuts.cut(j, i) + 1);
    std::size_t k = i - 1;
    bool settled = false;
    while (true) {
      if (feasible(checker, cuts.members(k))) {
        settled = true;
        break;
      }
      if (k == 0 || cuts.slice(j, k).empty()) break;
      cuts.set_cut(j, k, cuts.cut(j, k) + 1);
      if (!feasible(checker, cuts.members(k))) break;
      --k;
    }
    if (!settled) {
      undo();
      return false;
    }
  }
}

// Angles for the next window. theta_i stays put while it still induces the
// repaired window-j cut; otherwise it moves just across that cut.
std::vector<double> carry_angles(const PolarView& view, const WindowCuts& cuts, std::size_t j,
                                 const std::vector<double>& old) {
  const auto order = view.window_order(j);
  const std::size_t size = order.size();
  const std::size_t m = cuts.cluster_count();
  std::vector<double> next(m + 1, 0.0);
  next[m] = kTwoPi;
  for (std::size_t i = 1; i < m; ++i) {
    const std::size_t pos = cuts.cut(j, i);
    const double theta = old[i];
    const bool above = pos == 0 || theta > view.angle(order[pos - 1]);
    const bool below = pos == size || theta <= view.angle(order[pos]);
    if (above && below) {
      next[i] = theta;
    } else if (!below) {
      next[i] = pos > 0 ? view.boundary_before(order, pos) : view.angle(order[0]);
    } else if (pos < size) {
      next[i] = view.boundary_before(order, pos);
    } else {
      const double lo = view.angle(order[size - 1]);
      double hi = kTwoPi;
      for (std::size_t k = i + 1; k <= m; ++k) {
        if (old[k] > lo) hi = std::min(hi, old[k]);
      }
      next[i] = lo + (hi - lo) / 2.0;
      if (!(next[i] > lo)) next[i] = hi;
    }
  }
  for (std::size_t i = 1; i < m; ++i) next[i] = std::max(next[i], next[i - 1]);
  return next;
}

}  // namespace

Clustering sweep_variant_c(const PolarView& view, ClusterChecker& checker) {
  const Instance& instance = checker.instance();

  // Phase 1: sectors that are capacity- and tree-feasible over all windows.
  auto phase1 = sweep_positions(instance, view, [&](std::span<const CustomerIndex> cluster) {
    return capacity_feasible(cluster, instance) && tree_feasible(cluster, instance)
               ? Admission::admitted
               : Admission::rejected;
  });
  std::vector<double> angles = global_clustering(view, phase1).angles;
  if (angles.size() < 2) angles = {0.0, kTwoPi};

  // Phase 2: add windows one by one and repair infeasible clusters.
  WindowCuts cuts(view, angles.size() - 1);
  for (std::size_t j = 0; j < view.window_count(); ++j) {
    const auto order = view.window_order(j);
    const std::size_t size = cuts.window_size(j);
    const std::size_t m0 = cuts.cluster_count();
    for (std::size_t i = 0; i <= m0; ++i) cuts.set_cut(j, i, view.count_below(order, angles[i]));
    cuts.set_cut(j, 0, 0);
    cuts.set_cut(j, m0, size);

    for (std::size_t i = 0; i < cuts.cluster_count(); ++i) {
      if (shrink_from_below(cuts, j, i, checker)) continue;

      if (i + 1 == cuts.cluster_count()) {
        cuts.add_cluster();
        angles.push_back(kTwoPi);
      }
      std::size_t deferred = 0;
      while (!feasible(checker, cuts.members(i))) {
        if (cuts.slice(j, i).empty()) {
          throw std::logic_error("cluster stays infeasible without window customers");
        }
        cuts.set_cut(j, i + 1, cuts.cut(j, i + 1) - 1);
        ++deferred;
      }
      if (deferred > 0 && cuts.empty(i)) {
        // The last rejection was a single customer on its own.
        const int id = instance.customer(order[cuts.cut(j, i)]).id;
        throw SweepError("customer " + std::to_string(id) + " cannot be served by any vehicle",
                         id);
      }
    }
    angles = carry_angles(view, cuts, j, angles);
  }
  drop_empty_clusters(cuts);
  return cuts.to_clustering();
}

Clustering run_sweep(SweepVariant variant, const PolarView& view, ClusterChecker& checker) {
  switch (variant) {
    case SweepVariant::traditional: return traditional_sweep(checker.instance(), view);
    case SweepVariant::a: return sweep_variant_a(view, checker);
    case SweepVariant::b: return sweep_variant_b(view, checker);
    case SweepVariant::c: return sweep_variant_c(view, checker);
  }
  throw std::invalid_argument("unknown sweep variant");
}

RoutedClustering route_clustering(Clustering clustering, ClusterChecker& checker) {
  RoutedClustering out;
  out.clustering = std::move(clustering);
  for (const auto& cluster : out.clustering.clusters) {
    auto route = checker.route(cluster);
    if (route.feasible()) {
      if (!cluster.empty()) {
        out.objective += Objective{1, route.cost.duration, route.cost.travel};
      }
    } else {
      out.feasible = false;
    }
    out.routes.push_back(std::move(route));
  }
  return out;
}

RoutedClustering best_of_directions(const Instance& instance, SweepVariant variant,
                                    ClusterChecker& checker) {
  PolarView ccw(instance, Direction::counterclockwise);
  auto best = route_clustering(run_sweep(variant, ccw, checker), checker);
  PolarView cw(instance, Direction::clockwise);
  auto other = route_clustering(run_sweep(variant, cw, checker), checker);
  const bool better = other.feasible != best.feasible ? other.feasible
                                                      : other.objective < best.objective;
  return better ? other : best;
}

}  // namespace vrpstw

#include "vrpstw/feasibility.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace vrpstw {

bool capacity_feasible(std::span<const Weight> weights, Weight capacity) {
  Weight sum;
  for (auto w : weights) sum += w;
  return sum <= capacity;
}

bool capacity_feasible(std::span<const CustomerIndex> cluster, const Instance& instance) {
  return total_weight(cluster, instance) <= instance.capacity();
}

namespace {

struct Arc {
  std::size_t from;
  std::size_t to;
  Seconds weight;
};

// Chu-Liu/Edmonds with cycle contraction, O(V * E).
Seconds edmonds(std::vector<Arc> arcs, std::size_t n, std::size_t root) {
  constexpr Seconds kInf = std::numeric_limits<Seconds>::max();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  Seconds total = 0;
  std::vector<Seconds> in(n);
  std::vector<std::size_t> pred(n), comp(n), mark(n);

  while (true) {
    std::fill(in.begin(), in.end(), kInf);
    for (const auto& e : arcs) {
      if (e.from != e.to && e.weight < in[e.to]) {
        in[e.to] = e.weight;
        pred[e.to] = e.from;
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (v != root && in[v] == kInf) throw std::domain_error("graph has no spanning arborescence");
    }

    std::size_t cycles = 0;
    std::fill(comp.begin(), comp.end(), kNone);
    std::fill(mark.begin(), mark.end(), kNone);
    in[root] = 0;
    for (std::size_t v = 0; v < n; ++v) {
      total += in[v];
      std::size_t x = v;
      while (mark[x] != v && comp[x] == kNone && x != root) {
        mark[x] = v;
        x = pred[x];
      }
      if (x != root && comp[x] == kNone) {
        for (std::size_t u = pred[x]; u != x; u = pred[u]) comp[u] = cycles;
        comp[x] = cycles++;
      }
    }
    if (cycles == 0) break;
    for (std::size_t v = 0; v < n; ++v) {
      if (comp[v] == kNone) comp[v] = cycles++;
    }

    std::vector<Arc> next;
    next.reserve(arcs.size());
    for (const auto& e : arcs) {
      const std::size_t u = comp[e.from];
      const std::size_t v = comp[e.to];
      if (u != v) next.push_back({u, v, e.weight - in[e.to]});
    }
    arcs = std::move(next);
    n = cycles;
    root = comp[root];
  }
  return total;
}

}  // namespace

Seconds min_arborescence_rooted(std::span<const Seconds> weights, std::size_t n, std::size_t root) {
  if (n == 0) throw std::domain_error("arborescence needs at least one node");
  if (weights.size() != n * n) throw std::invalid_argument("weight matrix must be n x n");
  if (root >= n) throw std::invalid_argument("root out of range");
  std::vector<Arc> arcs;
  arcs.reserve(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v) arcs.push_back({u, v, weights[u * n + v]});
    }
  }
  return edmonds(std::move(arcs), n, root);
}

Seconds min_arborescence_any_root(std::span<const Seconds> weights, std::size_t n) {
  if (n == 0) throw std::domain_error("arborescence needs at least one node");
  if (weights.size() != n * n) throw std::invalid_argument("weight matrix must be n x n");
  if (n == 1) return 0;

  // A virtual root with arcs heavier than any real arborescence picks
  // exactly one real root in the optimum.
  Seconds heavy = 1;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v) heavy += std::max<Seconds>(weights[u * n + v], 0);
    }
  }
  std::vector<Arc> arcs;
  arcs.reserve(n * n + n);
  for (std::size_t u = 0; u < n; ++u) {
    arcs.push_back({n, u, heavy});
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v) arcs.push_back({u, v, weights[u * n + v]});
    }
  }
  return edmonds(std::move(arcs), n + 1, n) - heavy;
}

Seconds min_arborescence_length(std::span<const CustomerIndex> nodes, const Instance& instance) {
  const std::size_t n = nodes.size();
  if (n == 0) throw std::domain_error("arborescence needs at least one node");
  std::vector<Seconds> w(n * n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v) {
        w[u * n + v] = instance.travel(nodes[u], nodes[v]) + instance.customer(nodes[u]).service;
      }
    }
  }
  return min_arborescence_any_root(w, n);
}

bool tree_feasible(std::span<const CustomerIndex> cluster, const Instance& instance) {
  std::vector<std::vector<CustomerIndex>> by_window(instance.windows().size());
  for (auto a : cluster) by_window[instance.customer(a).window].push_back(a);
  for (std::size_t j = 0; j < by_window.size(); ++j) {
    if (by_window[j].size() < 2) continue;
    if (min_arborescence_length(by_window[j], instance) > instance.windows()[j].length()) {
      return false;
    }
  }
  return true;
}

const char* to_string(FeasibilityLevel level) {
  switch (level) {
    case FeasibilityLevel::capacity_infeasible: return "capacity_infeasible";
    case FeasibilityLevel::tree_infeasible: return "tree_infeasible";
    case FeasibilityLevel::time_infeasible: return "time_infeasible";
    case FeasibilityLevel::budget_exhausted: return "budget_exhausted";
    case FeasibilityLevel::feasible: return "feasible";
  }
  return "unknown";
}

namespace {

FeasibilityLevel level_of(RoutingStatus status) {
  switch (status) {
    case RoutingStatus::feasible: return FeasibilityLevel::feasible;
    case RoutingStatus::infeasible: return FeasibilityLevel::time_infeasible;
    case RoutingStatus::budget_exhausted: return FeasibilityLevel::budget_exhausted;
  }
  return FeasibilityLevel::time_infeasible;
}

}  // namespace

std::size_t ClusterChecker::KeyHash::operator()(const Key& key) const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto a : key) {
    h ^= a;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 32));
}

ClusterChecker::ClusterChecker(const Instance& instance, RouterOptions options)
    : instance_(instance), options_(options) {}

ClusterChecker::Key ClusterChecker::make_key(std::span<const CustomerIndex> cluster) const {
  Key key(cluster.begin(), cluster.end());
  std::sort(key.begin(), key.end());
  return key;
}

std::optional<FeasibilityLevel> ClusterChecker::prefilter(const Key& key) {
  if (!capacity_feasible(key, instance_)) {
    ++stats_.capacity_rejections;
    return FeasibilityLevel::capacity_infeasible;
  }
  if (!tree_feasible(key, instance_)) {
    ++stats_.tree_rejections;
    return FeasibilityLevel::tree_infeasible;
  }
  return std::nullopt;
}

FeasibilityVerdict ClusterChecker::check(std::span<const CustomerIndex> cluster) {
  ++stats_.checks;
  Key key = make_key(cluster);
  if (auto it = verdicts_.find(key); it != verdicts_.end()) {
    ++stats_.memo_hits;
    return it->second;
  }

  FeasibilityVerdict verdict;
  if (key.empty()) {
    verdict.level = FeasibilityLevel::feasible;
    verdict.witness = Tour{};
  } else if (auto failed = prefilter(key)) {
    verdict.level = *failed;
  } else if (auto known = routes_.find(key); known != routes_.end()) {
    verdict.level = known->second.level;
    verdict.witness = known->second.tour;
  } else {
    ++stats_.router_calls;
    auto result =
        solve(instance_, RoutingRequest{key, RoutingMode::feasibility, options_.time_budget_s});
    verdict.level = level_of(result.status);
    if (verdict.level == FeasibilityLevel::budget_exhausted) ++stats_.budget_exhaustions;
    verdict.witness = std::move(result.tour);
  }
  verdicts_.emplace(std::move(key), verdict);
  return verdict;
}

ClusterRoute ClusterChecker::route(std::span<const CustomerIndex> cluster) {
  Key key = make_key(cluster);
  if (auto it = routes_.find(key); it != routes_.end()) {
    ++stats_.memo_hits;
    return it->second;
  }

  ClusterRoute out;
  if (key.empty()) {
    out.level = FeasibilityLevel::feasible;
  } else if (auto known = verdicts_.find(key);
             known != verdicts_.end() && !known->second.feasible() &&
             known->second.level != FeasibilityLevel::budget_exhausted) {
    out.level = known->second.level;
  } else if (auto failed = prefilter(key)) {
    out.level = *failed;
  } else {
    ++stats_.router_calls;
    auto result =
        solve(instance_, RoutingRequest{key, RoutingMode::optimize, options_.time_budget_s});
    out.level = level_of(result.status);
    if (out.level == FeasibilityLevel::budget_exhausted) ++stats_.budget_exhaustions;
    if (result.status == RoutingStatus::feasible) {
      out.tour = std::move(result.tour);
      out.cost = *result.objective;
    }
  }
  routes_.emplace(std::move(key), out);
  return out;
}

}  // namespace vrpstw

#include "vrpstw/improve.hpp"

namespace vrpstw {

std::optional<MoveCandidate> candidate_move(const WindowCuts& cuts, std::size_t boundary,
                                            std::size_t window, MoveDirection direction) {
  if (boundary == 0 || boundary >= cuts.cluster_count()) return std::nullopt;
  const auto order = cuts.view().window_order(window);
  const std::size_t pos = cuts.cut(window, boundary);
  MoveCandidate move{boundary, window, direction, 0, 0, 0};
  if (direction == MoveDirection::decrease) {
    if (pos <= cuts.cut(window, boundary - 1)) return std::nullopt;
    move.customer = order[pos - 1];
    move.source = boundary - 1;
    move.target = boundary;
  } else {
    if (pos >= cuts.cut(window, boundary + 1)) return std::nullopt;
    move.customer = order[pos];
    move.source = boundary;
    move.target = boundary - 1;
  }
  return move;
}

void apply_move(WindowCuts& cuts, const MoveCandidate& move) {
  const std::size_t pos = cuts.cut(move.window, move.boundary);
  cuts.set_cut(move.window, move.boundary,
               move.direction == MoveDirection::decrease ? pos - 1 : pos + 1);
}

void revert_move(WindowCuts& cuts, const MoveCandidate& move) {
  const std::size_t pos = cuts.cut(move.window, move.boundary);
  cuts.set_cut(move.window, move.boundary,
               move.direction == MoveDirection::decrease ? pos + 1 : pos - 1);
}

namespace {

Objective route_objective(const ClusterRoute& route, bool empty) {
  if (empty) return {};
  return {1, route.cost.duration, route.cost.travel};
}

}  // namespace

ImproveResult improve(const Clustering& clustering, ClusterChecker& checker) {
  const Instance& instance = checker.instance();
  const PolarView view(instance, clustering.zero_angle, clustering.direction);
  WindowCuts cuts = WindowCuts::from_clustering(view, clustering);

  ImproveResult result;
  std::vector<ClusterRoute> routes;
  std::vector<Objective> costs;
  for (std::size_t i = 0; i < cuts.cluster_count(); ++i) {
    auto route = checker.route(cuts.members(i));
    if (!route.feasible()) {
      throw std::invalid_argument("improve needs a feasible clustering (cluster " +
                                  std::to_string(i) + " is " + to_string(route.level) + ")");
    }
    costs.push_back(route_objective(route, cuts.empty(i)));
    result.initial += costs.back();
    routes.push_back(std::move(route));
  }

  Objective current = result.initial;
  const std::size_t limit = instance.size() * instance.size();
  constexpr MoveDirection kOrder[] = {MoveDirection::decrease, MoveDirection::increase};

  bool accepted_any = true;
  while (accepted_any) {
    accepted_any = false;
    ++result.scans;
    for (std::size_t boundary = 1; boundary < cuts.cluster_count(); ++boundary) {
      for (std::size_t j = 0; j < cuts.window_count(); ++j) {
        for (auto direction : kOrder) {
          if (boundary >= cuts.cluster_count()) break;
          auto move = candidate_move(cuts, boundary, j, direction);
          if (!move) continue;

          const std::size_t lo = boundary - 1;
          const std::size_t hi = boundary;
          apply_move(cuts, *move);
          ++result.evaluations;
          auto lo_route = checker.route(cuts.members(lo));
          auto hi_route = checker.route(cuts.members(hi));
          if (lo_route.level == FeasibilityLevel::budget_exhausted ||
              hi_route.level == FeasibilityLevel::budget_exhausted) {
            ++result.budget_skips;
          }
          if (!lo_route.feasible() || !hi_route.feasible()) {
            revert_move(cuts, *move);
            continue;
          }
          const Objective lo_cost = route_objective(lo_route, cuts.empty(lo));
          const Objective hi_cost = route_objective(hi_route, cuts.empty(hi));
          const Objective candidate = current - costs[lo] - costs[hi] + lo_cost + hi_cost;
          if (!(candidate < current)) {
            revert_move(cuts, *move);
            continue;
          }

          AcceptedMove record{*move, current, candidate, false};
          routes[lo] = std::move(lo_route);
          routes[hi] = std::move(hi_route);
          costs[lo] = lo_cost;
          costs[hi] = hi_cost;
          for (std::size_t i : {hi, lo}) {
            if (cuts.empty(i)) {
              cuts.erase_cluster(i);
              routes.erase(routes.begin() + static_cast<std::ptrdiff_t>(i));
              costs.erase(costs.begin() + static_cast<std::ptrdiff_t>(i));
              record.removed_cluster = true;
            }
          }
          current = candidate;
          result.moves.push_back(record);
          accepted_any = true;
          if (result.moves.size() > limit) {
            throw ImproveLimitExceeded("improvement exceeded " + std::to_string(limit) +
                                       " accepted moves");
          }
        }
      }
    }
  }

  result.clustering = cuts.to_clustering();
  result.routes = std::move(routes);
  result.final = current;
  return result;
}

}  // namespace vrpstw

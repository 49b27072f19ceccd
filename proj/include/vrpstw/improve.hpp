#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "vrpstw/feasibility.hpp"
#include "vrpstw/geometry.hpp"
#include "vrpstw/sweep.hpp"

namespace vrpstw {

enum class MoveDirection { decrease, increase };

/// One customer crossing the boundary between clusters `boundary - 1` and
/// `boundary` in window `window`. Decreasing the boundary hands the lower
/// cluster's last window customer up; increasing it pulls the upper
/// cluster's first window customer down.
struct MoveCandidate {
  std::size_t boundary = 0;
  std::size_t window = 0;
  MoveDirection direction = MoveDirection::decrease;
  CustomerIndex customer = 0;
  std::size_t source = 0;
  std::size_t target = 0;
};

struct AcceptedMove {
  MoveCandidate move;
  Objective before;
  Objective after;
  bool removed_cluster = false;
};

struct ImproveResult {
  Clustering clustering;
  std::vector<ClusterRoute> routes;  // aligned with clustering.clusters
  Objective initial;
  Objective final;
  std::vector<AcceptedMove> moves;
  std::size_t evaluations = 0;
  std::size_t scans = 0;
  std::size_t budget_skips = 0;
};

/// Raised when the accepted-move count exceeds |C|^2.
class ImproveLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finds the candidate move for (boundary, window, direction), or nullopt
/// when that boundary cannot move in that direction.
std::optional<MoveCandidate> candidate_move(const WindowCuts& cuts, std::size_t boundary,
                                            std::size_t window, MoveDirection direction);

/// Applies a candidate to the cut matrix; revert_move undoes it exactly.
void apply_move(WindowCuts& cuts, const MoveCandidate& move);
void revert_move(WindowCuts& cuts, const MoveCandidate& move);

/// Local search over single-customer boundary moves.
///
/// Scans boundaries, then windows, then decrease before increase; accepts
/// the first move that strictly lowers the lexicographic objective with both
/// touched clusters still feasible, and stops after a scan without
/// acceptance. Global-angle input is first lifted to window angles. A
/// cluster emptied by a move is deleted. The polar view is rebuilt from the
/// clustering's zero angle and direction.
ImproveResult improve(const Clustering& clustering, ClusterChecker& checker);

}  // namespace vrpstw

#include "vrpstw/router.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace vrpstw {

const char* to_string(RoutingStatus status) {
  switch (status) {
    case RoutingStatus::feasible: return "feasible";
    case RoutingStatus::infeasible: return "infeasible";
    case RoutingStatus::budget_exhausted: return "budget_exhausted";
  }
  return "unknown";
}

std::optional<SequenceTiming> min_duration_for_sequence(std::span<const CustomerIndex> sequence,
                                                        const Instance& instance) {
  const std::size_t k = sequence.size();
  if (k == 0) return std::nullopt;

  std::vector<Seconds> gap(k > 0 ? k - 1 : 0);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const auto a = sequence[i];
    const auto b = sequence[i + 1];
    if (instance.customer(b).window < instance.customer(a).window) return std::nullopt;
    gap[i] = instance.customer(a).service + instance.travel(a, b);
  }

  // Earliest arrivals decide feasibility.
  Seconds alpha = instance.window_of(sequence[0]).start;
  for (std::size_t i = 1; i < k; ++i) {
    alpha = std::max(instance.window_of(sequence[i]).start, alpha + gap[i - 1]);
    if (alpha > instance.window_of(sequence[i]).end) return std::nullopt;
  }

  // Latest arrival at the first customer that keeps every later one in time.
  Seconds latest = instance.window_of(sequence[k - 1]).end;
  for (std::size_t i = k - 1; i-- > 0;) {
    latest = std::min(instance.window_of(sequence[i]).end, latest - gap[i]);
  }

  SequenceTiming out;
  out.arrivals.resize(k);
  out.arrivals[0] = latest;
  for (std::size_t i = 1; i < k; ++i) {
    out.arrivals[i] =
        std::max(instance.window_of(sequence[i]).start, out.arrivals[i - 1] + gap[i - 1]);
  }
  Tour tour{{sequence.begin(), sequence.end()}, out.arrivals};
  out.cost = tour_objectives(tour, instance);
  return out;
}

namespace {

constexpr std::uint32_t kNoParent = std::numeric_limits<std::uint32_t>::max();

struct Label {
  Seconds a;  // departure-relative arrival offset without waiting
  Seconds b;  // arrival bound forced by window starts
  Seconds l;  // latest depot departure
  Seconds t;  // travel so far
  std::uint64_t mask;
  std::uint32_t group;   // window group of the last customer
  std::uint32_t last;    // position inside that group
  std::uint32_t parent;  // index into the arena, kNoParent for the first stop
};

class Deadline {
 public:
  explicit Deadline(std::optional<double> budget_s) {
    if (budget_s) {
      limited_ = true;
      end_ = std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(*budget_s));
    }
  }
  bool expired() {
    if (!limited_) return false;
    if (calls_++ % 1024 != 0) return false;  // the first call reads the clock
    return std::chrono::steady_clock::now() >= end_;
  }

 private:
  bool limited_ = false;
  std::uint64_t calls_ = 0;
  std::chrono::steady_clock::time_point end_;
};

struct BudgetExhausted {};

class LabelSearch {
 public:
  LabelSearch(const Instance& instance, RoutingMode mode, std::optional<double> budget)
      : instance_(instance), mode_(mode), deadline_(budget) {}

  RoutingResult run(std::vector<CustomerIndex> customers) {
    std::sort(customers.begin(), customers.end());
    if (std::adjacent_find(customers.begin(), customers.end()) != customers.end()) {
      throw std::domain_error("routing request lists a customer twice");
    }
    for (auto a : customers) {
      if (a >= instance_.size()) throw std::domain_error("routing request has unknown customer");
    }
    std::stable_sort(customers.begin(), customers.end(), [&](CustomerIndex x, CustomerIndex y) {
      return instance_.customer(x).window < instance_.customer(y).window;
    });
    for (std::size_t i = 0; i < customers.size();) {
      std::size_t j = i;
      while (j < customers.size() &&
             instance_.customer(customers[j]).window == instance_.customer(customers[i]).window) {
        ++j;
      }
      if (j - i > 63) throw std::domain_error("more than 63 customers of one window in a tour");
      groups_.emplace_back(customers.begin() + static_cast<std::ptrdiff_t>(i),
                           customers.begin() + static_cast<std::ptrdiff_t>(j));
      i = j;
    }

    try {
      return search();
    } catch (const BudgetExhausted&) {
      return RoutingResult{RoutingStatus::budget_exhausted, std::nullopt, std::nullopt};
    }
  }

 private:
  RoutingResult search() {
    std::vector<std::uint32_t> entry;  // labels that closed the previous window
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      const auto& group = groups_[g];
      const std::size_t m = group.size();
      std::vector<std::uint32_t> layer;
      for (std::uint32_t v = 0; v < m; ++v) {
        if (g == 0) {
          extend(nullptr, kNoParent, g, v, layer);
        } else {
          for (auto id : entry) {
            const Label from = arena_[id];
            extend(&from, id, g, v, layer);
          }
        }
      }
      prune(layer);
      for (std::size_t visited = 1; visited < m && !layer.empty(); ++visited) {
        std::vector<std::uint32_t> next;
        for (auto id : layer) {
          const Label from = arena_[id];
          for (std::uint32_t v = 0; v < m; ++v) {
            if (from.mask & (std::uint64_t{1} << v)) continue;
            extend(&from, id, g, v, next);
          }
        }
        prune(next);
        layer = std::move(next);
      }
      if (layer.empty()) return RoutingResult{RoutingStatus::infeasible, std::nullopt, std::nullopt};
      entry = std::move(layer);
    }
    return finish(entry);
  }

  // Appends the extension of `from` (or a fresh start) by group customer v.
  void extend(const Label* from, std::uint32_t from_id, std::size_t g, std::uint32_t v,
              std::vector<std::uint32_t>& out) {
    if (deadline_.expired()) throw BudgetExhausted{};
    const CustomerIndex node = groups_[g][v];
    const auto& w = instance_.window_of(node);
    Label next{};
    if (from == nullptr) {
      const Seconds lead = instance_.travel(kDepot, node);
      next.a = lead;
      next.b = w.start;
      next.l = w.end - lead;
      next.t = lead;
      next.mask = 0;
    } else {
      const CustomerIndex prev = node_of(*from);
      const Seconds hop = instance_.travel(prev, node);
      const Seconds gap = instance_.customer(prev).service + hop;
      next.a = from->a + gap;
      next.b = std::max(w.start, from->b + gap);
      if (next.b > w.end) return;
      next.l = std::min(from->l, w.end - next.a);
      next.t = from->t + hop;
      // A new window starts a fresh visited set.
      next.mask = from->group == g ? from->mask : 0;
    }
    next.mask |= std::uint64_t{1} << v;
    next.group = static_cast<std::uint32_t>(g);
    next.last = v;
    next.parent = from_id;
    arena_.push_back(next);
    out.push_back(static_cast<std::uint32_t>(arena_.size() - 1));
  }

  CustomerIndex node_of(const Label& label) const { return groups_[label.group][label.last]; }

  // Drops labels dominated within their (visited set, last customer) state.
  void prune(std::vector<std::uint32_t>& layer) const {
    auto key = [&](std::uint32_t id) {
      const auto& x = arena_[id];
      return std::make_tuple(x.mask, x.last, x.t, x.b, -x.l, id);
    };
    auto key_feasibility = [&](std::uint32_t id) {
      const auto& x = arena_[id];
      return std::make_tuple(x.mask, x.last, x.b, id);
    };
    if (mode_ == RoutingMode::feasibility) {
      std::sort(layer.begin(), layer.end(),
                [&](auto x, auto y) { return key_feasibility(x) < key_feasibility(y); });
    } else {
      std::sort(layer.begin(), layer.end(), [&](auto x, auto y) { return key(x) < key(y); });
    }

    std::vector<std::uint32_t> kept;
    kept.reserve(layer.size());
    std::size_t state_begin = 0;
    for (auto id : layer) {
      const auto& x = arena_[id];
      if (!kept.empty()) {
        const auto& head = arena_[kept[state_begin]];
        if (head.mask != x.mask || head.last != x.last) state_begin = kept.size();
      }
      bool dominated = false;
      if (mode_ == RoutingMode::feasibility) {
        dominated = state_begin < kept.size();
      } else {
        for (std::size_t i = state_begin; i < kept.size() && !dominated; ++i) {
          const auto& y = arena_[kept[i]];
          dominated = y.b <= x.b && y.l >= x.l;  // y.t <= x.t by sort order
        }
      }
      if (!dominated) kept.push_back(id);
    }
    layer = std::move(kept);
  }

  RoutingResult finish(const std::vector<std::uint32_t>& final_labels) {
    std::uint32_t best = kNoParent;
    TourCost best_cost{};
    for (auto id : final_labels) {
      const auto& x = arena_[id];
      const CustomerIndex last = node_of(x);
      const Seconds tail = instance_.customer(last).service + instance_.travel(last, kDepot);
      const TourCost cost{std::max(x.a, x.b - x.l) + tail, x.t + instance_.travel(last, kDepot)};
      if (best == kNoParent || cost < best_cost) {
        best = id;
        best_cost = cost;
      }
      if (mode_ == RoutingMode::feasibility) break;
    }

    std::vector<CustomerIndex> sequence;
    for (auto id = best; id != kNoParent; id = arena_[id].parent) {
      sequence.push_back(node_of(arena_[id]));
    }
    std::reverse(sequence.begin(), sequence.end());

    auto timing = min_duration_for_sequence(sequence, instance_);
    if (!timing) throw std::logic_error("router produced an infeasible sequence");
    RoutingResult result;
    result.status = RoutingStatus::feasible;
    result.tour = Tour{std::move(sequence), std::move(timing->arrivals)};
    if (mode_ == RoutingMode::optimize) {
      if (timing->cost != best_cost) throw std::logic_error("router cost mismatch");
      result.objective = best_cost;
    }
    return result;
  }

  const Instance& instance_;
  RoutingMode mode_;
  Deadline deadline_;
  std::vector<std::vector<CustomerIndex>> groups_;
  std::vector<Label> arena_;
};

}  // namespace

RoutingResult solve(const Instance& instance, const RoutingRequest& request) {
  if (request.customers.empty()) throw std::domain_error("routing request has no customers");
  LabelSearch search(instance, request.mode, request.time_budget_s);
  return search.run(request.customers);
}

}  // namespace vrpstw

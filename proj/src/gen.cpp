#include "vrpstw/gen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vrpstw {

double Sampler::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::int64_t Sampler::integer(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty integer range");
  const auto span = static_cast<double>(hi - lo + 1);
  auto k = static_cast<std::int64_t>(std::floor(uniform() * span));
  return lo + std::min<std::int64_t>(k, hi - lo);
}

double Sampler::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

void validate(const GenConfig& c) {
  if (c.n < 1) throw ConfigError("n must be at least 1");
  if (!(c.capacity > 0.0)) throw ConfigError("capacity must be positive");
  if (!(c.grid_m > 0.0)) throw ConfigError("grid must be positive");
  if (!(c.speed_kmh > 0.0)) throw ConfigError("speed must be positive");
  if (c.window_count < 1) throw ConfigError("need at least one window");
  if (c.window_length_s <= 0) throw ConfigError("window length must be positive");
  if (c.service_s <= 0) throw ConfigError("service time must be positive");
  if (!(c.weight_min > 0.0) || c.weight_min > c.weight_max) {
    throw ConfigError("weight bounds must satisfy 0 < min <= max");
  }
  if (c.weight_min > c.capacity) throw ConfigError("minimum weight exceeds capacity");
  if (!(c.weight_sd > 0.0)) throw ConfigError("weight spread must be positive");
  if (c.uniform_fraction < 0.0 || c.uniform_fraction > 1.0) {
    throw ConfigError("uniform fraction must lie in [0, 1]");
  }
}

namespace {

struct GaussianBlob {
  Point center;
  double sigma_x;
  double sigma_y;
  double rotation;
};

double round_mm(double v) { return std::round(v * 1000.0) / 1000.0; }

}  // namespace

GeneratedInstance generate_detailed(const GenConfig& config) {
  validate(config);
  Sampler rng(config.seed);
  const double grid = config.grid_m;
  auto on_grid = [&](Point p) { return p.x >= 0.0 && p.x <= grid && p.y >= 0.0 && p.y <= grid; };

  std::vector<TimeWindow> windows;
  for (std::size_t j = 0; j < config.window_count; ++j) {
    const auto start = static_cast<Seconds>(j) * config.window_length_s;
    windows.push_back({static_cast<int>(j + 1), start, start + config.window_length_s});
  }

  const auto uniform_count = static_cast<std::size_t>(
      std::ceil(config.uniform_fraction * static_cast<double>(config.n) - 1e-9));

  std::vector<GaussianBlob> blobs(static_cast<std::size_t>(rng.integer(3, 8)));
  for (auto& blob : blobs) {
    blob.center = {rng.uniform(0.0, grid), rng.uniform(0.0, grid)};
    blob.sigma_x = rng.uniform(500.0, 2000.0);
    blob.sigma_y = rng.uniform(500.0, 2000.0);
    blob.rotation = rng.uniform(0.0, std::numbers::pi);
  }

  const double upper = std::min(config.weight_max, config.capacity);
  std::vector<Customer> customers;
  std::vector<bool> uniform;
  customers.reserve(config.n);
  for (std::size_t i = 0; i < config.n; ++i) {
    Point p;
    const bool is_uniform = i < uniform_count;
    if (is_uniform) {
      p = {rng.uniform(0.0, grid), rng.uniform(0.0, grid)};
    } else {
      const auto& blob = blobs[static_cast<std::size_t>(
          rng.integer(0, static_cast<std::int64_t>(blobs.size()) - 1))];
      const double c = std::cos(blob.rotation);
      const double s = std::sin(blob.rotation);
      do {
        const double dx = blob.sigma_x * rng.normal();
        const double dy = blob.sigma_y * rng.normal();
        p = {blob.center.x + c * dx - s * dy, blob.center.y + s * dx + c * dy};
      } while (!on_grid(p));
    }
    p = {std::clamp(round_mm(p.x), 0.0, grid), std::clamp(round_mm(p.y), 0.0, grid)};

    const auto window = static_cast<std::size_t>(
        rng.integer(0, static_cast<std::int64_t>(config.window_count) - 1));

    Weight weight;
    do {
      const double w = config.weight_mean + config.weight_sd * rng.normal();
      weight = Weight::from_units(w);
    } while (weight < Weight::from_units(config.weight_min) ||
             weight > Weight::from_units(upper));

    customers.push_back({static_cast<int>(i + 1), p, window, weight, config.service_s});
    uniform.push_back(is_uniform);
  }

  const Point depot = config.corner_depot ? Point{0.0, 0.0} : Point{grid / 2.0, grid / 2.0};
  Instance instance(std::move(windows), std::move(customers), depot,
                    Weight::from_units(config.capacity), config.speed_kmh);
  return GeneratedInstance{std::move(instance), config, std::move(uniform), blobs.size()};
}

Instance generate(const GenConfig& config) { return generate_detailed(config).instance; }

}  // namespace vrpstw

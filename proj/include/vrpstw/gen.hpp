#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "vrpstw/model.hpp"

namespace vrpstw {

/// Benchmark generator settings. Defaults reproduce the urban benchmark
/// setup: 20 km grid, 20 km/h, ten one-hour windows, 5 minute service and
/// order weights around 5 units.
struct GenConfig {
  std::size_t n = 250;
  double capacity = 200.0;
  std::uint64_t seed = 1;
  double grid_m = 20000.0;
  double speed_kmh = 20.0;
  std::size_t window_count = 10;
  Seconds window_length_s = 3600;
  Seconds service_s = 300;
  double weight_mean = 5.0;
  double weight_sd = 1.5;
  double weight_min = 1.0;
  double weight_max = 10.0;
  double uniform_fraction = 0.2;
  bool corner_depot = false;

  friend bool operator==(const GenConfig&, const GenConfig&) = default;
};

/// Throws ConfigError when the configuration is unusable.
void validate(const GenConfig& config);

struct GeneratedInstance {
  Instance instance;
  GenConfig config;
  /// uniform[i] is true when customer i was sampled uniformly over the grid.
  std::vector<bool> uniform;
  std::size_t cluster_count = 0;
};

/// Deterministic generator. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard; the distributions below are
/// implemented here rather than taken from <random>, whose distribution
/// algorithms differ between standard libraries.
GeneratedInstance generate_detailed(const GenConfig& config);
Instance generate(const GenConfig& config);

/// Portable sampling helpers over a 64-bit Mersenne Twister.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer on [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  /// Standard normal via Box-Muller (cosine branch only).
  double normal();

 private:
  std::mt19937_64 engine_;
};

}  // namespace vrpstw

#ifndef SPEEDSHARE_RANDOM_INSTANCES_HPP
#define SPEEDSHARE_RANDOM_INSTANCES_HPP

#include <cstdint>
#include <optional>
#include <random>

#include "speedshare/types.hpp"

namespace speedshare {

/// Seeded generator of random test instances. Workloads and penalties are
/// uniform on [0.1, 10]; alpha is drawn from {2, 2.5, 3} unless fixed.
/// Draws are built from raw mt19937_64 output, so a seed replays the same
/// instances on every platform.
class InstanceSampler {
 public:
  explicit InstanceSampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform on [0, 1).
  double unit();
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  /// Uniform integer on [lo, hi].
  std::size_t integer(std::size_t lo, std::size_t hi);

  Instance instance(std::size_t n_min, std::size_t n_max, std::optional<double> alpha = std::nullopt);
  Order order(std::size_t n);

 private:
  std::mt19937_64 rng_;
};

}  // namespace speedshare

#endif  // SPEEDSHARE_RANDOM_INSTANCES_HPP

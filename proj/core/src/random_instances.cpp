#include "speedshare/random_instances.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <numeric>
#include <utility>

namespace speedshare {

double InstanceSampler::unit() {
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

std::size_t InstanceSampler::integer(std::size_t lo, std::size_t hi) {
  if (hi < lo) std::swap(lo, hi);
  return lo + static_cast<std::size_t>(rng_() % (hi - lo + 1));
}

Instance InstanceSampler::instance(std::size_t n_min, std::size_t n_max, std::optional<double> alpha) {
  static constexpr std::array<double, 3> kAlphas{2.0, 2.5, 3.0};
  const double a = alpha ? *alpha : kAlphas[integer(0, kAlphas.size() - 1)];
  const std::size_t n = integer(std::max<std::size_t>(n_min, 1), std::max<std::size_t>(n_max, 1));
  std::vector<Job> jobs;
  jobs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = uniform(0.1, 10.0);
    const double p = uniform(0.1, 10.0);
    jobs.emplace_back("j" + std::to_string(i + 1), w, p);
  }
  return Instance(a, std::move(jobs));
}

Order InstanceSampler::order(std::size_t n) {
  // Fisher-Yates on raw draws; std::shuffle's output is not pinned by the standard.
  std::vector<std::size_t> seq(n);
  std::iota(seq.begin(), seq.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(seq[i - 1], seq[integer(0, i - 1)]);
  return Order::from_sequence(seq);
}

}  // namespace speedshare

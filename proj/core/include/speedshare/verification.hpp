#ifndef SPEEDSHARE_VERIFICATION_HPP
#define SPEEDSHARE_VERIFICATION_HPP

// Seeded property suites over random instances. Each suite emits one CSV
// row per trial (per player for truthfulness) and serializes every failing
// instance for replay.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "speedshare/format.hpp"

namespace speedshare {

enum class Suite { kEquivalence, kTruthfulness, kLemma1, kBudget, kOracle, kSearch };

std::optional<Suite> parse_suite(std::string_view name);
const char* suite_name(Suite suite);

/// Tolerances every suite asserts against.
namespace tolerance {
inline constexpr double kIdentity = 1e-9;
inline constexpr double kDefinitional = 1e-12;
inline constexpr double kDerivative = 1e-5;
inline constexpr double kFiniteDifferenceStep = 1e-5;
inline constexpr double kOracleAgreement = 1e-5;
inline constexpr double kOracleConvergence = 1e-8;
}  // namespace tolerance

struct SuiteConfig {
  Suite suite = Suite::kEquivalence;
  std::size_t trials = 100;
  std::uint64_t seed = 7;
  std::size_t n_min = 1;
  std::size_t n_max = 6;
  std::optional<double> alpha;
  unsigned threads = 0;  // order-search enumeration only
  int precision = kDefaultPrecision;

  /// Trial count and size range each suite is specified with.
  static SuiteConfig defaults(Suite suite);
};

struct SuiteReport {
  Suite suite = Suite::kEquivalence;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t rows = 0;
  std::size_t failures = 0;
  std::string csv;
  std::vector<std::string> failing_instances;

  bool passed() const { return failures == 0; }
  std::string summary() const;
};

SuiteReport run_suite(const SuiteConfig& config);

/// |a - b| / max(|a|, |b|, floor).
double relative_difference(double a, double b, double floor = 1e-300);

}  // namespace speedshare

#endif  // SPEEDSHARE_VERIFICATION_HPP

#ifndef SPEEDSHARE_GAME_LAB_HPP
#define SPEEDSHARE_GAME_LAB_HPP

// Numerical checks of the mechanism's game-theoretic properties:
// best-response scans over a player's announcement, finite-difference
// checks of the announcement derivatives of the optimal lengths, and a
// closed-form-free numeric minimizer of the social cost.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "speedshare/types.hpp"

namespace speedshare {

/// Announcement grid: `points` values from `lo` to `hi`, geometric or
/// evenly spaced. A single point yields {lo}.
struct GridSpec {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t points = 0;
  bool geometric = true;

  /// 41 geometric points spanning [p/4, 4p].
  static GridSpec around(double true_value);
};

/// Strictly increasing grid values; throws ValidationError on an empty or
/// nonpositive grid.
std::vector<double> grid_values(const GridSpec& spec);

struct ScanReport {
  std::size_t player = 0;
  std::vector<double> grid;
  std::vector<double> penalties;  // player_penalty at each grid point
  std::size_t argmin_index = 0;
  double argmin_value = 0.0;
  double true_value = 0.0;
  /// False when the true penalty lies outside [grid.front(), grid.back()];
  /// the scan still runs.
  bool grid_contains_true = true;

  /// Index of the grid point closest to the true value in log distance.
  std::size_t nearest_true_index() const;
  /// Penalties strictly decrease up to the point nearest the true value and
  /// strictly increase after it.
  bool monotone_around_true() const;
};

/// Evaluates the player's total penalty across the grid while every other
/// player announces `opponents` (their true penalty when not given).
ScanReport best_response_scan(const Order& order, const Instance& instance,
                              std::span<const double> true_penalties, std::size_t player,
                              const GridSpec& grid,
                              std::optional<std::span<const double>> opponents = std::nullopt);

/// Same scan over explicit grid values, which must be positive and strictly
/// increasing.
ScanReport best_response_scan(const Order& order, const Instance& instance,
                              std::span<const double> true_penalties, std::size_t player,
                              std::vector<double> grid,
                              std::optional<std::span<const double>> opponents = std::nullopt);

/// Raised when a derivative check is requested for a job ranked after the
/// perturbed player; there the derivative is identically zero.
class OutsideDerivativeScope : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

struct DerivativeCheck {
  std::size_t player = 0;  // i, whose announcement is perturbed
  std::size_t job = 0;     // k, ranked at or before i
  std::size_t job_rank = 0;
  double analytic = 0.0;
  double finite_difference = 0.0;
  double relative_error = 0.0;
};

/// Floor on the denominator of DerivativeCheck::relative_error.
inline constexpr double kRelativeErrorFloor = 1e-12;

/// d(s_k^alpha l_k)/d p_hat_i against its closed form l_k / alpha, using a
/// central difference with h = relative_step * max(1, p_hat_i).
DerivativeCheck check_energy_derivative(const Order& order, const Instance& instance,
                                        std::span<const double> announced, std::size_t player,
                                        std::size_t job, double relative_step = 1e-5);

/// d l_k / d p_hat_i against -(w_k (alpha-1)^(1/alpha) / alpha) S_k^(-1/alpha-1).
DerivativeCheck check_length_derivative(const Order& order, const Instance& instance,
                                        std::span<const double> announced, std::size_t player,
                                        std::size_t job, double relative_step = 1e-5);

/// All (player, job) pairs with rank(job) <= rank(player).
std::vector<std::pair<std::size_t, std::size_t>> derivative_pairs(const Order& order);

class OracleDidNotConverge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kOracleSweepCap = 100000;

/// Minimizes energy plus weighted flow over the lengths by cyclic
/// coordinate golden-section search, seeded at unit speed (l_j = w_j) and
/// evaluated in extended precision. Never consults the closed form. Stops
/// once a full sweep moves no coordinate by more than `tolerance`
/// (relative).
Schedule numeric_oracle_lengths(const Order& order, const Instance& instance,
                                std::span<const double> penalties, double tolerance = 1e-8);

}  // namespace speedshare

#endif  // SPEEDSHARE_GAME_LAB_HPP

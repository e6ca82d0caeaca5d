#ifndef SPEEDSHARE_MECHANISM_HPP
#define SPEEDSHARE_MECHANISM_HPP

// Cost-sharing mechanism for a fixed job order.
//
// Players announce penalties p_hat. The operator runs the jobs in the fixed
// order at the lengths that minimize energy plus announced weighted flow,
// and charges player i
//
//   b_i = alpha * (OPT(p_hat) - OPT(p_hat without i)) - p_hat_i * C_i,
//
// where OPT is the energy component of that optimum. A player's total
// penalty is p_i * C_i + b_i with the TRUE p_i on the delay term.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "speedshare/types.hpp"

namespace speedshare {

struct MechanismOutcome {
  Order order;
  Schedule schedule;  // optimal lengths at the announced penalties
  std::vector<double> charges;
  std::vector<double> completion_times;
  std::vector<double> energy_shares;  // l_i * s_i^alpha
  double total_energy = 0.0;
  double social_cost = 0.0;  // energy + announced weighted flow
  double budget_ratio = 0.0;  // sum(b) / total_energy
  double social_ratio = 0.0;  // sum(b) / social_cost
  /// Set for single-player games, where the budget guarantees do not apply.
  bool degenerate = false;
  /// Guarantee violations: a budget ratio outside [1, alpha+1] or
  /// a charge not strictly above the player's energy share. Empty when the
  /// guarantees hold or when `degenerate` is set.
  std::vector<std::string> violations;

  double total_charges() const;
};

struct PlayerView {
  std::size_t player = 0;
  double true_penalty = 0.0;
  double announced_penalty = 0.0;
  double completion_time = 0.0;
  double charge = 0.0;
  /// true_penalty * completion_time + charge
  double penalty_total = 0.0;
};

/// OPT(p_hat): energy of the optimal schedule at the announced penalties.
double opt_energy(const Order& order, const Instance& instance, std::span<const double> announced);

/// Execution lengths of the n-1 remaining jobs once `excluded` is removed,
/// indexed like the original instance; the excluded slot holds 0.
std::vector<double> lengths_excluding(const Order& order, const Instance& instance,
                                      std::span<const double> announced, std::size_t excluded);

/// OPT(p_hat without i); 0 for a single-job instance.
double opt_energy_excluding(const Order& order, const Instance& instance,
                            std::span<const double> announced, std::size_t excluded);

/// alpha * (OPT(p_hat) - OPT(p_hat without i)).
double scaled_marginal_energy(const Order& order, const Instance& instance,
                              std::span<const double> announced, std::size_t player);

double cost_share(const Order& order, const Instance& instance, std::span<const double> announced,
                  std::size_t player);

/// All charges plus budget accounting. Falsification events are recorded
/// in `violations`, never clamped away.
MechanismOutcome run_mechanism(const Order& order, const Instance& instance,
                               std::span<const double> announced);

/// The player's total penalty p_i * C_i + b_i under the announced profile.
double player_penalty(const Order& order, const Instance& instance,
                      std::span<const double> true_penalties, std::span<const double> announced,
                      std::size_t player);

PlayerView player_view(const Order& order, const Instance& instance,
                       std::span<const double> true_penalties, std::span<const double> announced,
                       std::size_t player);

}  // namespace speedshare

#endif  // SPEEDSHARE_MECHANISM_HPP

#include "speedshare/mechanism.hpp"

#include <numeric>
#include <sstream>

#include "speedshare/costs.hpp"

namespace speedshare {

namespace {

void require_player(const Instance& instance, std::size_t player) {
  if (player >= instance.size()) {
    throw ValidationError("player index " + std::to_string(player) + " out of range");
  }
}

std::vector<double> drop(std::span<const double> v, std::size_t i) {
  std::vector<double> out;
  out.reserve(v.size() - 1);
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j != i) out.push_back(v[j]);
  }
  return out;
}

}  // namespace

double MechanismOutcome::total_charges() const {
  return std::accumulate(charges.begin(), charges.end(), 0.0);
}

double opt_energy(const Order& order, const Instance& instance, std::span<const double> announced) {
  return energy(optimal_lengths(order, instance, announced), instance);
}

std::vector<double> lengths_excluding(const Order& order, const Instance& instance,
                                      std::span<const double> announced, std::size_t excluded) {
  require_player(instance, excluded);
  if (announced.size() != instance.size()) {
    throw ValidationError("announced penalty vector size does not match the number of jobs");
  }
  std::vector<double> full(instance.size(), 0.0);
  if (instance.size() == 1) return full;
  const auto reduced = optimal_lengths(order.without(excluded), instance.without(excluded),
                                       drop(announced, excluded));
  for (std::size_t j = 0, k = 0; j < full.size(); ++j) {
    if (j != excluded) full[j] = reduced.length(k++);
  }
  return full;
}

double opt_energy_excluding(const Order& order, const Instance& instance,
                            std::span<const double> announced, std::size_t excluded) {
  require_player(instance, excluded);
  if (instance.size() == 1) return 0.0;
  const Instance rest = instance.without(excluded);
  return energy(optimal_lengths(order.without(excluded), rest, drop(announced, excluded)), rest);
}

double scaled_marginal_energy(const Order& order, const Instance& instance,
                              std::span<const double> announced, std::size_t player) {
  return instance.alpha() * (opt_energy(order, instance, announced) -
                             opt_energy_excluding(order, instance, announced, player));
}

double cost_share(const Order& order, const Instance& instance, std::span<const double> announced,
                  std::size_t player) {
  require_player(instance, player);
  const auto schedule = optimal_lengths(order, instance, announced);
  const double completion = schedule.completion_times()[player];
  return scaled_marginal_energy(order, instance, announced, player) - announced[player] * completion;
}

MechanismOutcome run_mechanism(const Order& order, const Instance& instance,
                               std::span<const double> announced) {
  Schedule schedule = optimal_lengths(order, instance, announced);
  const std::size_t n = instance.size();
  const double alpha = instance.alpha();
  const double full = energy(schedule, instance);

  MechanismOutcome out{.order = order,
                       .schedule = schedule,
                       .charges = std::vector<double>(n),
                       .completion_times = schedule.completion_times(),
                       .energy_shares = energy_shares(schedule, instance),
                       .violations = {}};
  out.total_energy = full;
  out.social_cost = full + weighted_flow(schedule, announced);
  out.degenerate = n < 2;
  for (std::size_t i = 0; i < n; ++i) {
    const double marginal = full - opt_energy_excluding(order, instance, announced, i);
    out.charges[i] = alpha * marginal - announced[i] * out.completion_times[i];
  }
  const double total = out.total_charges();
  out.budget_ratio = total / full;
  out.social_ratio = total / out.social_cost;

  if (!out.degenerate) {
    if (!(out.budget_ratio >= 1.0 && out.budget_ratio <= alpha + 1.0)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "budget ratio " << out.budget_ratio << " outside [1, " << alpha + 1.0 << "]";
      out.violations.push_back(msg.str());
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!(out.charges[i] > out.energy_shares[i])) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "charge of player '" << instance.job(i).id() << "' (" << out.charges[i]
            << ") not above its energy share (" << out.energy_shares[i] << ")";
        out.violations.push_back(msg.str());
      }
    }
  }
  return out;
}

PlayerView player_view(const Order& order, const Instance& instance,
                       std::span<const double> true_penalties, std::span<const double> announced,
                       std::size_t player) {
  require_player(instance, player);
  if (true_penalties.size() != instance.size()) {
    throw ValidationError("true penalty vector size does not match the number of jobs");
  }
  if (!(true_penalties[player] > 0.0)) throw ValidationError("true penalties must be positive");
  const auto schedule = optimal_lengths(order, instance, announced);
  PlayerView view;
  view.player = player;
  view.true_penalty = true_penalties[player];
  view.announced_penalty = announced[player];
  view.completion_time = schedule.completion_times()[player];
  view.charge = scaled_marginal_energy(order, instance, announced, player) -
                announced[player] * view.completion_time;
  view.penalty_total = view.true_penalty * view.completion_time + view.charge;
  return view;
}

double player_penalty(const Order& order, const Instance& instance,
                      std::span<const double> true_penalties, std::span<const double> announced,
                      std::size_t player) {
  return player_view(order, instance, true_penalties, announced, player).penalty_total;
}

}  // namespace speedshare

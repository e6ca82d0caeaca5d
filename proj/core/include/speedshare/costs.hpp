#ifndef SPEEDSHARE_COSTS_HPP
#define SPEEDSHARE_COSTS_HPP

// Cost evaluators for the speed-scaling objective and the closed-form
// optimal execution lengths for a fixed order.
//
// Notation used in comments: S_j is the suffix penalty sum of job j, i.e.
// the total penalty of all jobs ranked at or after j. With a fixed order
// the optimal length of job j depends on S_j only:
//
//   s_j = (S_j / (alpha - 1))^(1/alpha),   l_j = w_j / s_j.
//
// All sums run in execution order, so two orders that only permute
// identical jobs produce bit-identical costs.

#include <span>
#include <vector>

#include "speedshare/types.hpp"

namespace speedshare {

/// S_j for every job j under `order`, accumulated backward in O(n).
std::vector<double> suffix_penalty_sums(const Order& order, std::span<const double> penalties);

/// E = sum_i w_i^alpha * l_i^(1-alpha).
double energy(const Schedule& schedule, const Instance& instance);

/// F = sum_i p_i * C_i.
double weighted_flow(const Schedule& schedule, std::span<const double> penalties);

/// Per-job energy l_i * s_i^alpha.
std::vector<double> energy_shares(const Schedule& schedule, const Instance& instance);

/// Unique minimizer of E + F over the lengths for a fixed order.
Schedule optimal_lengths(const Order& order, const Instance& instance,
                         std::span<const double> penalties);
Schedule optimal_lengths(const Order& order, const Instance& instance);

/// w_i / l_i per job.
std::vector<double> speeds(const Schedule& schedule, const Instance& instance);

/// Optimal speeds straight from the suffix sums, without going through
/// lengths: (S_j / (alpha - 1))^(1/alpha).
std::vector<double> closed_form_speeds(const Order& order, const Instance& instance,
                                       std::span<const double> penalties);

/// Unit-speed objective sum_j w_j * C_j^((alpha-1)/alpha), where jobs are
/// processed in `sigma` with the given processing times.
double problem_b_value(const Order& sigma, const Instance& instance,
                       std::span<const double> processing_times);

/// alpha * (alpha-1)^((1-alpha)/alpha). The optimal social cost for order
/// pi equals this constant times problem_b_value of the reversed order.
double equivalence_constant(double alpha);

/// Evaluates energy, weighted flow and their sum for an explicit schedule.
CostBreakdown evaluate(const Schedule& schedule, const Instance& instance,
                       std::span<const double> penalties);

/// optimal_lengths followed by evaluate.
CostBreakdown cost_breakdown(const Order& order, const Instance& instance,
                             std::span<const double> penalties);
CostBreakdown cost_breakdown(const Order& order, const Instance& instance);

}  // namespace speedshare

#endif  // SPEEDSHARE_COSTS_HPP

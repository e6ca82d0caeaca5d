#include "speedshare/costs.hpp"

#include <cmath>

namespace speedshare {

namespace {

void require_size(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw ValidationError(std::string(what) + ": expected " + std::to_string(want) +
                          " entries, got " + std::to_string(got));
  }
}

void require_positive(std::span<const double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw ValidationError(std::string(what) + " must be positive and finite");
    }
  }
}

void require_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha <= 1.0) {
    throw ValidationError("alpha must be a finite number greater than 1");
  }
}

}  // namespace

std::vector<double> suffix_penalty_sums(const Order& order, std::span<const double> penalties) {
  require_size(penalties.size(), order.size(), "penalties");
  const auto seq = order.sequence();
  std::vector<double> suffix(seq.size());
  double acc = 0.0;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    acc += penalties[*it];
    suffix[*it] = acc;
  }
  return suffix;
}

double energy(const Schedule& schedule, const Instance& instance) {
  require_size(schedule.size(), instance.size(), "schedule");
  const double alpha = instance.alpha();
  double total = 0.0;
  for (std::size_t j : schedule.order().sequence()) {
    const double w = instance.job(j).workload();
    total += std::pow(w, alpha) * std::pow(schedule.length(j), 1.0 - alpha);
  }
  return total;
}

double weighted_flow(const Schedule& schedule, std::span<const double> penalties) {
  require_size(penalties.size(), schedule.size(), "penalties");
  double t = 0.0;
  double total = 0.0;
  for (std::size_t j : schedule.order().sequence()) {
    t += schedule.length(j);
    total += penalties[j] * t;
  }
  return total;
}

std::vector<double> energy_shares(const Schedule& schedule, const Instance& instance) {
  require_size(schedule.size(), instance.size(), "schedule");
  const double alpha = instance.alpha();
  std::vector<double> shares(schedule.size());
  for (std::size_t j = 0; j < shares.size(); ++j) {
    const double l = schedule.length(j);
    const double s = instance.job(j).workload() / l;
    shares[j] = l * std::pow(s, alpha);
  }
  return shares;
}

Schedule optimal_lengths(const Order& order, const Instance& instance,
                         std::span<const double> penalties) {
  require_alpha(instance.alpha());
  require_size(order.size(), instance.size(), "order");
  require_positive(penalties, "penalties");
  const double alpha = instance.alpha();
  const auto suffix = suffix_penalty_sums(order, penalties);
  std::vector<double> lengths(order.size());
  for (std::size_t j = 0; j < lengths.size(); ++j) {
    lengths[j] = instance.job(j).workload() * std::pow((alpha - 1.0) / suffix[j], 1.0 / alpha);
  }
  return Schedule(order, std::move(lengths));
}

Schedule optimal_lengths(const Order& order, const Instance& instance) {
  const auto p = instance.penalties();
  return optimal_lengths(order, instance, p);
}

std::vector<double> speeds(const Schedule& schedule, const Instance& instance) {
  require_size(schedule.size(), instance.size(), "schedule");
  std::vector<double> s(schedule.size());
  for (std::size_t j = 0; j < s.size(); ++j) s[j] = instance.job(j).workload() / schedule.length(j);
  return s;
}

std::vector<double> closed_form_speeds(const Order& order, const Instance& instance,
                                       std::span<const double> penalties) {
  require_size(order.size(), instance.size(), "order");
  require_positive(penalties, "penalties");
  const double alpha = instance.alpha();
  auto s = suffix_penalty_sums(order, penalties);
  for (double& v : s) v = std::pow(v / (alpha - 1.0), 1.0 / alpha);
  return s;
}

double problem_b_value(const Order& sigma, const Instance& instance,
                       std::span<const double> processing_times) {
  require_size(sigma.size(), instance.size(), "order");
  require_size(processing_times.size(), instance.size(), "processing times");
  require_positive(processing_times, "processing times");
  const double exponent = (instance.alpha() - 1.0) / instance.alpha();
  double t = 0.0;
  double total = 0.0;
  for (std::size_t j : sigma.sequence()) {
    t += processing_times[j];
    total += instance.job(j).workload() * std::pow(t, exponent);
  }
  return total;
}

double equivalence_constant(double alpha) {
  require_alpha(alpha);
  return alpha * std::pow(alpha - 1.0, (1.0 - alpha) / alpha);
}

CostBreakdown evaluate(const Schedule& schedule, const Instance& instance,
                       std::span<const double> penalties) {
  return CostBreakdown::of(energy(schedule, instance), weighted_flow(schedule, penalties));
}

CostBreakdown cost_breakdown(const Order& order, const Instance& instance,
                             std::span<const double> penalties) {
  return evaluate(optimal_lengths(order, instance, penalties), instance, penalties);
}

CostBreakdown cost_breakdown(const Order& order, const Instance& instance) {
  const auto p = instance.penalties();
  return cost_breakdown(order, instance, p);
}

}  // namespace speedshare

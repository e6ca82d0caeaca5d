#include "speedshare/game_lab.hpp"

#include <algorithm>
#include <cmath>

#include "speedshare/costs.hpp"
#include "speedshare/mechanism.hpp"

namespace speedshare {

GridSpec GridSpec::around(double true_value) {
  return GridSpec{true_value / 4.0, true_value * 4.0, 41, true};
}

std::vector<double> grid_values(const GridSpec& spec) {
  if (spec.points == 0) throw ValidationError("scan grid is empty");
  if (!(spec.lo > 0.0) || !std::isfinite(spec.hi)) {
    throw ValidationError("scan grid values must be positive and finite");
  }
  if (spec.points == 1) return {spec.lo};
  if (!(spec.hi > spec.lo)) throw ValidationError("scan grid needs lo < hi for more than one point");

  std::vector<double> out(spec.points);
  const double steps = static_cast<double>(spec.points - 1);
  for (std::size_t k = 0; k < spec.points; ++k) {
    const double t = static_cast<double>(k) / steps;
    out[k] = spec.geometric ? spec.lo * std::pow(spec.hi / spec.lo, t)
                            : spec.lo + static_cast<double>(k) * ((spec.hi - spec.lo) / steps);
  }
  out.back() = spec.hi;
  return out;
}

std::size_t ScanReport::nearest_true_index() const {
  std::size_t best = 0;
  double best_dist = INFINITY;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double dist = std::abs(std::log(grid[k] / true_value));
    if (dist < best_dist) {
      best_dist = dist;
      best = k;
    }
  }
  return best;
}

bool ScanReport::monotone_around_true() const {
  const std::size_t m = nearest_true_index();
  for (std::size_t k = 0; k + 1 <= m; ++k) {
    if (!(penalties[k] > penalties[k + 1])) return false;
  }
  for (std::size_t k = m; k + 1 < penalties.size(); ++k) {
    if (!(penalties[k] < penalties[k + 1])) return false;
  }
  return true;
}

ScanReport best_response_scan(const Order& order, const Instance& instance,
                              std::span<const double> true_penalties, std::size_t player,
                              const GridSpec& grid, std::optional<std::span<const double>> opponents) {
  return best_response_scan(order, instance, true_penalties, player, grid_values(grid), opponents);
}

ScanReport best_response_scan(const Order& order, const Instance& instance,
                              std::span<const double> true_penalties, std::size_t player,
                              std::vector<double> grid, std::optional<std::span<const double>> opponents) {
  if (grid.empty()) throw ValidationError("scan grid is empty");
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!(grid[k] > 0.0) || !std::isfinite(grid[k]) || (k > 0 && !(grid[k] > grid[k - 1]))) {
      throw ValidationError("scan grid must be positive and strictly increasing");
    }
  }
  if (player >= instance.size()) throw ValidationError("unknown player");
  if (true_penalties.size() != instance.size()) {
    throw ValidationError("true penalty vector size does not match the number of jobs");
  }
  std::vector<double> announced(true_penalties.begin(), true_penalties.end());
  if (opponents) {
    if (opponents->size() != instance.size()) {
      throw ValidationError("opponent announcement vector size does not match the number of jobs");
    }
    announced.assign(opponents->begin(), opponents->end());
  }

  ScanReport report;
  report.player = player;
  report.true_value = true_penalties[player];
  report.grid = std::move(grid);
  report.grid_contains_true =
      report.grid.front() <= report.true_value && report.true_value <= report.grid.back();
  report.penalties.reserve(report.grid.size());
  for (double value : report.grid) {
    announced[player] = value;
    report.penalties.push_back(player_penalty(order, instance, true_penalties, announced, player));
  }
  const auto it = std::min_element(report.penalties.begin(), report.penalties.end());
  report.argmin_index = static_cast<std::size_t>(it - report.penalties.begin());
  report.argmin_value = report.grid[report.argmin_index];
  return report;
}

namespace {

void require_scope(const Order& order, std::size_t player, std::size_t job) {
  if (player >= order.size() || job >= order.size()) throw ValidationError("index out of range");
  if (order.rank(job) > order.rank(player)) {
    throw OutsideDerivativeScope("job is ranked after the perturbed player; its length does not "
                            "depend on that announcement");
  }
}

template <class Quantity>
double central_difference(const Order& order, const Instance& instance,
                          std::span<const double> announced, std::size_t player, double h,
                          Quantity quantity) {
  std::vector<double> shifted(announced.begin(), announced.end());
  shifted[player] = announced[player] + h;
  const double up = quantity(optimal_lengths(order, instance, shifted));
  shifted[player] = announced[player] - h;
  const double down = quantity(optimal_lengths(order, instance, shifted));
  return (up - down) / (2.0 * h);
}

DerivativeCheck finish(std::size_t player, std::size_t job, const Order& order, double analytic,
                       double fd) {
  return DerivativeCheck{player, job, order.rank(job), analytic, fd,
                         std::abs(analytic - fd) / std::max(std::abs(analytic), kRelativeErrorFloor)};
}

double step_for(std::span<const double> announced, std::size_t player, double relative_step) {
  if (!(relative_step > 0.0)) throw ValidationError("finite-difference step must be positive");
  const double h = relative_step * std::max(1.0, announced[player]);
  if (!(announced[player] - h > 0.0)) {
    throw ValidationError("finite-difference step would make the announcement nonpositive");
  }
  return h;
}

}  // namespace

DerivativeCheck check_energy_derivative(const Order& order, const Instance& instance,
                                        std::span<const double> announced, std::size_t player,
                                        std::size_t job, double relative_step) {
  require_scope(order, player, job);
  const double h = step_for(announced, player, relative_step);
  const double alpha = instance.alpha();
  const double w = instance.job(job).workload();
  const double analytic = optimal_lengths(order, instance, announced).length(job) / alpha;
  const double fd = central_difference(order, instance, announced, player, h,
                                       [&](const Schedule& s) {
                                         const double l = s.length(job);
                                         return std::pow(w / l, alpha) * l;
                                       });
  return finish(player, job, order, analytic, fd);
}

DerivativeCheck check_length_derivative(const Order& order, const Instance& instance,
                                        std::span<const double> announced, std::size_t player,
                                        std::size_t job, double relative_step) {
  require_scope(order, player, job);
  const double h = step_for(announced, player, relative_step);
  const double alpha = instance.alpha();
  const double suffix = suffix_penalty_sums(order, announced)[job];
  const double analytic = -(instance.job(job).workload() * std::pow(alpha - 1.0, 1.0 / alpha) / alpha) *
                          std::pow(suffix, -1.0 / alpha - 1.0);
  const double fd = central_difference(order, instance, announced, player, h,
                                       [&](const Schedule& s) { return s.length(job); });
  return finish(player, job, order, analytic, fd);
}

std::vector<std::pair<std::size_t, std::size_t>> derivative_pairs(const Order& order) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (order.rank(k) <= order.rank(i)) pairs.emplace_back(i, k);
    }
  }
  return pairs;
}

namespace {

// Social cost straight from its definition, in extended precision.
class ExtendedObjective {
 public:
  ExtendedObjective(const Order& order, const Instance& instance, std::span<const double> penalties)
      : alpha_(instance.alpha()), sequence_(order.sequence()), w_(instance.size()), p_(instance.size()) {
    for (std::size_t j = 0; j < w_.size(); ++j) {
      w_[j] = instance.job(j).workload();
      p_[j] = penalties[j];
    }
  }

  long double operator()(const std::vector<long double>& lengths) const {
    long double energy = 0.0L;
    long double flow = 0.0L;
    long double t = 0.0L;
    for (std::size_t j : sequence_) {
      energy += std::pow(w_[j], alpha_) * std::pow(lengths[j], 1.0L - alpha_);
      t += lengths[j];
      flow += p_[j] * t;
    }
    return energy + flow;
  }

 private:
  long double alpha_;
  std::vector<std::size_t> sequence_;
  std::vector<long double> w_;
  std::vector<long double> p_;
};

constexpr int kBracketExpansions = 200;

// Golden-section search on log(l_j) with every other coordinate held fixed.
long double minimize_coordinate(const ExtendedObjective& objective, std::vector<long double>& lengths,
                                std::size_t j, long double log_width) {
  auto f = [&](long double u) {
    lengths[j] = std::exp(u);
    return objective(lengths);
  };

  long double mid = std::log(lengths[j]);
  long double step = std::log(2.0L);
  long double f_mid = f(mid);
  long double left = mid - step, right = mid + step;
  long double f_left = f(left), f_right = f(right);
  for (int i = 0; i < kBracketExpansions && !(f_mid <= f_left && f_mid <= f_right); ++i) {
    step *= 2.0L;
    if (f_left < f_mid) {
      right = mid, f_right = f_mid;
      mid = left, f_mid = f_left;
      left = mid - step, f_left = f(left);
    } else {
      left = mid, f_left = f_mid;
      mid = right, f_mid = f_right;
      right = mid + step, f_right = f(right);
    }
  }
  if (!(f_mid <= f_left && f_mid <= f_right)) {
    throw OracleDidNotConverge("numeric oracle could not bracket a minimum");
  }

  const long double inv_phi = (std::sqrt(5.0L) - 1.0L) / 2.0L;
  long double a = left, b = right;
  long double c = b - inv_phi * (b - a);
  long double d = a + inv_phi * (b - a);
  long double fc = f(c), fd = f(d);
  while (b - a > log_width) {
    if (fc < fd) {
      b = d, d = c, fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c, c = d, fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  lengths[j] = std::exp((a + b) / 2.0L);
  return lengths[j];
}

}  // namespace

Schedule numeric_oracle_lengths(const Order& order, const Instance& instance,
                                std::span<const double> penalties, double tolerance) {
  if (!(tolerance > 0.0)) throw ValidationError("oracle tolerance must be positive");
  if (order.size() != instance.size() || penalties.size() != instance.size()) {
    throw ValidationError("oracle inputs differ in size");
  }
  for (double p : penalties) {
    if (!(p > 0.0)) throw ValidationError("penalties must be positive");
  }

  const ExtendedObjective objective(order, instance, penalties);
  std::vector<long double> lengths(instance.size());
  for (std::size_t j = 0; j < lengths.size(); ++j) lengths[j] = instance.job(j).workload();

  const long double log_width = std::log1p(static_cast<long double>(tolerance)) / 10.0L;
  for (std::size_t sweep = 0; sweep < kOracleSweepCap; ++sweep) {
    long double max_change = 0.0L;
    for (std::size_t j = 0; j < lengths.size(); ++j) {
      const long double before = lengths[j];
      const long double after = minimize_coordinate(objective, lengths, j, log_width);
      max_change = std::max(max_change, std::abs(after - before) / before);
    }
    if (max_change < tolerance) {
      std::vector<double> out(lengths.begin(), lengths.end());
      return Schedule(order, std::move(out));
    }
  }
  throw OracleDidNotConverge("numeric oracle did not converge within the sweep cap");
}

}  // namespace speedshare

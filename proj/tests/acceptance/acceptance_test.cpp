// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "speedshare/costs.hpp"
#include "speedshare/game_lab.hpp"
#include "speedshare/mechanism.hpp"
#include "speedshare/order_search.hpp"
#include "speedshare/random_instances.hpp"
#include "speedshare/verification.hpp"

using namespace speedshare;

namespace {

constexpr double kAlphas[] = {2.0, 2.5, 3.0};

double rel(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

struct Criterion {
  Criterion(int id, std::string name) : id(id), name(std::move(name)) {}

  int id;
  std::string name;
  bool pass = true;
  std::string detail;
};

// Instances drawn with alpha cycling over the three exponents so each one
// is covered evenly.
std::vector<Instance> draw(std::uint64_t seed, int count, std::size_t n_min, std::size_t n_max) {
  InstanceSampler sampler(seed);
  std::vector<Instance> out;
  for (int t = 0; t < count; ++t) out.push_back(sampler.instance(n_min, n_max, kAlphas[t % 3]));
  return out;
}

void for_each_sequence(std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> seq(n);
  std::iota(seq.begin(), seq.end(), std::size_t{0});
  do {
    fn(seq);
  } while (std::next_permutation(seq.begin(), seq.end()));
}

// Local reference arithmetic, written out from the definitions.
struct Reference {
  double energy = 0.0;
  double flow = 0.0;
};

Reference reference_optimum(const Instance& inst, const std::vector<std::size_t>& seq) {
  const std::size_t n = seq.size();
  const double a = inst.alpha();
  std::vector<double> lengths(inst.size());
  for (std::size_t r = 0; r < n; ++r) {
    double tail = 0.0;
    for (std::size_t q = r; q < n; ++q) tail += inst.job(seq[q]).penalty();
    lengths[seq[r]] = inst.job(seq[r]).workload() * std::pow((a - 1.0) / tail, 1.0 / a);
  }
  Reference out;
  double t = 0.0;
  for (std::size_t j : seq) {
    const double speed = inst.job(j).workload() / lengths[j];
    out.energy += lengths[j] * std::pow(speed, a);
    t += lengths[j];
    out.flow += inst.job(j).penalty() * t;
  }
  return out;
}

// Sum of w_j C_j^((a-1)/a) with p as processing times, run in order `seq`.
double reference_b(const Instance& inst, const std::vector<std::size_t>& seq) {
  const double a = inst.alpha();
  double t = 0.0, b = 0.0;
  for (std::size_t j : seq) {
    t += inst.job(j).penalty();
    b += inst.job(j).workload() * std::pow(t, (a - 1.0) / a);
  }
  return b;
}

void check_equivalence(Criterion& c) {
  double worst = 0.0, worst_flipped = 0.0, worst_library = 0.0;
  std::size_t orders = 0;
  for (const Instance& inst : draw(1001, 100, 1, 6)) {
    const double a = inst.alpha();
    const double constant = a * std::pow(a - 1.0, (1.0 - a) / a);
    const double flipped_constant = a * std::pow(a - 1.0, (a - 1.0) / a);
    for_each_sequence(inst.size(), [&](const std::vector<std::size_t>& seq) {
      ++orders;
      const auto ref = reference_optimum(inst, seq);
      std::vector<std::size_t> reversed(seq.rbegin(), seq.rend());
      const double b = reference_b(inst, reversed);
      worst = std::max(worst, rel(ref.energy + ref.flow, constant * b));
      if (a != 2.0) {
        worst_flipped = std::max(worst_flipped, rel(ref.energy + ref.flow, flipped_constant * b));
      }
      const Order order = Order::from_sequence(seq);
      const double lib = cost_breakdown(order, inst).social;
      const double lib_b = equivalence_constant(a) * problem_b_value(order.reversed(), inst, inst.penalties());
      worst_library = std::max({worst_library, rel(lib, ref.energy + ref.flow), rel(lib, lib_b)});
    });
  }
  c.pass = worst <= 1e-9 && worst_library <= 1e-9;
  char buf[256];
  std::snprintf(buf, sizeof buf, "orders=%zu max_rel_err=%.2e library_max_rel_err=%.2e", orders, worst,
                worst_library);
  c.detail = buf;
  std::snprintf(buf, sizeof buf,
                "  info: constant a*(a-1)^((a-1)/a) at a in {2.5, 3} gives max_rel_err=%.2e", worst_flipped);
  c.detail += "\n" + std::string(buf);
}

void check_oracle(Criterion& c) {
  InstanceSampler sampler(1002);
  double worst = 0.0;
  int failed = 0;
  for (int t = 0; t < 50; ++t) {
    const Instance inst = sampler.instance(1, 5, kAlphas[t % 3]);
    const Order order = sampler.order(inst.size());
    try {
      const auto numeric = numeric_oracle_lengths(order, inst, inst.penalties(), 1e-8);
      const auto closed = optimal_lengths(order, inst);
      for (std::size_t j = 0; j < inst.size(); ++j) worst = std::max(worst, rel(numeric.length(j), closed.length(j)));
    } catch (const OracleDidNotConverge&) {
      ++failed;
    }
  }
  c.pass = failed == 0 && worst <= 1e-5;
  c.detail = "instances=50 not_converged=" + std::to_string(failed);
  char buf[64];
  std::snprintf(buf, sizeof buf, " max_rel_err=%.2e", worst);
  c.detail += buf;
}

void check_identities(Criterion& c) {
  double worst = 0.0;
  std::size_t orders = 0;
  for (const Instance& inst : draw(1001, 100, 1, 6)) {
    const double a = inst.alpha();
    for_each_sequence(inst.size(), [&](const std::vector<std::size_t>& seq) {
      ++orders;
      const auto cost = cost_breakdown(Order::from_sequence(seq), inst);
      worst = std::max({worst, rel(cost.flow, (a - 1.0) * cost.energy), rel(cost.social, a * cost.energy)});
    });
  }
  c.pass = worst <= 1e-9;
  char buf[128];
  std::snprintf(buf, sizeof buf, "orders=%zu max_rel_err=%.2e", orders, worst);
  c.detail = buf;
}

void check_budget(Criterion& c) {
  InstanceSampler sampler(1004);
  double lo = INFINITY, hi = 0.0;
  int band_violations = 0, player_violations = 0;
  for (int t = 0; t < 200; ++t) {
    const Instance inst = sampler.instance(2, 8, kAlphas[t % 3]);
    const Order order = sampler.order(inst.size());
    const auto outcome = run_mechanism(order, inst, inst.penalties());
    const double ratio = outcome.total_charges() / outcome.total_energy;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio / (inst.alpha() + 1.0));
    if (ratio < 1.0 || ratio > inst.alpha() + 1.0) ++band_violations;
    for (std::size_t i = 0; i < inst.size(); ++i) {
      const double speed = inst.job(i).workload() / outcome.schedule.length(i);
      if (!(outcome.charges[i] > outcome.schedule.length(i) * std::pow(speed, inst.alpha()))) ++player_violations;
    }
  }
  const auto pair = Instance(2.0, {Job("a", 1, 1), Job("b", 1, 1)});
  const double worked = run_mechanism(Order::identity(2), pair, pair.penalties()).budget_ratio;
  const double expected = (3.0 * std::sqrt(2.0) - 1.0) / (1.0 + std::sqrt(2.0));
  const double worked_err = rel(worked, expected);
  c.pass = band_violations == 0 && player_violations == 0 && worked_err <= 1e-9;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "instances=200 band_violations=%d player_violations=%d min_ratio=%.6f "
                "max_ratio_over_cap=%.6f worked_ratio=%.9f rel_err=%.1e",
                band_violations, player_violations, lo, hi, worked, worked_err);
  c.detail = buf;
}

void check_truthfulness(Criterion& c) {
  InstanceSampler sampler(1005);
  int scans = 0, off_argmin = 0, not_monotone = 0;
  for (int t = 0; t < 200; ++t) {
    const Instance inst = sampler.instance(2, 6, kAlphas[t % 3]);
    const Order order = sampler.order(inst.size());
    const auto p = inst.penalties();
    for (std::size_t i = 0; i < inst.size(); ++i) {
      ++scans;
      const auto report = best_response_scan(order, inst, p, i, GridSpec::around(p[i]));
      if (report.argmin_index != report.nearest_true_index()) ++off_argmin;
      if (!report.monotone_around_true()) ++not_monotone;
    }
  }
  c.pass = off_argmin == 0 && not_monotone == 0;
  c.detail = "instances=200 scans=" + std::to_string(scans) + " argmin_off_truth=" + std::to_string(off_argmin) +
             " not_monotone=" + std::to_string(not_monotone);
}

void check_derivatives(Criterion& c) {
  InstanceSampler sampler(1006);
  double worst = 0.0;
  int pairs = 0, nonnegative = 0;
  for (int t = 0; t < 50; ++t) {
    const Instance inst = sampler.instance(1, 6, kAlphas[t % 3]);
    const Order order = sampler.order(inst.size());
    const auto announced = inst.penalties();
    for (const auto& [i, k] : derivative_pairs(order)) {
      ++pairs;
      const auto energy = check_energy_derivative(order, inst, announced, i, k, 1e-5);
      const auto length = check_length_derivative(order, inst, announced, i, k, 1e-5);
      worst = std::max({worst, energy.relative_error, length.relative_error});
      if (!(length.analytic < 0.0) || !(length.finite_difference < 0.0)) ++nonnegative;
    }
  }
  c.pass = worst <= 1e-5 && nonnegative == 0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "instances=50 pairs=%d max_rel_err=%.2e nonnegative_length_derivatives=%d", pairs,
                worst, nonnegative);
  c.detail = buf;
}

void check_search(Criterion& c) {
  InstanceSampler sampler(1007);
  double worst = 0.0, worst_brute = 0.0;
  for (int t = 0; t < 100; ++t) {
    const Instance inst = sampler.instance(1, 6, kAlphas[t % 3]);
    const auto direct = exhaustive_best_order(inst);
    const auto via_b = search_via_problem_b(inst);
    double brute = INFINITY;
    for_each_sequence(inst.size(), [&](const std::vector<std::size_t>& seq) {
      const auto ref = reference_optimum(inst, seq);
      brute = std::min(brute, ref.energy + ref.flow);
    });
    worst = std::max({worst, rel(direct.best_cost, via_b.best_cost),
                      rel(direct.best_cost, cost_breakdown(via_b.best_order, inst).social)});
    worst_brute = std::max(worst_brute, rel(direct.best_cost, brute));
  }
  c.pass = worst <= 1e-9 && worst_brute <= 1e-9;
  char buf[160];
  std::snprintf(buf, sizeof buf, "instances=100 max_rel_err=%.2e vs_reference_enumeration=%.2e", worst, worst_brute);
  c.detail = buf;
}

void check_determinism(Criterion& c) {
  int repeat_mismatches = 0, thread_mismatches = 0;
  std::string suites;
  for (Suite s : {Suite::kEquivalence, Suite::kOracle, Suite::kBudget, Suite::kTruthfulness, Suite::kLemma1,
                  Suite::kSearch}) {
    SuiteConfig config = SuiteConfig::defaults(s);
    config.threads = 1;
    const auto first = run_suite(config);
    const auto second = run_suite(config);
    config.threads = 4;
    const auto parallel = run_suite(config);
    if (first.csv != second.csv) ++repeat_mismatches;
    if (first.csv != parallel.csv) ++thread_mismatches;
    suites += std::string(suites.empty() ? "" : ",") + suite_name(s);
  }
  c.pass = repeat_mismatches == 0 && thread_mismatches == 0;
  c.detail = "suites=" + suites + " repeat_mismatches=" + std::to_string(repeat_mismatches) +
             " threads_1_vs_4_mismatches=" + std::to_string(thread_mismatches);
}

}  // namespace

int main() {
  std::vector<std::pair<Criterion, void (*)(Criterion&)>> criteria{
      {{1, "social cost equals constant times reversed-order B"}, check_equivalence},
      {{2, "numeric oracle matches closed-form lengths"}, check_oracle},
      {{3, "flow and social cost identities at the optimum"}, check_identities},
      {{4, "budget band and per-player charge bound"}, check_budget},
      {{5, "truthful announcement minimizes player penalty"}, check_truthfulness},
      {{6, "announcement derivatives match finite differences"}, check_derivatives},
      {{7, "direct and reduced order search agree"}, check_search},
      {{8, "seeded runs are byte-identical"}, check_determinism},
  };

  int failures = 0;
  for (auto& [criterion, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    try {
      run(criterion);
    } catch (const std::exception& e) {
      criterion.pass = false;
      criterion.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d: %s (%.2fs)\n  %s\n", criterion.pass ? "PASS" : "FAIL", criterion.id,
                criterion.name.c_str(), seconds, criterion.detail.c_str());
    if (!criterion.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

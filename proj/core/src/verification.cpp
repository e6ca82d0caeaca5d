#include "speedshare/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "speedshare/costs.hpp"
#include "speedshare/game_lab.hpp"
#include "speedshare/instance_io.hpp"
#include "speedshare/mechanism.hpp"
#include "speedshare/order_search.hpp"
#include "speedshare/random_instances.hpp"

namespace speedshare {

namespace {

constexpr struct {
  Suite suite;
  const char* name;
} kSuiteNames[] = {
    {Suite::kEquivalence, "equivalence"}, {Suite::kTruthfulness, "truthfulness"},
    {Suite::kLemma1, "lemma1"},           {Suite::kBudget, "budget"},
    {Suite::kOracle, "oracle"},           {Suite::kSearch, "search"},
};

class CsvWriter {
 public:
  explicit CsvWriter(int precision) : precision_(precision) {}

  void header(std::initializer_list<const char*> columns) {
    bool first = true;
    for (const char* c : columns) {
      out_ << (first ? "" : ",") << c;
      first = false;
    }
    out_ << '\n';
  }

  CsvWriter& operator<<(double v) { return cell(format_number(v, precision_)); }
  CsvWriter& operator<<(std::size_t v) { return cell(std::to_string(v)); }
  CsvWriter& operator<<(bool v) { return cell(v ? "1" : "0"); }

  void end_row() {
    out_ << '\n';
    fresh_ = true;
  }

  std::string str() const { return out_.str(); }

 private:
  CsvWriter& cell(const std::string& text) {
    out_ << (fresh_ ? "" : ",") << text;
    fresh_ = false;
    return *this;
  }

  int precision_;
  bool fresh_ = true;
  std::ostringstream out_;
};

template <class Fn>
void for_each_order(std::size_t n, Fn fn) {
  std::vector<std::size_t> ranks(n);
  std::iota(ranks.begin(), ranks.end(), std::size_t{0});
  do {
    fn(Order::from_ranks(ranks));
  } while (std::next_permutation(ranks.begin(), ranks.end()));
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

struct Context {
  const SuiteConfig& config;
  InstanceSampler sampler;
  CsvWriter csv;
  SuiteReport report;

  explicit Context(const SuiteConfig& c)
      : config(c), sampler(c.seed), csv(c.precision), report() {
    report.suite = c.suite;
    report.seed = c.seed;
    report.trials = c.trials;
  }

  Instance next_instance() { return sampler.instance(config.n_min, config.n_max, config.alpha); }

  void record(bool pass, const Instance& instance, const std::optional<Order>& order) {
    csv << pass;
    csv.end_row();
    ++report.rows;
    if (!pass) {
      ++report.failures;
      report.failing_instances.push_back(
          to_document_text(InstanceDocument{instance, order, instance.penalties()}));
    }
  }
};

void equivalence_suite(Context& ctx) {
  ctx.csv.header({"trial", "n", "alpha", "orders", "max_identity_error", "max_split_error",
                  "max_social_energy_error", "argmin_transfer_error", "pass"});
  for (std::size_t trial = 0; trial < ctx.config.trials; ++trial) {
    const Instance inst = ctx.next_instance();
    const auto p = inst.penalties();
    const double alpha = inst.alpha();
    const double constant = equivalence_constant(alpha);
    double identity = 0.0, split = 0.0, social_energy = 0.0;
    std::size_t orders = 0;
    double best_social = INFINITY, best_b = INFINITY, b_of_best_social = 0.0;
    for_each_order(inst.size(), [&](const Order& order) {
      ++orders;
      const CostBreakdown cost = cost_breakdown(order, inst, p);
      const double b_value = problem_b_value(order.reversed(), inst, p);
      identity = std::max(identity, relative_difference(cost.social, constant * b_value));
      split = std::max(split, relative_difference(cost.flow, (alpha - 1.0) * cost.energy));
      social_energy = std::max(social_energy, relative_difference(cost.social, alpha * cost.energy));
      if (cost.social < best_social) {
        best_social = cost.social;
        b_of_best_social = b_value;
      }
      best_b = std::min(best_b, b_value);
    });
    const double transfer = relative_difference(b_of_best_social, best_b);
    const bool pass = identity <= tolerance::kIdentity && split <= tolerance::kIdentity &&
                      social_energy <= tolerance::kIdentity && transfer <= tolerance::kIdentity;
    ctx.csv << trial << inst.size() << alpha << orders << identity << split << social_energy
            << transfer;
    ctx.record(pass, inst, std::nullopt);
  }
}

void oracle_suite(Context& ctx) {
  ctx.csv.header({"trial", "n", "alpha", "sweeps_converged", "max_relative_error", "pass"});
  for (std::size_t trial = 0; trial < ctx.config.trials; ++trial) {
    const Instance inst = ctx.next_instance();
    const Order order = ctx.sampler.order(inst.size());
    const auto p = inst.penalties();
    const Schedule closed = optimal_lengths(order, inst, p);
    bool converged = true;
    double worst = INFINITY;
    try {
      const Schedule numeric = numeric_oracle_lengths(order, inst, p, tolerance::kOracleConvergence);
      worst = 0.0;
      for (std::size_t j = 0; j < inst.size(); ++j) {
        worst = std::max(worst, relative_difference(numeric.length(j), closed.length(j)));
      }
    } catch (const OracleDidNotConverge&) {
      converged = false;
    }
    const bool pass = converged && worst <= tolerance::kOracleAgreement;
    ctx.csv << trial << inst.size() << inst.alpha() << converged << worst;
    ctx.record(pass, inst, order);
  }
}

void budget_suite(Context& ctx) {
  ctx.csv.header({"trial", "n", "alpha", "budget_ratio", "social_ratio", "min_charge_margin",
                  "decomposition_error", "social_identity_error", "locality_error", "pass"});
  for (std::size_t trial = 0; trial < ctx.config.trials; ++trial) {
    const Instance inst = ctx.next_instance();
    const Order order = ctx.sampler.order(inst.size());
    const auto announced = inst.penalties();
    const double alpha = inst.alpha();
    const MechanismOutcome out = run_mechanism(order, inst, announced);

    double margin = INFINITY;
    for (std::size_t i = 0; i < inst.size(); ++i) {
      margin = std::min(margin, out.charges[i] - out.energy_shares[i]);
    }
    double lhs = 0.0, marginal = 0.0, locality = 0.0;
    for (std::size_t i = 0; i < inst.size(); ++i) {
      lhs += out.charges[i] + announced[i] * out.completion_times[i];
      marginal += opt_energy(order, inst, announced) - opt_energy_excluding(order, inst, announced, i);
      const auto reduced = lengths_excluding(order, inst, announced, i);
      for (std::size_t k = 0; k < inst.size(); ++k) {
        if (order.rank(k) > order.rank(i)) {
          locality = std::max(locality, relative_difference(reduced[k], out.schedule.length(k)));
        }
      }
    }
    const double decomposition = relative_difference(lhs, alpha * marginal);
    const double social_identity = relative_difference(out.social_cost, alpha * out.total_energy);

    bool pass = decomposition <= tolerance::kIdentity && social_identity <= tolerance::kIdentity &&
                locality <= tolerance::kDefinitional;
    if (!out.degenerate) {
      pass = pass && out.violations.empty() && out.budget_ratio >= 1.0 &&
             out.budget_ratio <= alpha + 1.0 && margin > 0.0;
    }
    ctx.csv << trial << inst.size() << alpha << out.budget_ratio << out.social_ratio << margin
            << decomposition << social_identity << locality;
    ctx.record(pass, inst, order);
  }
}

void truthfulness_suite(Context& ctx) {
  ctx.csv.header({"trial", "player", "n", "alpha", "true_penalty", "argmin_announced",
                  "argmin_at_truth", "monotone", "pass"});
  for (std::size_t trial = 0; trial < ctx.config.trials; ++trial) {
    const Instance inst = ctx.next_instance();
    const Order order = ctx.sampler.order(inst.size());
    const auto p = inst.penalties();
    for (std::size_t i = 0; i < inst.size(); ++i) {
      const ScanReport scan = best_response_scan(order, inst, p, i, GridSpec::around(p[i]));
      const bool at_truth = scan.argmin_index == scan.nearest_true_index();
      const bool monotone = scan.monotone_around_true();
      ctx.csv << trial << i << inst.size() << inst.alpha() << p[i] << scan.argmin_value << at_truth
              << monotone;
      ctx.record(at_truth && monotone, inst, order);
    }
  }
}

void lemma1_suite(Context& ctx) {
  ctx.csv.header({"trial", "n", "alpha", "pairs", "max_energy_derivative_error",
                  "max_length_derivative_error", "length_derivatives_negative", "pass"});
  for (std::size_t trial = 0; trial < ctx.config.trials; ++trial) {
    const Instance inst = ctx.next_instance();
    const Order order = ctx.sampler.order(inst.size());
    const auto announced = inst.penalties();
    double energy_error = 0.0, length_error = 0.0;
    bool negative = true;
    const auto pairs = derivative_pairs(order);
    for (const auto& [i, k] : pairs) {
      const auto e = check_energy_derivative(order, inst, announced, i, k,
                                             tolerance::kFiniteDifferenceStep);
      const auto l = check_length_derivative(order, inst, announced, i, k,
                                             tolerance::kFiniteDifferenceStep);
      energy_error = std::max(energy_error, e.relative_error);
      length_error = std::max(length_error, l.relative_error);
      negative = negative && l.analytic < 0.0 && l.finite_difference < 0.0;
    }
    const bool pass = energy_error < tolerance::kDerivative && length_error < tolerance::kDerivative &&
                      negative;
    ctx.csv << trial << inst.size() << inst.alpha() << pairs.size() << energy_error << length_error
            << negative;
    ctx.record(pass, inst, order);
  }
}

void search_suite(Context& ctx) {
  ctx.csv.header({"trial", "n", "alpha", "exhaustive_cost", "problem_b_cost", "relative_gap",
                  "unique_optimum", "orders_agree", "pass"});
  const SearchOptions options{std::max(ctx.config.n_max, std::size_t{1}), ctx.config.threads};
  for (std::size_t trial = 0; trial < ctx.config.trials; ++trial) {
    const Instance inst = ctx.next_instance();
    const SearchResult direct = exhaustive_best_order(inst, options);
    const SearchResult via_b = search_via_problem_b(inst, options);

    // Second-best gap, from a plain enumeration independent of the searchers.
    std::vector<double> costs;
    for_each_order(inst.size(), [&](const Order& order) { costs.push_back(cost_breakdown(order, inst).social); });
    std::sort(costs.begin(), costs.end());
    const bool unique = costs.size() == 1 || relative_difference(costs[1], costs[0]) > tolerance::kIdentity;

    const double gap = relative_difference(direct.best_cost, via_b.best_cost);
    const bool agree = direct.best_order == via_b.best_order;
    const std::uint64_t expected = factorial(inst.size());
    const bool pass = gap <= tolerance::kIdentity && (!unique || agree) &&
                      direct.orders_examined == expected && via_b.orders_examined == expected &&
                      relative_difference(direct.best_cost, costs.front()) <= tolerance::kDefinitional;
    ctx.csv << trial << inst.size() << inst.alpha() << direct.best_cost << via_b.best_cost << gap
            << unique << agree;
    ctx.record(pass, inst, direct.best_order);
  }
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (const auto& entry : kSuiteNames) {
    if (name == entry.name) return entry.suite;
  }
  return std::nullopt;
}

const char* suite_name(Suite suite) {
  for (const auto& entry : kSuiteNames) {
    if (entry.suite == suite) return entry.name;
  }
  return "unknown";
}

SuiteConfig SuiteConfig::defaults(Suite suite) {
  SuiteConfig c;
  c.suite = suite;
  switch (suite) {
    case Suite::kEquivalence: c.trials = 100, c.n_min = 1, c.n_max = 6; break;
    case Suite::kOracle: c.trials = 50, c.n_min = 1, c.n_max = 5; break;
    case Suite::kBudget: c.trials = 200, c.n_min = 2, c.n_max = 8; break;
    case Suite::kTruthfulness: c.trials = 200, c.n_min = 2, c.n_max = 6; break;
    case Suite::kLemma1: c.trials = 50, c.n_min = 1, c.n_max = 6; break;
    case Suite::kSearch: c.trials = 100, c.n_min = 1, c.n_max = 6; break;
  }
  return c;
}

std::string SuiteReport::summary() const {
  std::ostringstream out;
  out << "suite=" << suite_name(suite) << " seed=" << seed << " trials=" << trials
      << " rows=" << rows << " failures=" << failures << (passed() ? " PASS" : " FAIL");
  return out.str();
}

double relative_difference(double a, double b, double floor) {
  const double scale = std::max({std::abs(a), std::abs(b), floor});
  return std::abs(a - b) / scale;
}

SuiteReport run_suite(const SuiteConfig& config) {
  if (config.n_min > config.n_max) throw ValidationError("--n-max must be at least the suite's minimum size");
  if ((config.suite == Suite::kEquivalence || config.suite == Suite::kSearch) &&
      config.n_max > SearchOptions{}.cap) {
    throw CapExceeded(config.n_max, SearchOptions{}.cap);
  }
  Context ctx(config);
  switch (config.suite) {
    case Suite::kEquivalence: equivalence_suite(ctx); break;
    case Suite::kOracle: oracle_suite(ctx); break;
    case Suite::kBudget: budget_suite(ctx); break;
    case Suite::kTruthfulness: truthfulness_suite(ctx); break;
    case Suite::kLemma1: lemma1_suite(ctx); break;
    case Suite::kSearch: search_suite(ctx); break;
  }
  ctx.report.csv = ctx.csv.str();
  return std::move(ctx.report);
}

}  // namespace speedshare

#include "cli.hpp"

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "speedshare/costs.hpp"
#include "speedshare/format.hpp"
#include "speedshare/game_lab.hpp"
#include "speedshare/instance_io.hpp"
#include "speedshare/mechanism.hpp"
#include "speedshare/order_search.hpp"
#include "speedshare/verification.hpp"

namespace speedshare::cli {

namespace {

using nlohmann::ordered_json;

class Emitter {
 public:
  explicit Emitter(int precision) : precision_(precision) {}
  double operator()(double v) const { return round_significant(v, precision_); }
  std::string csv(double v) const { return format_number(v, precision_); }

 private:
  int precision_;
};

ordered_json order_ids(const Instance& instance, const Order& order) {
  ordered_json ids = ordered_json::array();
  for (std::size_t j : order.sequence()) ids.push_back(instance.job(j).id());
  return ids;
}

ordered_json warnings_for(const Instance& instance, std::ostream& err) {
  ordered_json warnings = ordered_json::array();
  if (instance.alpha_outside_physical_range()) {
    const std::string msg = "alpha = " + format_number(instance.alpha(), 17) +
                            " lies outside the physical range [2, 3]";
    err << "warning: " << msg << '\n';
    warnings.push_back(msg);
  }
  return warnings;
}

// Resolution order for a fixed job order: --order flag, then the document.
std::optional<Order> fixed_order(const InstanceDocument& doc, const std::string& flag) {
  if (!flag.empty()) return parse_order_ids(doc.instance, flag);
  return doc.order;
}

GridSpec parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() != 3) throw ValidationError("--grid expects lo:hi:points");
  GridSpec spec;
  spec.geometric = false;
  try {
    std::size_t used = 0;
    spec.lo = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("lo");
    spec.hi = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("hi");
    const long points = std::stol(parts[2], &used);
    if (used != parts[2].size() || points < 1) throw std::invalid_argument("points");
    spec.points = static_cast<std::size_t>(points);
  } catch (const std::exception&) {
    throw ValidationError("--grid expects lo:hi:points with positive numbers, got '" + text + "'");
  }
  return spec;
}

struct SolveFlags {
  std::string file;
  std::string order;
  bool exhaustive = false;
  std::string heuristic;
  std::size_t cap = SearchOptions{}.cap;
  unsigned threads = 0;
};

int cmd_solve(const SolveFlags& flags, const Emitter& emit, std::ostream& out, std::ostream& err) {
  const InstanceDocument doc = read_instance_file(flags.file);
  const Instance& inst = doc.instance;
  const auto p = inst.penalties();

  const SearchResult result = [&] {
    if (!flags.heuristic.empty()) return heuristic_search(inst, flags.heuristic);
    if (!flags.exhaustive) {
      if (auto order = fixed_order(doc, flags.order)) {
        return SearchResult{*order, cost_breakdown(*order, inst, p).social, 1, "fixed"};
      }
    }
    return exhaustive_best_order(inst, SearchOptions{flags.cap, flags.threads});
  }();

  const Schedule schedule = optimal_lengths(result.best_order, inst, p);
  const CostBreakdown cost = evaluate(schedule, inst, p);
  const auto s = speeds(schedule, inst);
  const auto completion = schedule.completion_times();
  const double constant = equivalence_constant(inst.alpha());
  const double b_value = problem_b_value(result.best_order.reversed(), inst, p);

  ordered_json doc_out;
  doc_out["method"] = result.method;
  doc_out["alpha"] = emit(inst.alpha());
  doc_out["order"] = order_ids(inst, result.best_order);
  doc_out["orders_examined"] = result.orders_examined;
  ordered_json jobs = ordered_json::array();
  for (std::size_t j : result.best_order.sequence()) {
    jobs.push_back({{"id", inst.job(j).id()},
                    {"w", emit(inst.job(j).workload())},
                    {"p", emit(p[j])},
                    {"length", emit(schedule.length(j))},
                    {"speed", emit(s[j])},
                    {"completion", emit(completion[j])}});
  }
  doc_out["jobs"] = std::move(jobs);
  doc_out["energy"] = emit(cost.energy);
  doc_out["flow"] = emit(cost.flow);
  doc_out["social"] = emit(cost.social);
  doc_out["equivalence"] = {
      {"constant", emit(constant)},
      {"problem_b_value_of_reverse", emit(b_value)},
      {"constant_times_b", emit(constant * b_value)},
      {"relative_error", emit(relative_difference(cost.social, constant * b_value))},
  };
  doc_out["warnings"] = warnings_for(inst, err);
  out << doc_out.dump(2) << '\n';
  return kOk;
}

int cmd_mechanism(const std::string& file, const std::string& order_flag, const Emitter& emit,
                  std::ostream& out, std::ostream& err) {
  const InstanceDocument doc = read_instance_file(file);
  const Instance& inst = doc.instance;
  const auto order = fixed_order(doc, order_flag);
  if (!order) {
    err << "error: the mechanism is defined for a fixed job order chosen independently of the "
           "announcements; pass --order or put \"order\" in the instance file\n";
    return kInvalidInput;
  }
  const auto truth = inst.penalties();
  const MechanismOutcome outcome = run_mechanism(*order, inst, doc.announced);
  const auto s = speeds(outcome.schedule, inst);

  ordered_json players = ordered_json::array();
  for (std::size_t j : order->sequence()) {
    const double delay = truth[j] * outcome.completion_times[j];
    players.push_back({{"id", inst.job(j).id()},
                       {"true_penalty", emit(truth[j])},
                       {"announced", emit(doc.announced[j])},
                       {"length", emit(outcome.schedule.length(j))},
                       {"speed", emit(s[j])},
                       {"completion", emit(outcome.completion_times[j])},
                       {"charge", emit(outcome.charges[j])},
                       {"energy_share", emit(outcome.energy_shares[j])},
                       {"penalty_total", emit(delay + outcome.charges[j])}});
  }
  ordered_json doc_out;
  doc_out["alpha"] = emit(inst.alpha());
  doc_out["order"] = order_ids(inst, *order);
  doc_out["players"] = std::move(players);
  doc_out["total_energy"] = emit(outcome.total_energy);
  doc_out["total_charges"] = emit(outcome.total_charges());
  doc_out["social_cost"] = emit(outcome.social_cost);
  doc_out["budget_ratio"] = emit(outcome.budget_ratio);
  doc_out["charges_to_social_cost"] = emit(outcome.social_ratio);
  doc_out["budget_band"] = {emit(1.0), emit(inst.alpha() + 1.0)};
  doc_out["degenerate"] = outcome.degenerate;
  doc_out["violations"] = outcome.violations;
  doc_out["warnings"] = warnings_for(inst, err);
  out << doc_out.dump(2) << '\n';

  for (const auto& v : outcome.violations) err << "violation: " << v << '\n';
  return outcome.violations.empty() ? kOk : kCheckFailed;
}

struct VerifyFlags {
  std::string suite;
  std::optional<std::size_t> trials;
  std::uint64_t seed = 7;
  std::optional<std::size_t> n_max;
  std::optional<double> alpha;
  unsigned threads = 0;
};

int cmd_verify(const VerifyFlags& flags, int precision, std::ostream& out, std::ostream& err) {
  const auto suite = parse_suite(flags.suite);
  if (!suite) {
    err << "error: unknown suite '" << flags.suite
        << "' (expected equivalence, truthfulness, lemma1, budget, oracle or search)\n";
    return kInvalidInput;
  }
  SuiteConfig config = SuiteConfig::defaults(*suite);
  if (flags.trials) config.trials = *flags.trials;
  if (flags.n_max) config.n_max = *flags.n_max;
  if (flags.alpha) {
    if (!(*flags.alpha > 1.0)) throw ValidationError("--alpha must be greater than 1");
    config.alpha = flags.alpha;
  }
  config.seed = flags.seed;
  config.threads = flags.threads;
  config.precision = precision;

  const SuiteReport report = run_suite(config);
  out << report.csv;
  for (const auto& doc : report.failing_instances) err << "failing instance:\n" << doc;
  err << report.summary() << '\n';
  return report.passed() ? kOk : kCheckFailed;
}

int cmd_scan(const std::string& file, const std::string& player_id, const std::string& grid_text,
             const std::string& order_flag, const Emitter& emit, std::ostream& out,
             std::ostream& err) {
  const InstanceDocument doc = read_instance_file(file);
  const Instance& inst = doc.instance;
  const std::size_t player = inst.index_of(player_id);
  const Order order = fixed_order(doc, order_flag).value_or(Order::identity(inst.size()));
  const auto truth = inst.penalties();
  const GridSpec grid = grid_text.empty() ? GridSpec::around(truth[player]) : parse_grid(grid_text);

  const ScanReport report =
      best_response_scan(order, inst, truth, player, grid, std::span<const double>(doc.announced));
  if (!report.grid_contains_true) {
    err << "warning: grid does not contain the true penalty " << format_number(truth[player], 17)
        << " of player '" << player_id << "'\n";
  }
  warnings_for(inst, err);
  out << "announced,penalty\n";
  for (std::size_t k = 0; k < report.grid.size(); ++k) {
    out << emit.csv(report.grid[k]) << ',' << emit.csv(report.penalties[k]) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Speed-scaling schedules and a truthful energy cost-sharing mechanism"};
  app.require_subcommand(1);
  app.fallthrough();
  int precision = kDefaultPrecision;
  app.add_option("--precision", precision, "Significant digits for floating-point output")
      ->check(CLI::Range(1, 17));

  SolveFlags solve;
  auto* solve_cmd = app.add_subcommand("solve", "Optimal lengths and costs for an order");
  solve_cmd->add_option("file", solve.file, "Instance document")->required();
  auto* order_opt = solve_cmd->add_option("--order", solve.order, "Comma-separated job ids, first to last");
  auto* exhaustive_opt = solve_cmd->add_flag("--exhaustive", solve.exhaustive, "Search all orders");
  auto* heuristic_opt = solve_cmd->add_option(
      "--heuristic", solve.heuristic,
      "descending-penalty | descending-density | ascending-workload");
  order_opt->excludes(exhaustive_opt)->excludes(heuristic_opt);
  exhaustive_opt->excludes(heuristic_opt);
  solve_cmd->add_option("--cap", solve.cap, "Largest job count for exhaustive search");
  solve_cmd->add_option("--threads", solve.threads, "Enumeration threads (0 = all cores)");

  std::string mech_file, mech_order;
  auto* mech_cmd = app.add_subcommand("mechanism", "Charges and budget accounting for a fixed order");
  mech_cmd->add_option("file", mech_file, "Instance document")->required();
  mech_cmd->add_option("--order", mech_order, "Comma-separated job ids, first to last");

  VerifyFlags verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a seeded property suite, CSV on stdout");
  verify_cmd->add_option("--suite", verify.suite, "equivalence|truthfulness|lemma1|budget|oracle|search")
      ->required();
  verify_cmd->add_option("--trials", verify.trials, "Random instances to test");
  verify_cmd->add_option("--seed", verify.seed, "PRNG seed");
  verify_cmd->add_option("--n-max", verify.n_max, "Largest instance size");
  verify_cmd->add_option("--alpha", verify.alpha, "Fix alpha instead of drawing from {2, 2.5, 3}");
  verify_cmd->add_option("--threads", verify.threads, "Enumeration threads for the search suite");

  std::string scan_file, scan_player, scan_grid, scan_order;
  auto* scan_cmd = app.add_subcommand("scan", "Player penalty across announcements, CSV on stdout");
  scan_cmd->add_option("file", scan_file, "Instance document")->required();
  scan_cmd->add_option("--player", scan_player, "Job id of the scanning player")->required();
  scan_cmd->add_option("--grid", scan_grid, "lo:hi:points, evenly spaced (default: 41 geometric points on [p/4, 4p])");
  scan_cmd->add_option("--order", scan_order, "Comma-separated job ids, first to last");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  const Emitter emit(precision);
  try {
    if (*solve_cmd) return cmd_solve(solve, emit, out, err);
    if (*mech_cmd) return cmd_mechanism(mech_file, mech_order, emit, out, err);
    if (*verify_cmd) return cmd_verify(verify, precision, out, err);
    if (*scan_cmd) return cmd_scan(scan_file, scan_player, scan_grid, scan_order, emit, out, err);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const OracleDidNotConverge& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kInvalidInput;
}

}  // namespace speedshare::cli

#include "speedshare/order_search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include "speedshare/costs.hpp"

namespace speedshare {

CapExceeded::CapExceeded(std::size_t n, std::size_t cap)
    : std::runtime_error("exhaustive search refused: " + std::to_string(n) +
                         " jobs exceed the cap of " + std::to_string(cap) +
                         " (raise it with --cap)"),
      cap_(cap) {}

namespace {

struct Best {
  double cost = INFINITY;
  std::vector<std::size_t> key;  // rank vector of the returned order
  std::uint64_t examined = 0;
  bool valid = false;
};

bool better(double cost, const std::vector<std::size_t>& key, const Best& best) {
  if (!best.valid) return true;
  if (cost != best.cost) return cost < best.cost;
  return key < best.key;
}

void merge_into(Best& acc, const Best& other) {
  acc.examined += other.examined;
  if (other.valid && better(other.cost, other.key, acc)) {
    acc.cost = other.cost;
    acc.key = other.key;
    acc.valid = true;
  }
}

// Mirrors cost_breakdown's arithmetic exactly so that the reported cost
// and the enumerated cost are bit-identical.
class SocialCostEvaluator {
 public:
  explicit SocialCostEvaluator(const Instance& instance)
      : alpha_(instance.alpha()),
        w_(instance.workloads()),
        p_(instance.penalties()),
        seq_(w_.size()),
        len_(w_.size()) {}

  double operator()(const std::vector<std::size_t>& ranks) {
    const std::size_t n = ranks.size();
    for (std::size_t j = 0; j < n; ++j) seq_[ranks[j]] = j;
    double acc = 0.0;
    for (std::size_t pos = n; pos-- > 0;) {
      const std::size_t j = seq_[pos];
      acc += p_[j];
      len_[j] = w_[j] * std::pow((alpha_ - 1.0) / acc, 1.0 / alpha_);
    }
    double e = 0.0;
    double f = 0.0;
    double t = 0.0;
    for (std::size_t j : seq_) {
      e += std::pow(w_[j], alpha_) * std::pow(len_[j], 1.0 - alpha_);
    }
    for (std::size_t j : seq_) {
      t += len_[j];
      f += p_[j] * t;
    }
    return e + f;
  }

 private:
  double alpha_;
  std::vector<double> w_, p_;
  std::vector<std::size_t> seq_;
  std::vector<double> len_;
};

class ProblemBEvaluator {
 public:
  explicit ProblemBEvaluator(const Instance& instance)
      : exponent_((instance.alpha() - 1.0) / instance.alpha()),
        w_(instance.workloads()),
        p_(instance.penalties()),
        seq_(w_.size()) {}

  double operator()(const std::vector<std::size_t>& ranks) {
    for (std::size_t j = 0; j < ranks.size(); ++j) seq_[ranks[j]] = j;
    double t = 0.0;
    double total = 0.0;
    for (std::size_t j : seq_) {
      t += p_[j];
      total += w_[j] * std::pow(t, exponent_);
    }
    return total;
  }

 private:
  double exponent_;
  std::vector<double> w_, p_;
  std::vector<std::size_t> seq_;
};

// Enumerates every rank vector whose first entry (the rank of job 0) is
// `head`, in lexicographic order.
template <class Evaluator>
Best scan_partition(std::size_t n, std::size_t head, Evaluator eval, bool reverse_key) {
  Best best;
  std::vector<std::size_t> ranks;
  ranks.reserve(n);
  ranks.push_back(head);
  for (std::size_t r = 0; r < n; ++r) {
    if (r != head) ranks.push_back(r);
  }
  std::vector<std::size_t> key(n);
  do {
    const double cost = eval(ranks);
    ++best.examined;
    for (std::size_t j = 0; j < n; ++j) key[j] = reverse_key ? n - 1 - ranks[j] : ranks[j];
    if (better(cost, key, best)) {
      best.cost = cost;
      best.key = key;
      best.valid = true;
    }
  } while (std::next_permutation(ranks.begin() + 1, ranks.end()));
  return best;
}

template <class Evaluator>
Best enumerate(const Instance& instance, const SearchOptions& options, bool reverse_key) {
  const std::size_t n = instance.size();
  if (n > options.cap) throw CapExceeded(n, options.cap);

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));

  std::vector<Best> partials(n);
  if (threads == 1) {
    for (std::size_t head = 0; head < n; ++head) {
      partials[head] = scan_partition(n, head, Evaluator(instance), reverse_key);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t head = next++; head < n; head = next++) {
          partials[head] = scan_partition(n, head, Evaluator(instance), reverse_key);
        }
      });
    }
  }

  Best result;
  for (const auto& part : partials) merge_into(result, part);
  return result;
}

}  // namespace

SearchResult exhaustive_best_order(const Instance& instance, const SearchOptions& options) {
  const Best best = enumerate<SocialCostEvaluator>(instance, options, false);
  Order order = Order::from_ranks(best.key);
  const double cost = cost_breakdown(order, instance).social;
  return SearchResult{std::move(order), cost, best.examined, "exhaustive"};
}

SearchResult search_via_problem_b(const Instance& instance, const SearchOptions& options) {
  const Best best = enumerate<ProblemBEvaluator>(instance, options, true);
  return SearchResult{Order::from_ranks(best.key), equivalence_constant(instance.alpha()) * best.cost,
                      best.examined, "exhaustive-problem-b"};
}

std::vector<std::pair<std::string, Order>> heuristic_orders(const Instance& instance) {
  const std::size_t n = instance.size();
  auto sorted_by = [&](auto less) {
    std::vector<std::size_t> seq(n);
    std::iota(seq.begin(), seq.end(), std::size_t{0});
    std::stable_sort(seq.begin(), seq.end(), less);
    return Order::from_sequence(seq);
  };
  const auto& jobs = instance.jobs();
  std::vector<std::pair<std::string, Order>> out;
  out.emplace_back(kHeuristicDescendingPenalty, sorted_by([&](std::size_t a, std::size_t b) {
                     return jobs[a].penalty() > jobs[b].penalty();
                   }));
  out.emplace_back(kHeuristicDescendingDensity, sorted_by([&](std::size_t a, std::size_t b) {
                     return jobs[a].penalty() / jobs[a].workload() >
                            jobs[b].penalty() / jobs[b].workload();
                   }));
  out.emplace_back(kHeuristicAscendingWorkload, sorted_by([&](std::size_t a, std::size_t b) {
                     return jobs[a].workload() < jobs[b].workload();
                   }));
  return out;
}

SearchResult heuristic_search(const Instance& instance, const std::string& name) {
  for (auto& [candidate, order] : heuristic_orders(instance)) {
    if (candidate == name) {
      const double cost = cost_breakdown(order, instance).social;
      return SearchResult{std::move(order), cost, 1, candidate};
    }
  }
  throw ValidationError("unknown heuristic '" + name + "' (expected " +
                        kHeuristicDescendingPenalty + ", " + kHeuristicDescendingDensity + " or " +
                        kHeuristicAscendingWorkload + ")");
}

}  // namespace speedshare

#ifndef SPEEDSHARE_ORDER_SEARCH_HPP
#define SPEEDSHARE_ORDER_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "speedshare/types.hpp"

namespace speedshare {

/// Raised when an exhaustive search is asked to enumerate more jobs than
/// the configured cap allows.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t n, std::size_t cap);
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

struct SearchOptions {
  std::size_t cap = 10;
  /// Worker threads for enumeration; 0 picks std::thread::hardware_concurrency.
  unsigned threads = 0;
};

struct SearchResult {
  Order best_order;
  double best_cost = 0.0;
  std::uint64_t orders_examined = 0;
  std::string method;
};

/// Minimizes social cost over all n! orders. Ties go to the
/// lexicographically smallest rank vector, independent of thread count.
SearchResult exhaustive_best_order(const Instance& instance, const SearchOptions& options = {});

/// Minimizes the unit-speed problem over all orders sigma and returns the
/// reverse of the best one, costed as equivalence_constant * B. Ties are
/// broken on the returned (reversed) order with the same rule as
/// exhaustive_best_order.
SearchResult search_via_problem_b(const Instance& instance, const SearchOptions& options = {});

inline constexpr const char* kHeuristicDescendingPenalty = "descending-penalty";
inline constexpr const char* kHeuristicDescendingDensity = "descending-density";
inline constexpr const char* kHeuristicAscendingWorkload = "ascending-workload";

/// Candidate orders with no optimality claim: descending p, descending p/w,
/// ascending w. Equal keys keep job index order.
std::vector<std::pair<std::string, Order>> heuristic_orders(const Instance& instance);

/// Looks up one heuristic by name and costs it. Throws ValidationError for
/// unknown names.
SearchResult heuristic_search(const Instance& instance, const std::string& name);

}  // namespace speedshare

#endif  // SPEEDSHARE_ORDER_SEARCH_HPP

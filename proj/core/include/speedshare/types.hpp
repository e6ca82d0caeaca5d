#ifndef SPEEDSHARE_TYPES_HPP
#define SPEEDSHARE_TYPES_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace speedshare {

/// Thrown for any input that violates a domain invariant (nonpositive
/// workloads or penalties, alpha <= 1, malformed permutations, size
/// mismatches, unknown player ids).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A job submitted by one player: a workload (instructions) and a delay
/// penalty (money per unit of completion time). Both strictly positive.
class Job {
 public:
  Job(std::string id, double workload, double penalty);

  const std::string& id() const { return id_; }
  double workload() const { return workload_; }
  double penalty() const { return penalty_; }

  bool operator==(const Job&) const = default;

 private:
  std::string id_;
  double workload_;
  double penalty_;
};

/// Game input: the power exponent alpha and the list of jobs. Job index i
/// (0-based) doubles as the player index everywhere in the library.
class Instance {
 public:
  Instance(double alpha, std::vector<Job> jobs);

  double alpha() const { return alpha_; }
  std::size_t size() const { return jobs_.size(); }
  const std::vector<Job>& jobs() const { return jobs_; }
  const Job& job(std::size_t i) const { return jobs_.at(i); }

  std::vector<double> workloads() const;
  std::vector<double> penalties() const;

  /// Index of the job with the given id; throws ValidationError if absent.
  std::size_t index_of(const std::string& id) const;

  /// True when alpha lies outside the physical range [2, 3]. Such
  /// instances are accepted; callers surface the flag as a warning.
  bool alpha_outside_physical_range() const { return alpha_ < 2.0 || alpha_ > 3.0; }

  /// Same instance with job `i` removed.
  Instance without(std::size_t i) const;

  /// Same jobs and alpha, penalties replaced.
  Instance with_penalties(std::span<const double> penalties) const;

  bool operator==(const Instance&) const = default;

 private:
  double alpha_;
  std::vector<Job> jobs_;
};

/// A job order stored as a rank vector: rank(j) is the 0-based position at
/// which job j runs (rank 0 runs first).
class Order {
 public:
  /// Validates that `ranks` is a permutation of {0..n-1}.
  static Order from_ranks(std::vector<std::size_t> ranks);
  /// Builds the order that executes `sequence[0]` first, `sequence[1]`
  /// second, and so on.
  static Order from_sequence(std::span<const std::size_t> sequence);
  static Order identity(std::size_t n);

  std::size_t size() const { return ranks_.size(); }
  std::size_t rank(std::size_t job) const { return ranks_.at(job); }
  const std::vector<std::size_t>& ranks() const { return ranks_; }

  /// Jobs in execution order (the inverse permutation).
  std::vector<std::size_t> sequence() const;

  /// The reverse order, rank'(j) = n-1-rank(j).
  Order reversed() const;

  /// Order on the n-1 remaining jobs with `job` deleted, keeping the
  /// relative sequence. Job indices above `job` shift down by one.
  Order without(std::size_t job) const;

  bool operator==(const Order&) const = default;
  auto operator<=>(const Order&) const = default;

 private:
  explicit Order(std::vector<std::size_t> ranks) : ranks_(std::move(ranks)) {}
  std::vector<std::size_t> ranks_;
};

/// An order plus one strictly positive execution length per job. The
/// machine starts at time 0 and never idles.
class Schedule {
 public:
  Schedule(Order order, std::vector<double> lengths);

  const Order& order() const { return order_; }
  std::size_t size() const { return lengths_.size(); }
  const std::vector<double>& lengths() const { return lengths_; }
  double length(std::size_t job) const { return lengths_.at(job); }

  /// C_i: sum of lengths of all jobs ranked at or before job i.
  std::vector<double> completion_times() const;

 private:
  Order order_;
  std::vector<double> lengths_;
};

struct CostBreakdown {
  double energy = 0.0;
  double flow = 0.0;
  double social = 0.0;

  static CostBreakdown of(double energy, double flow) { return {energy, flow, energy + flow}; }
};

}  // namespace speedshare

#endif  // SPEEDSHARE_TYPES_HPP

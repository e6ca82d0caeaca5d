#include "speedshare/types.hpp"

#include <cmath>
#include <unordered_set>

namespace speedshare {

namespace {

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

Job::Job(std::string id, double workload, double penalty)
    : id_(std::move(id)), workload_(workload), penalty_(penalty) {
  if (!positive_finite(workload_)) {
    throw ValidationError("job '" + id_ + "': workload must be a positive finite number");
  }
  if (!positive_finite(penalty_)) {
    throw ValidationError("job '" + id_ + "': penalty must be a positive finite number");
  }
}

Instance::Instance(double alpha, std::vector<Job> jobs) : alpha_(alpha), jobs_(std::move(jobs)) {
  if (!std::isfinite(alpha_) || alpha_ <= 1.0) {
    throw ValidationError("alpha must be a finite number greater than 1");
  }
  if (jobs_.empty()) {
    throw ValidationError("an instance needs at least one job");
  }
  std::unordered_set<std::string> seen;
  for (const auto& job : jobs_) {
    if (!seen.insert(job.id()).second) {
      throw ValidationError("duplicate job id '" + job.id() + "'");
    }
  }
}

std::vector<double> Instance::workloads() const {
  std::vector<double> out;
  out.reserve(jobs_.size());
  for (const auto& job : jobs_) out.push_back(job.workload());
  return out;
}

std::vector<double> Instance::penalties() const {
  std::vector<double> out;
  out.reserve(jobs_.size());
  for (const auto& job : jobs_) out.push_back(job.penalty());
  return out;
}

std::size_t Instance::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < jobs_.size(); ++i) {
    if (jobs_[i].id() == id) return i;
  }
  throw ValidationError("unknown job id '" + id + "'");
}

Instance Instance::without(std::size_t i) const {
  if (i >= jobs_.size()) throw ValidationError("job index out of range");
  std::vector<Job> rest;
  rest.reserve(jobs_.size() - 1);
  for (std::size_t j = 0; j < jobs_.size(); ++j) {
    if (j != i) rest.push_back(jobs_[j]);
  }
  return Instance(alpha_, std::move(rest));
}

Instance Instance::with_penalties(std::span<const double> penalties) const {
  if (penalties.size() != jobs_.size()) {
    throw ValidationError("penalty vector size does not match the number of jobs");
  }
  std::vector<Job> jobs;
  jobs.reserve(jobs_.size());
  for (std::size_t i = 0; i < jobs_.size(); ++i) {
    jobs.emplace_back(jobs_[i].id(), jobs_[i].workload(), penalties[i]);
  }
  return Instance(alpha_, std::move(jobs));
}

Order Order::from_ranks(std::vector<std::size_t> ranks) {
  std::vector<bool> used(ranks.size(), false);
  for (std::size_t r : ranks) {
    if (r >= ranks.size() || used[r]) {
      throw ValidationError("rank vector is not a permutation");
    }
    used[r] = true;
  }
  return Order(std::move(ranks));
}

Order Order::from_sequence(std::span<const std::size_t> sequence) {
  std::vector<std::size_t> ranks(sequence.size(), sequence.size());
  for (std::size_t pos = 0; pos < sequence.size(); ++pos) {
    const std::size_t job = sequence[pos];
    if (job >= sequence.size() || ranks[job] != sequence.size()) {
      throw ValidationError("job sequence is not a permutation");
    }
    ranks[job] = pos;
  }
  return Order(std::move(ranks));
}

Order Order::identity(std::size_t n) {
  std::vector<std::size_t> ranks(n);
  for (std::size_t i = 0; i < n; ++i) ranks[i] = i;
  return Order(std::move(ranks));
}

std::vector<std::size_t> Order::sequence() const {
  std::vector<std::size_t> seq(ranks_.size());
  for (std::size_t j = 0; j < ranks_.size(); ++j) seq[ranks_[j]] = j;
  return seq;
}

Order Order::reversed() const {
  const std::size_t n = ranks_.size();
  std::vector<std::size_t> ranks(n);
  for (std::size_t j = 0; j < n; ++j) ranks[j] = n - 1 - ranks_[j];
  return Order(std::move(ranks));
}

Order Order::without(std::size_t job) const {
  if (job >= ranks_.size()) throw ValidationError("job index out of range");
  const std::size_t removed = ranks_[job];
  std::vector<std::size_t> ranks;
  ranks.reserve(ranks_.size() - 1);
  for (std::size_t j = 0; j < ranks_.size(); ++j) {
    if (j == job) continue;
    ranks.push_back(ranks_[j] > removed ? ranks_[j] - 1 : ranks_[j]);
  }
  return Order(std::move(ranks));
}

Schedule::Schedule(Order order, std::vector<double> lengths)
    : order_(std::move(order)), lengths_(std::move(lengths)) {
  if (order_.size() != lengths_.size()) {
    throw ValidationError("schedule order and length vector differ in size");
  }
  for (double l : lengths_) {
    if (!positive_finite(l)) throw ValidationError("execution lengths must be positive and finite");
  }
}

std::vector<double> Schedule::completion_times() const {
  std::vector<double> completion(lengths_.size());
  double t = 0.0;
  for (std::size_t job : order_.sequence()) {
    t += lengths_[job];
    completion[job] = t;
  }
  return completion;
}

}  // namespace speedshare

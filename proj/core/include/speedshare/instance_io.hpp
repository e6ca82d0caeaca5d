#ifndef SPEEDSHARE_INSTANCE_IO_HPP
#define SPEEDSHARE_INSTANCE_IO_HPP

// Instance documents are JSON objects:
//
//   {
//     "alpha": 2.0,
//     "jobs": [ {"id": "a", "w": 1.0, "p": 1.0}, ... ],
//     "order": ["a", "b"],          // optional, execution sequence
//     "announced": {"a": 0.5}       // optional, defaults to each job's p
//   }

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "speedshare/types.hpp"

namespace speedshare {

/// Malformed document text or wrong field types.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InstanceDocument {
  Instance instance;
  std::optional<Order> order;
  /// One entry per job; equals the job's p where the document is silent.
  std::vector<double> announced;

  bool operator==(const InstanceDocument&) const = default;
};

/// Throws ParseError for syntax or type problems and ValidationError for
/// documents that parse but describe an invalid instance.
InstanceDocument parse_instance_document(std::string_view text);
InstanceDocument read_instance_file(const std::string& path);

/// Numbers are written with round-trip precision; announcements equal to
/// the true penalty are omitted.
std::string to_document_text(const InstanceDocument& document);
std::string to_document_text(const Instance& instance);

/// Resolves a comma-separated list of job ids (execution sequence).
Order parse_order_ids(const Instance& instance, std::string_view ids);

}  // namespace speedshare

#endif  // SPEEDSHARE_INSTANCE_IO_HPP

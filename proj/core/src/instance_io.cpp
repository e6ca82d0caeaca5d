#include "speedshare/instance_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace speedshare {

using nlohmann::json;

namespace {

double number_field(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing field '" + key + "'");
  if (!it->is_number()) throw ParseError(where + ": field '" + key + "' must be a number");
  return it->get<double>();
}

Order order_from_ids(const Instance& instance, const std::vector<std::string>& ids) {
  if (ids.size() != instance.size()) {
    throw ValidationError("order must list every job exactly once (" +
                          std::to_string(instance.size()) + " ids expected, got " +
                          std::to_string(ids.size()) + ")");
  }
  std::vector<std::size_t> sequence;
  sequence.reserve(ids.size());
  for (const auto& id : ids) sequence.push_back(instance.index_of(id));
  try {
    return Order::from_sequence(sequence);
  } catch (const ValidationError&) {
    throw ValidationError("order lists a job more than once");
  }
}

}  // namespace

InstanceDocument parse_instance_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance document must be a JSON object");

  const double alpha = number_field(doc, "alpha", "instance");
  const auto jobs_it = doc.find("jobs");
  if (jobs_it == doc.end() || !jobs_it->is_array()) {
    throw ParseError("instance: field 'jobs' must be an array");
  }
  std::vector<Job> jobs;
  for (std::size_t k = 0; k < jobs_it->size(); ++k) {
    const json& entry = (*jobs_it)[k];
    const std::string where = "jobs[" + std::to_string(k) + "]";
    if (!entry.is_object()) throw ParseError(where + " must be an object");
    const auto id = entry.find("id");
    if (id == entry.end() || !id->is_string()) throw ParseError(where + ": field 'id' must be a string");
    jobs.emplace_back(id->get<std::string>(), number_field(entry, "w", where),
                      number_field(entry, "p", where));
  }
  Instance instance(alpha, std::move(jobs));

  std::optional<Order> order;
  if (const auto it = doc.find("order"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("instance: field 'order' must be an array of ids");
    std::vector<std::string> ids;
    for (const auto& id : *it) {
      if (!id.is_string()) throw ParseError("instance: 'order' entries must be strings");
      ids.push_back(id.get<std::string>());
    }
    order = order_from_ids(instance, ids);
  }

  std::vector<double> announced = instance.penalties();
  if (const auto it = doc.find("announced"); it != doc.end()) {
    if (!it->is_object()) throw ParseError("instance: field 'announced' must be an object");
    for (const auto& [id, value] : it->items()) {
      if (!value.is_number()) throw ParseError("announced['" + id + "'] must be a number");
      const double v = value.get<double>();
      if (!std::isfinite(v) || v <= 0.0) {
        throw ValidationError("announced penalty of '" + id + "' must be positive");
      }
      announced[instance.index_of(id)] = v;
    }
  }
  return InstanceDocument{std::move(instance), std::move(order), std::move(announced)};
}

InstanceDocument read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_document(buf.str());
}

std::string to_document_text(const InstanceDocument& document) {
  const Instance& instance = document.instance;
  json doc;
  doc["alpha"] = instance.alpha();
  json jobs = json::array();
  for (const auto& job : instance.jobs()) {
    jobs.push_back({{"id", job.id()}, {"w", job.workload()}, {"p", job.penalty()}});
  }
  doc["jobs"] = std::move(jobs);
  if (document.order) {
    json ids = json::array();
    for (std::size_t j : document.order->sequence()) ids.push_back(instance.job(j).id());
    doc["order"] = std::move(ids);
  }
  json announced = json::object();
  for (std::size_t j = 0; j < instance.size() && j < document.announced.size(); ++j) {
    if (document.announced[j] != instance.job(j).penalty()) {
      announced[instance.job(j).id()] = document.announced[j];
    }
  }
  if (!announced.empty()) doc["announced"] = std::move(announced);
  return doc.dump(2) + "\n";
}

std::string to_document_text(const Instance& instance) {
  return to_document_text(InstanceDocument{instance, std::nullopt, instance.penalties()});
}

Order parse_order_ids(const Instance& instance, std::string_view ids) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : ids) {
    if (c == ',') {
      parts.push_back(current);
      current.clear();
    } else if (c != ' ') {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return order_from_ids(instance, parts);
}

}  // namespace speedshare

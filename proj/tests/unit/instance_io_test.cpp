#include "speedshare/instance_io.hpp"

#include <gtest/gtest.h>

#include "speedshare/random_instances.hpp"

namespace speedshare {
namespace {

TEST(InstanceDocument, ParsesAllFields) {
  const auto doc = parse_instance_document(R"({
    "alpha": 2.5,
    "jobs": [{"id": "a", "w": 1.5, "p": 2}, {"id": "b", "w": 3, "p": 0.25}],
    "order": ["b", "a"],
    "announced": {"a": 4}
  })");
  EXPECT_EQ(doc.instance.alpha(), 2.5);
  EXPECT_EQ(doc.instance.job(1).id(), "b");
  EXPECT_EQ(doc.instance.job(1).penalty(), 0.25);
  ASSERT_TRUE(doc.order.has_value());
  EXPECT_EQ(doc.order->sequence(), (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(doc.announced, (std::vector{4.0, 0.25}));
}

TEST(InstanceDocument, OptionalFieldsDefault) {
  const auto doc = parse_instance_document(R"({"alpha": 2, "jobs": [{"id": "x", "w": 1, "p": 3}]})");
  EXPECT_FALSE(doc.order.has_value());
  EXPECT_EQ(doc.announced, std::vector{3.0});
}

TEST(InstanceDocument, SyntaxAndTypeErrorsAreParseErrors) {
  EXPECT_THROW(parse_instance_document("{"), ParseError);
  EXPECT_THROW(parse_instance_document("[]"), ParseError);
  EXPECT_THROW(parse_instance_document(R"({"jobs": []})"), ParseError);
  EXPECT_THROW(parse_instance_document(R"({"alpha": "2", "jobs": []})"), ParseError);
  EXPECT_THROW(parse_instance_document(R"({"alpha": 2, "jobs": [{"id": 1, "w": 1, "p": 1}]})"), ParseError);
  EXPECT_THROW(parse_instance_document(R"({"alpha": 2, "jobs": [{"id": "a", "p": 1}]})"), ParseError);
  EXPECT_THROW(read_instance_file("/nonexistent/instance.json"), ParseError);
}

TEST(InstanceDocument, DomainErrorsAreValidationErrors) {
  EXPECT_THROW(parse_instance_document(R"({"alpha": 1, "jobs": [{"id": "a", "w": 1, "p": 1}]})"),
               ValidationError);
  EXPECT_THROW(parse_instance_document(R"({"alpha": 2, "jobs": []})"), ValidationError);
  EXPECT_THROW(parse_instance_document(R"({"alpha": 2, "jobs": [{"id": "a", "w": 0, "p": 1}]})"),
               ValidationError);
  const char* two = R"({"alpha": 2, "jobs": [{"id": "a", "w": 1, "p": 1}, {"id": "b", "w": 1, "p": 1}], )";
  EXPECT_THROW(parse_instance_document(std::string(two) + R"("order": ["a"]})"), ValidationError);
  EXPECT_THROW(parse_instance_document(std::string(two) + R"("order": ["a", "a"]})"), ValidationError);
  EXPECT_THROW(parse_instance_document(std::string(two) + R"("order": ["a", "c"]})"), ValidationError);
  EXPECT_THROW(parse_instance_document(std::string(two) + R"("announced": {"c": 1}})"), ValidationError);
  EXPECT_THROW(parse_instance_document(std::string(two) + R"("announced": {"a": -1}})"), ValidationError);
}

TEST(InstanceDocument, RoundTripsFieldForField) {
  InstanceSampler sampler(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = sampler.instance(1, 9, sampler.uniform(1.01, 5.0));
    std::optional<Order> order;
    if (sampler.unit() < 0.5) order = sampler.order(inst.size());
    auto announced = inst.penalties();
    for (double& v : announced) {
      if (sampler.unit() < 0.3) v = sampler.uniform(0.01, 50.0);
    }
    const InstanceDocument doc{inst, order, announced};
    EXPECT_EQ(parse_instance_document(to_document_text(doc)), doc);
  }
}

TEST(OrderIds, ParsesCommaList) {
  const auto doc = parse_instance_document(
      R"({"alpha": 2, "jobs": [{"id": "a", "w": 1, "p": 1}, {"id": "b", "w": 1, "p": 1}, {"id": "c", "w": 1, "p": 1}]})");
  EXPECT_EQ(parse_order_ids(doc.instance, "c, a,b").sequence(), (std::vector<std::size_t>{2, 0, 1}));
  EXPECT_THROW(parse_order_ids(doc.instance, "a,b"), ValidationError);
  EXPECT_THROW(parse_order_ids(doc.instance, "a,b,b"), ValidationError);
}

}  // namespace
}  // namespace speedshare

#include "latticeq/verify.hpp"

#include <set>

#include <gtest/gtest.h>
#include <json.hpp>

namespace latticeq {
namespace {

TEST(Verify, DegenerateSweep) {
  const auto report = run_verification({.n_max = 0});
  EXPECT_TRUE(report.ok());
  // One cell (n=0, l=0) times six orders times five checks.
  EXPECT_EQ(report.checks.size(), 30u);
}

TEST(Verify, SmallSweepPasses) {
  const auto report = run_verification({.n_max = 3});
  EXPECT_TRUE(report.ok()) << summary(report);
  EXPECT_EQ(report.failed(), 0u);
}

TEST(Verify, ScopesSelectChecks) {
  for (auto [scope, names] :
       {std::pair{VerifyScope::Theorem, std::set<std::string>{"theorem", "macmahon"}},
        std::pair{VerifyScope::Lemma, std::set<std::string>{"lemma", "lemma-closed"}},
        std::pair{VerifyScope::Bijection, std::set<std::string>{"bijection"}}}) {
    const auto report = run_verification({.n_max = 2, .scope = scope});
    std::set<std::string> seen;
    for (const auto& c : report.checks) seen.insert(c.name);
    EXPECT_EQ(seen, names);
    EXPECT_TRUE(report.ok());
  }
  EXPECT_EQ(parse_scope("all"), VerifyScope::All);
  EXPECT_THROW(parse_scope("everything"), std::invalid_argument);
}

TEST(Verify, NegativeControlFails) {
  const auto report = run_verification(
      {.n_max = 4, .scope = VerifyScope::Bijection, .phi_variant = PhiVariant::SwappedSubcases});
  EXPECT_FALSE(report.ok());
  for (const auto& c : report.checks) {
    // The mutation only touches the block-rewrite orders.
    if (phi_case(StepOrder::parse(c.order)) == PhiCase::SinglePivot) EXPECT_TRUE(c.pass);
  }
}

TEST(Verify, CheckReportsMismatchDetail) {
  const auto bad = check_bijection(3, 5, StepOrder::parse("E<N<D"), PhiVariant::SwappedSubcases);
  EXPECT_FALSE(bad.pass);
  EXPECT_FALSE(bad.detail.empty());
  const auto good = check_bijection(3, 5, StepOrder::parse("E<N<D"));
  EXPECT_TRUE(good.pass);
  EXPECT_EQ(good.expected, good.actual);
}

TEST(Verify, ParallelReportIsIdenticalToSerial) {
  const auto par = run_verification({.n_max = 4, .parallel = true});
  const auto ser = run_verification({.n_max = 4, .parallel = false});
  EXPECT_EQ(to_json(par), to_json(ser));
}

TEST(Verify, JsonReportShape) {
  const auto report = run_verification({.n_max = 1, .scope = VerifyScope::Theorem});
  const auto doc = nlohmann::json::parse(to_json(report));
  EXPECT_EQ(doc["scope"]["n_max"], 1);
  EXPECT_EQ(doc["scope"]["scope"], "theorem");
  EXPECT_EQ(doc["summary"]["failed"], 0);
  EXPECT_EQ(doc["summary"]["total"], report.checks.size());
  const auto& first = doc["checks"][0];
  EXPECT_EQ(first["check"], "theorem");
  EXPECT_TRUE(first["expected"].is_array());
  EXPECT_TRUE(first["expected"][0].is_string());
}

}  // namespace
}  // namespace latticeq

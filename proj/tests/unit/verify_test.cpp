#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "oddpres/verify.hpp"

namespace {

using namespace oddpres::verify;
using nlohmann::json;

json strip_runtime(json report) {
  for (auto& c : report["checks"]) c.erase("runtime_ms");
  return report;
}

TEST(Verify, SuiteNames) {
  for (const auto& name : suite_names()) EXPECT_EQ(to_string(parse_suite(name)), name);
  EXPECT_THROW(parse_suite("everything"), std::invalid_argument);
}

TEST(Verify, OptionValidation) {
  SuiteOptions o;
  o.n = 5;
  EXPECT_THROW(run_suite(Suite::diagrams, o), std::invalid_argument);
  o.n.reset();
  o.max_n = 8;
  EXPECT_THROW(run_suite(Suite::lattice, o), std::invalid_argument);
  o.max_n = 6;
  o.budget = 0;
  EXPECT_THROW(run_suite(Suite::enumeration, o), std::invalid_argument);
}

TEST(Verify, FastSuitesPassAndAreDeterministic) {
  for (Suite s : {Suite::diagrams, Suite::presentation, Suite::tessellation, Suite::e6, Suite::eisenstein}) {
    const auto a = run_suite(s, {});
    EXPECT_EQ(exit_code(a), 0) << to_string(s);
    for (const auto& r : a) {
      EXPECT_TRUE(r.status == CheckStatus::pass) << r.check_id << ": " << r.details;
      EXPECT_EQ(r.expected, r.actual);
    }
    const auto b = run_suite(s, {});
    EXPECT_EQ(strip_runtime(to_json(s, a)).dump(), strip_runtime(to_json(s, b)).dump());
  }
}

TEST(Verify, ReportSchema) {
  SuiteOptions o;
  o.n = 2;
  const auto j = to_json(Suite::tessellation, run_suite(Suite::tessellation, o));
  EXPECT_EQ(j["version"], kReportVersion);
  EXPECT_EQ(j["suite"], "tessellation");
  const auto& first = j["checks"][0];
  for (const char* key : {"check_id", "n", "status", "expected", "actual", "runtime_ms", "details"}) {
    EXPECT_TRUE(first.contains(key)) << key;
  }
  EXPECT_EQ(first["check_id"], "tile_count");
  EXPECT_EQ(first["expected"], 12);
  EXPECT_EQ(first["actual"], 12);
  EXPECT_EQ(first["status"], "pass");
}

TEST(Verify, PetersenOrderCheck) {
  SuiteOptions o;
  o.n = 4;
  const auto reports = run_suite(Suite::enumeration, o);
  const auto it = std::find_if(reports.begin(), reports.end(),
                               [](const CheckReport& r) { return r.check_id == "petersen_deflated_order"; });
  ASSERT_NE(it, reports.end());
  EXPECT_EQ(it->expected, 51840);
  EXPECT_EQ(it->actual, 51840);
  EXPECT_EQ(it->status, CheckStatus::pass);
}

TEST(Verify, ExitCodeContract) {
  CheckReport pass{"a", std::nullopt, CheckStatus::pass, 1, 1, 0, ""};
  CheckReport skip{"b", std::nullopt, CheckStatus::skipped, nullptr, nullptr, 0, ""};
  CheckReport fail{"c", std::nullopt, CheckStatus::fail, 1, 2, 0, ""};
  CheckReport error{"d", std::nullopt, CheckStatus::error, 1, nullptr, 0, "boom"};
  EXPECT_EQ(exit_code({pass, skip}), 0);
  EXPECT_EQ(exit_code({pass, fail}), 1);
  EXPECT_EQ(exit_code({error}), 1);
}

TEST(Verify, DotExportNames) {
  SuiteOptions o;
  const auto files = dot_exports(Suite::all, o);
  std::vector<std::string> names;
  for (const auto& f : files) names.push_back(f.name);
  EXPECT_EQ(names, (std::vector<std::string>{"diagrams_2.dot", "tessellation_2.dot", "diagrams_3.dot",
                                             "tessellation_3.dot", "diagrams_4.dot", "tessellation_4.dot"}));
  EXPECT_TRUE(dot_exports(Suite::e6, o).empty());
}

class Golden : public ::testing::TestWithParam<std::string> {};

TEST_P(Golden, MatchesCheckedInReport) {
  const std::string name = GetParam();
  std::ifstream f(std::string(ODDPRES_GOLDEN_DIR) + "/" + name + ".json");
  ASSERT_TRUE(f) << name;
  const json golden = json::parse(f);
  const Suite s = parse_suite(name);
  EXPECT_EQ(strip_runtime(to_json(s, run_suite(s, {}))), golden);
}

INSTANTIATE_TEST_SUITE_P(Suites, Golden,
                         ::testing::Values("diagrams", "presentation", "tessellation", "e6", "eisenstein"));

}  // namespace

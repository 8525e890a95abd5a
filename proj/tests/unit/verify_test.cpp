#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "wittmod/error.hpp"
#include "wittmod/verify.hpp"

using namespace wittmod;

namespace {

std::string read_config(const std::string& name) {
  std::ifstream in(std::string(WITTMOD_CONFIG_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST(Verify, DefaultConfigPasses) {
  const Report r = run_verification(read_config("default.json"));
  EXPECT_TRUE(r.all_passed());
  EXPECT_EQ(r.failures(), 0U);
  EXPECT_GT(r.records.size(), 50U);
  for (const auto& rec : r.records) {
    EXPECT_TRUE(rec.passed) << rec.suite << "/" << rec.check << ": " << rec.witness;
  }
}

TEST(Verify, CorruptedCentralTermFails) {
  const Report r = run_verification(read_config("corrupted_central.json"));
  EXPECT_FALSE(r.all_passed());
  bool triple = false;
  bool pair = false;
  for (const auto& rec : r.records) {
    EXPECT_EQ(rec.suite, "jacobi");
    EXPECT_FALSE(rec.passed);
    triple = triple || rec.witness == "(L[-3], G[0], G[3])";
    pair = pair || rec.witness == "antisymmetry fails on (L[-3], L[3])";
  }
  EXPECT_TRUE(triple);
  EXPECT_TRUE(pair);
}

TEST(Verify, EmptySuiteList) {
  const Report r = run_verification(R"({"suites": []})");
  EXPECT_TRUE(r.records.empty());
  EXPECT_TRUE(r.all_passed());
  EXPECT_NE(r.to_json(false).find("\"checks\": 0"), std::string::npos);
}

TEST(Verify, DeterministicReports) {
  const std::string config = read_config("default.json");
  const std::vector<std::string> suites{"automorphism", "twist", "iso", "constraint"};
  EXPECT_EQ(run_verification(config, suites).to_json(false), run_verification(config, suites).to_json(false));
}

TEST(Verify, SeedIsEchoed) {
  const Report r = run_verification(R"({"seed": 99, "suites": []})");
  EXPECT_NE(r.header.find("\"seed\":99"), std::string::npos);
}

TEST(Verify, SuiteOverride) {
  const Report r = run_verification(read_config("default.json"), {"orbit"});
  ASSERT_FALSE(r.records.empty());
  for (const auto& rec : r.records) {
    EXPECT_EQ(rec.suite, "orbit");
  }
}

TEST(Verify, Errors) {
  EXPECT_EQ(code_of([] { run_verification("{not json"); }), ErrorCode::parse_error);
  EXPECT_EQ(code_of([] { run_verification("[1, 2]"); }), ErrorCode::parse_error);
  EXPECT_EQ(code_of([] { run_verification(R"({"suites": ["jacobi", "nope"]})"); }), ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([] { run_verification(R"({"suites": [3]})"); }), ErrorCode::parse_error);
  EXPECT_EQ(code_of([] {
              run_verification(R"({"groups": {"Z": ["1"]}, "modules": [{"group": "Q"}], "suites": []})");
            }),
            ErrorCode::parse_error);
}

TEST(Verify, FailingCheckIsRecordedNotThrown) {
  const Report r = run_verification(R"({"groups": {"Z": ["1"]},
    "structure": {"cases": [{"a": "0", "group": "Z", "seeds": ["v[0]"], "expect": "full"}]},
    "suites": ["structure"]})");
  ASSERT_EQ(r.records.size(), 1U);
  EXPECT_FALSE(r.records[0].passed);
  EXPECT_EQ(r.failures(), 1U);
  EXPECT_NE(r.records[0].witness.find("C v0"), std::string::npos);
}

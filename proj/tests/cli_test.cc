#include "qlm/cli.h"

#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

using namespace qlm;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args, bool terminal = false) {
  args.insert(args.begin(), "qlm");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err, terminal);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

}  // namespace

TEST(cli, table_csv_header_and_first_row) {
  const Invocation r = run({"table", "--n-max", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::vector<std::string> l = lines(r.out);
  ASSERT_EQ(l.size(), 4u);
  EXPECT_EQ(l[0], "n,p_opt,p_lm_projection,p_ed_continuous,n_r_lm,n_r_ed");
  EXPECT_EQ(l[1].rfind("1,0.3556624", 0), 0u) << l[1];
  EXPECT_NE(l[1].find(",0.3888888"), std::string::npos) << l[1];
}

TEST(cli, table_json_rows) {
  const Invocation r = run({"table", "--n-max", "2", "--format", "JSON"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc.size(), 2u);
  EXPECT_EQ(doc[1]["n"], 2);
  EXPECT_NEAR(doc[1]["p_opt"].get<double>(), 0.2972065811181731, 1e-15);
}

TEST(cli, table_rejects_non_positive_n_max) {
  EXPECT_EQ(run({"table", "--n-max", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"table", "--n-max", "abc"}).code, kExitUsage);
}

TEST(cli, default_format_follows_terminal) {
  const Invocation pretty = run({"table", "--n-max", "1"}, true);
  EXPECT_NE(pretty.out.find("-----"), std::string::npos);
  EXPECT_EQ(pretty.out.find(','), std::string::npos);
  const Invocation csv = run({"table", "--n-max", "1"}, false);
  EXPECT_EQ(csv.out.find("-----"), std::string::npos);
}

TEST(cli, verify_passes) {
  const Invocation r = run({"verify", "--cap", "3"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("closed_form_vs_brute_force"), std::string::npos);
  EXPECT_EQ(run({"verify", "--cap", "9"}).code, kExitUsage);
}

TEST(cli, simulate_json_is_reproducible) {
  const std::vector<std::string> args = {"simulate", "--n", "1", "--machine", "ed_n1", "--trials", "2000",
                                         "--seed", "42", "--format", "json"};
  const Invocation a = run(args);
  const Invocation b = run(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const nlohmann::json doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc["machine"], "ed_n1");
  EXPECT_EQ(doc["trials"], 2000);
  EXPECT_EQ(doc["seed"], 42);
  EXPECT_EQ(doc["memory_bits"], 2.0);
  for (const char* key : {"empirical", "stderr", "analytic", "z", "batch"}) EXPECT_TRUE(doc.contains(key)) << key;
}

TEST(cli, simulate_csv) {
  const Invocation r = run({"simulate", "--n", "2", "--machine", "ed_continuous", "--trials", "100", "--seed", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::vector<std::string> l = lines(r.out);
  ASSERT_EQ(l.size(), 2u);
  EXPECT_EQ(l[0], "n,machine,trials,seed,empirical,stderr,analytic,z");
  EXPECT_EQ(l[1].rfind("2,ed_continuous,100,3,", 0), 0u) << l[1];
}

TEST(cli, simulate_json_unbounded_memory_is_null) {
  const Invocation r = run({"simulate", "--n", "2", "--machine", "ed_continuous", "--trials", "10", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(nlohmann::json::parse(r.out)["memory_bits"].is_null());
}

TEST(cli, simulate_usage_errors) {
  EXPECT_EQ(run({"simulate", "--machine", "nope"}).code, kExitUsage);
  EXPECT_EQ(run({"simulate"}).code, kExitUsage);
  EXPECT_EQ(run({"simulate", "--machine", "ed_n1", "--n", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"simulate", "--machine", "lm_povm", "--n", "9", "--trials", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"simulate", "--machine", "ed_n1", "--trials", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"simulate", "--machine", "ed_n1", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
}

TEST(cli, help_exits_ok) {
  const Invocation r = run({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("simulate"), std::string::npos);
}

TEST(cli, povm_tetrahedron_json) {
  const Invocation r = run({"povm", "--n", "1", "--machine", "lm_tetrahedron", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["outcomes"].size(), 4u);
  for (const auto& o : doc["outcomes"]) EXPECT_EQ(o["weight"], 0.25);
  EXPECT_EQ(doc["kind"], "tetrahedron");
  EXPECT_EQ(doc["memory_bits"], 2.0);
  EXPECT_LT(doc["completeness_defect"].get<double>(), 1e-10);
}

TEST(cli, povm_quadrature_json) {
  const Invocation r = run({"povm", "--n", "2", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["outcome_count"], 15);
  EXPECT_EQ(doc["outcomes"].size(), 15u);
  EXPECT_EQ(doc["outcome_bound"], 30);
  EXPECT_EQ(doc["seed_amplitudes"].size(), 3u);
  EXPECT_LT(doc["completeness_defect"].get<double>(), 1e-10);
}

TEST(cli, povm_usage_errors) {
  EXPECT_EQ(run({"povm", "--n", "2", "--machine", "lm_tetrahedron"}).code, kExitUsage);
  EXPECT_EQ(run({"povm", "--machine", "ed_n1"}).code, kExitUsage);
}

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cyclo/cli.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "cyclo");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cyclo::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Phi) {
  EXPECT_EQ(run({"phi", "--n", "1"}).out, "X - 1\n");
  EXPECT_EQ(run({"phi", "--n", "12"}).out, "X^4 - X^2 + 1\n");
  EXPECT_EQ(run({"phi", "--n", "4", "--format", "json"}).out, "[1,0,1]\n");
  EXPECT_EQ(run({"phi", "--n", "0"}).code, 2);
}

TEST(Cli, Diag) {
  auto r = run({"diag", "--modulus", "5", "--n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"decision\":true,\"witness\":2,\"n\":4,\"modulus\":5}\n");
  r = run({"diag", "--modulus", "7", "--n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"decision\":false,\"reason\":\"no-cyclotomic-root\",\"n\":4,\"modulus\":7}\n");
  r = run({"diag", "--modulus", "6", "--group", "2,2"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["decision"].get<bool>());
  EXPECT_EQ(j["reason"], "n-not-invertible");
  r = run({"diag", "--modulus", "5", "--n", "4", "--emit-iso"});
  const auto k = nlohmann::json::parse(r.out);
  EXPECT_EQ(k["evaluation_matrix"][1], nlohmann::json({1, 2, 4, 3}));
  EXPECT_TRUE(k["factorization"].get<bool>());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"verify", "bogus"}).code, 2);
  EXPECT_EQ(run({"verify", "iso", "--p", "4"}).code, 2);
  EXPECT_EQ(run({"verify", "iso", "--max-order", "100000"}).code, 2);
  EXPECT_EQ(run({"verify", "criterion-oracle", "--r", "9"}).code, 2);
  EXPECT_EQ(run({"diag", "--modulus", "1", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"diag", "--modulus", "7"}).code, 2);
  EXPECT_EQ(run({"diag", "--modulus", "7", "--group", "2,x"}).code, 2);
  EXPECT_EQ(run({"verify", "iso", "--format", "yaml"}).code, 2);
}

TEST(Cli, VerifyReportsAndExitCodes) {
  auto r = run({"verify", "iso", "--p", "2", "--max-order", "8", "--alpha", "tpzc"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "verify iso");
  EXPECT_EQ(j["failed"], 0);
  EXPECT_GT(j["passed"].get<int>(), 0);
  EXPECT_EQ(j["checks"][0]["id"], "iso/p=2/V=1");
  r = run({"verify", "gauss", "--p", "3", "--max-r", "2", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify gauss:"), std::string::npos);
  r = run({"verify", "fourier", "--p", "3", "--max-order", "9", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 16), "id,pass,subject\n");
  r = run({"verify", "criterion-oracle", "--p", "2", "--r", "2", "--samples", "10", "--seed", "42"});
  EXPECT_EQ(r.code, 0);
  r = run({"verify", "naturality", "--p", "3", "--max-order", "9"});
  EXPECT_EQ(r.code, 0);
}

TEST(Cli, DeterministicAcrossRunsAndJobs) {
  const std::vector<std::string> base = {"verify", "criterion-oracle", "--p", "3", "--r", "1", "--samples", "15",
                                         "--seed", "7"};
  const auto a = run(base);
  auto with_jobs = base;
  with_jobs.insert(with_jobs.end(), {"--jobs", "3"});
  const auto b = run(with_jobs);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, run(base).out);
  auto other_seed = base;
  other_seed[8] = "8";
  EXPECT_NE(a.out, run(other_seed).out);
}

TEST(Cli, OutputFile) {
  const std::string path = ::testing::TempDir() + "cyclo_report.json";
  const auto r = run({"verify", "fourier", "--p", "2", "--max-order", "4", "--output", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(nlohmann::json::parse(ss.str())["checks"].size(), 4u);
  std::remove(path.c_str());
}

TEST(Cli, DumpMatrix) {
  const auto r = run({"verify", "iso", "--p", "2", "--max-order", "2", "--dump-matrix"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["checks"][1]["witness"]["matrix"].size(), 2u);
}

TEST(Cli, BudgetExceeded) {
  ::setenv("CYCLO_BUDGET", "10", 1);
  const auto r = run({"verify", "naturality", "--p", "2", "--max-order", "4"});
  ::unsetenv("CYCLO_BUDGET");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(Cli, GaussTable) {
  const auto r = run({"gauss-table", "--p", "3", "--r", "1"});
  EXPECT_EQ(r.code, 0);
  std::istringstream is(r.out);
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "N,chi_exponents,u,sum_coeffs,is_unit");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  EXPECT_EQ(rows, 6);
  const auto j = nlohmann::json::parse(run({"gauss-table", "--p", "2", "--r", "2", "--format", "json"}).out);
  EXPECT_EQ(j.size(), 8u);
}

#include <gtest/gtest.h>

#include <cstdio>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + std::string(CATJAC_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  return out;
}

}  // namespace

TEST(Cli, PolyText) {
  const auto r = run("poly h -m 5");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "q^4 - 2*q^3 + 4*q^2 - 3*q + 1\n");
}

TEST(Cli, SeriesQJson) {
  const auto r = run("series Q --order 5 --json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["coefficients"][5], nlohmann::json::parse(R"(["1","-3","4","-2","1"])"));
  EXPECT_TRUE(j["coefficients"][0].empty());
}

TEST(Cli, IdentitySweepExitCodes) {
  const auto ok = run("identity I-AC --n 1..30 --k 1..29 --no-timing");
  EXPECT_EQ(ok.code, 0);
  const auto rep = nlohmann::json::parse(ok.out);
  EXPECT_EQ(rep["checked"], 435);
  EXPECT_TRUE(rep["failures"].empty());

  const auto empty = run("identity I-main1 --n 0..0 --no-timing");
  EXPECT_EQ(empty.code, 0);
  const auto e = nlohmann::json::parse(empty.out);
  EXPECT_EQ(e["checked"], 0);
  EXPECT_EQ(e["skipped"], 42);

  const auto bad = run("identity I-bino --d 1..1 --n 2..2 --k 1..1 --no-timing");
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(nlohmann::json::parse(bad.out)["failures"].size(), 1u);
}

TEST(Cli, IdentityAllEmitsOneLinePerRecord) {
  const auto r = run("identity all --no-timing");
  const auto lines = json_lines(r.out);
  EXPECT_GE(lines.size(), 25u);
  bool any_failure = false;
  for (const auto& l : lines) any_failure = any_failure || !l["failures"].empty();
  EXPECT_EQ(r.code, any_failure ? 1 : 0);
  // Reproducible byte for byte without timing.
  EXPECT_EQ(run("identity all --no-timing --workers 4").out, r.out);
}

TEST(Cli, Conjecture) {
  const auto r = run("conjecture --json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 12u);
  EXPECT_EQ(j["rows"][7]["value"], "15100");
}

TEST(Cli, OeisBundledAndOverride) {
  EXPECT_EQ(run("oeis all").code, 0);
  const std::string env = std::string("CATJAC_DATA_DIR=") + CATJAC_TEST_DATA;
  EXPECT_EQ(run("oeis A001045", env).code, 1);
  EXPECT_EQ(run("oeis A000045", env).code, 2);
}

TEST(Cli, Paths) {
  EXPECT_EQ(run("paths count -x 8 -y 2").out, "56\n");
  EXPECT_EQ(run("paths dyck-height --len 8 --height 3").out, "5\n");
  EXPECT_EQ(run("paths bijection -n 3 -k 3").code, 0);
  EXPECT_EQ(run("paths bijection -n 20 -k 10").code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("triangle nope").code, 2);
  EXPECT_EQ(run("poly h -m 0").code, 2);
  EXPECT_EQ(run("identity I-nope").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, TriangleFormats) {
  EXPECT_EQ(run("triangle catalan --rows 3 --format csv").out, "1\n1,1\n1,2,2\n");
  const auto j = nlohmann::json::parse(run("triangle k-analog -k 2 --rows 3 --format json").out);
  EXPECT_EQ(j[2], nlohmann::json::parse(R"(["2","0","1"])"));
}

#include "fracideal/expr.hpp"
#include "fracideal/report.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

using namespace fracideal;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(FRACIDEAL_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string sample(const std::string& name) { return std::string(FRACIDEAL_SAMPLES) + "/" + name; }

template <class B>
void round_trip(const typename B::Domain& dom, const nlohmann::json& report) {
  int refuted = 0;
  for (const auto& v : report["verdicts"]) {
    if (v["status"] != "Refuted") {
      EXPECT_TRUE(v["witness"].is_null());
      continue;
    }
    ++refuted;
    const auto& w = v["witness"];
    auto lhs = evaluate_expression<B>(dom, w["lhs_expr"].get<std::string>());
    auto rhs = evaluate_expression<B>(dom, w["rhs_expr"].get<std::string>());
    EXPECT_EQ(B::format_ideal(lhs), w["lhs"].get<std::string>()) << v["property"];
    EXPECT_EQ(B::format_ideal(rhs), w["rhs"].get<std::string>()) << v["property"];
    EXPECT_FALSE(lhs == rhs) << v["property"];
  }
  EXPECT_GT(refuted, 0);
}

}  // namespace

TEST(Cli, ClassifyGaussian) {
  auto r = run("classify " + sample("gaussian.spec") + " --samples 100");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("Krull: Holds"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("consistency: all implications hold"), std::string::npos);
}

TEST(Cli, ClassifyConductorTwo) {
  auto r = run("classify " + sample("eisenstein_conductor2.spec") + " --format structured --samples 100");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdicts"][0]["property"], "v-domain");
  EXPECT_EQ(j["verdicts"][0]["status"], "Refuted");
  EXPECT_EQ(j["oracle"]["maximal"], false);
  round_trip<QuadraticBackend>(QuadOrder(-3, 2), j);
  // The reported pair really fails: (2, 1+w) is a witness as well.
  auto e = run("ideal " + sample("eisenstein_conductor2.spec") + " \"((2) ∩ (1+w)) : ((2) ∩ (1+w))\"");
  ASSERT_EQ(e.code, 0);
  EXPECT_NE(e.out.find("ideal: <1, 1/2+1/2*w>"), std::string::npos) << e.out;
  EXPECT_NE(e.out.find("≠ D"), std::string::npos);
}

TEST(Cli, ClassifySemigroup) {
  auto r = run("classify " + sample("semigroup_2_3.spec") + " --format structured --samples 100");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["domain"]["semantics"], "residuation system");
  EXPECT_TRUE(j["essential_primes"].is_null());
  round_trip<SemigroupBackend>(make_semigroup({2, 3}), j);
}

TEST(Cli, InlineSpecAndOverrides) {
  auto r = run("classify \"kind=quadratic; d=-5; f=1\" --bound 3 --samples 10 --seed 4 --primes 2,3 --format structured");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["settings"]["bound"], 3);
  EXPECT_EQ(j["settings"]["seed"], 4);
  EXPECT_EQ(j["settings"]["primes"].size(), 2u);
  EXPECT_FALSE(j.contains("timing_ms"));
  auto t = run("classify \"kind=quadratic; d=-5\" --bound 2 --samples 5 --format structured --timing");
  EXPECT_TRUE(nlohmann::json::parse(t.out).contains("timing_ms"));
}

TEST(Cli, DeterministicStructuredOutput) {
  std::string args = "classify " + sample("eisenstein_conductor2.spec") + " --format structured --seed 17 --samples 200";
  auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto threaded = run(args + " --threads 2");
  EXPECT_EQ(a.out, threaded.out);
}

TEST(Cli, IdealCommand) {
  auto r = run("ideal \"kind=quadratic; d=-5\" \"D^-1\"");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("relation: = D"), std::string::npos) << r.out;
  auto p = run("ideal \"kind=quadratic; d=-5\" \"(1+w)^v\"");
  EXPECT_NE(p.out.find("principal: (1+w)"), std::string::npos) << p.out;
  auto s = run("ideal \"kind=numerical-semigroup; generators=2,3\" \"(2,3)^-1 : (2,3)^-1\" --format structured");
  auto j = nlohmann::json::parse(s.out);
  EXPECT_EQ(j["ideal"], "{0,1,2,...}");
}

TEST(Cli, Errors) {
  auto bad_expr = run("ideal \"kind=quadratic; d=-1\" \"(2) ++ (3)\"");
  EXPECT_EQ(bad_expr.code, 3);
  EXPECT_NE(bad_expr.out.find("      ^"), std::string::npos) << bad_expr.out;
  auto bad_spec = run("classify \"kind=quadratic; d=x\"");
  EXPECT_EQ(bad_spec.code, 2);
  EXPECT_NE(bad_spec.out.find("line 1, column 19"), std::string::npos) << bad_spec.out;
  EXPECT_NE(run("classify").code, 0);
  EXPECT_NE(run("bogus").code, 0);
}

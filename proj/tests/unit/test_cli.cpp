#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "steintile/cli.hpp"

using steintile::cli::run;
using Json = nlohmann::ordered_json;

namespace {

steintile::cli::RunResult call(std::vector<std::string> args) {
  args.insert(args.begin(), "steintile");
  return run(args);
}

Json call_json(std::vector<std::string> args) {
  const auto r = call(std::move(args));
  EXPECT_EQ(r.exit_code, 0) << r.error;
  return Json::parse(r.output);
}

}  // namespace

TEST(Cli, CopulaMinSupport) {
  const auto j = call_json({"copula", "min-support", "-m", "3", "-n", "5"});
  EXPECT_EQ(j.at("S"), 7);
  EXPECT_EQ(j.at("lower_bound"), 6);
}

TEST(Cli, CopulaTableCsv) {
  const auto r = call({"copula", "table", "--max-m", "3", "--max-n", "4"});
  ASSERT_EQ(r.exit_code, 0) << r.error;
  EXPECT_EQ(r.output.substr(0, r.output.find('\n')), "m\\n,2,3,4");
  EXPECT_NE(r.output.find("3,4,3,6"), std::string::npos);
}

TEST(Cli, GroupMinSupportMethodsAgree) {
  const std::vector<std::string> base{"group", "min-support", "--group", "4,2", "--g1", "1,0", "--g2", "2,0;0,1"};
  auto brute = base;
  brute.insert(brute.end(), {"--method", "bruteforce"});
  EXPECT_EQ(call_json(base).at("S"), 2);
  EXPECT_EQ(call_json(brute).at("S"), 2);
}

TEST(Cli, Pp1d) {
  const auto b = call_json({"pp1d", "bound", "--alpha", "2/3"});
  EXPECT_EQ(b.at("lower_bound"), "4/3");
  const auto t = call_json({"pp1d", "conv-tile", "--lengths", "1,2/3"});
  EXPECT_EQ(t.at("mass"), "2/3");
  const auto d = call_json({"pp1d", "d2c", "-m", "2", "-n", "3", "--source", "lmr"});
  EXPECT_EQ(d.at("support").at("measure"), "4");
  const auto csv = call({"--csv", "pp1d", "conv-tile", "--lengths", "1,1", "--samples", "2"});
  EXPECT_EQ(csv.output, "x,f\n0,0\n1,1\n2,0\n");
}

TEST(Cli, Lattice) {
  const auto f = call_json({"lattice", "many-relations", "-p", "3", "-d", "2", "--verify-samples", "20"});
  EXPECT_EQ(f.at("count"), 4);
  EXPECT_EQ(f.at("volume"), "3");
  const auto d = call_json({"lattice", "dual", "--basis", "2,0;0,1/2"});
  EXPECT_EQ(d.at("dual").at("basis"), Json::parse(R"([["1/2","0"],["0","2"]])"));
  const auto mj = call_json({"lattice", "meet-join", "--a", "2", "--b", "3"});
  EXPECT_EQ(mj.dump().find("\"6\"") != std::string::npos, true);
}

TEST(Cli, Density) {
  const auto j = call_json({"density", "multiples", "-N", "3", "-X", "60"});
  EXPECT_EQ(j.at("exact_density"), "7/15");
  EXPECT_EQ(j.at("sieve_count"), 28);
  const auto w = call_json({"density", "union-window", "-N", "3"});
  EXPECT_EQ(w.at("count"), 9);
  EXPECT_EQ(w.at("agree"), true);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({"copula", "min-support", "-m", "0", "-n", "5"}).exit_code, 2);
  EXPECT_EQ(call({"lattice", "dual", "--basis", "1,2;2,4"}).exit_code, 2);
  EXPECT_EQ(call({"group", "tile-check", "--group", "4", "--values", "{"}).exit_code, 2);
  EXPECT_EQ(call({"no-such-command"}).exit_code, 2);
  EXPECT_EQ(call({"density", "multiples", "-N", "3", "-X", "200000000"}).exit_code, 3);
  EXPECT_EQ(call({"copula", "min-support", "-m", "20", "-n", "20"}).exit_code, 3);
  const auto cap = call({"lattice", "many-relations", "-p", "4", "-d", "2"});
  EXPECT_EQ(cap.exit_code, 2);
  EXPECT_FALSE(cap.error.empty());
}

TEST(Cli, DeterministicBytes) {
  const std::vector<std::string> cmd{"group", "min-support", "--group", "6", "--g1", "2", "--g2", "3"};
  const auto first = call(cmd);
  ASSERT_EQ(first.exit_code, 0) << first.error;
  for (int i = 0; i < 3; ++i) EXPECT_EQ(call(cmd).output, first.output);
  for (const char* t : {"1", "2", "4"}) {
    auto threaded = cmd;
    threaded.insert(threaded.begin(), {"--threads", t});
    EXPECT_EQ(call(threaded).output, first.output);
  }
}

TEST(Cli, PrettyOutputIsNotJson) {
  const auto r = call({"--pretty", "density", "multiples", "-N", "3", "-X", "60"});
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("7/15"), std::string::npos);
  EXPECT_NE(r.output.front(), '{');
}

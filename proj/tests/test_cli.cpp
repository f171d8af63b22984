#include "rbmod/cli.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

using namespace rbmod;
using cli::Json;

cli::JobSpec job(cli::Command c, Json params) {
  cli::JobSpec j;
  j.command = c;
  j.params = std::move(params);
  return j;
}

TEST(Cli, CommandNames) {
  EXPECT_EQ(cli::parse_command("solve-block"), cli::Command::SolveBlock);
  EXPECT_EQ(cli::to_string(cli::Command::OracleCompare), "oracle-compare");
  EXPECT_FALSE(cli::parse_command("frobnicate"));
}

TEST(Cli, SolveBlock) {
  const auto r = cli::execute(job(cli::Command::SolveBlock, {{"s", 2}, {"t", 2}, {"b1", "-1"}, {"b2", "0"}}));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report["free_count"], 3);
  EXPECT_EQ(r.report["case"], "(1)");
  EXPECT_EQ(r.report["free_cells"], Json::parse("[[1,1],[1,2],[2,2]]"));
}

TEST(Cli, VerifyValidAndInvalid) {
  Json zero5 = Json::array();
  Json j5 = Json::array();
  for (int r = 0; r < 5; ++r) {
    Json zr = Json::array(), jr = Json::array();
    for (int c = 0; c < 5; ++c) {
      zr.push_back("0");
      jr.push_back(c == r ? "7" : (c == r + 1 ? "1" : "0"));
    }
    zero5.push_back(zr);
    j5.push_back(jr);
  }
  auto ok = cli::execute(job(cli::Command::Verify, {{"flavor", "xkx"}, {"A", zero5}, {"B", j5}}));
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_EQ(ok.report["valid"], true);
  EXPECT_EQ(ok.report["agree"], true);

  auto bad = cli::execute(job(cli::Command::Verify, {{"flavor", "xkx"},
                                                     {"A", Json::parse(R"([["1","1"],["1","1"]])")},
                                                     {"B", Json::parse(R"([["-1","0"],["0","0"]])")}}));
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_EQ(bad.report["valid"], false);
  EXPECT_EQ(bad.report["agree"], true);
}

TEST(Cli, ClassifyDiagZeroFive) {
  auto r = cli::execute(job(cli::Command::Classify,
                            {{"flavor", "xkx"}, {"B", Json::parse(R"([["0","0"],["0","5"]])")}}));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report["dim"], 2);
  EXPECT_EQ(r.report["basis"].size(), 2U);
  EXPECT_EQ(r.report["basis"][1], Json::parse(R"([["0","0"],["1","0"]])"));
}

TEST(Cli, ClassifyKxNeedsQuasiIdempotent) {
  auto r = cli::execute(job(cli::Command::Classify, {{"flavor", "kxp2"}, {"B", Json::parse(R"([["2"]])")}}));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.report["error"]["kind"], "NotQuasiIdempotent");
}

TEST(Cli, InputErrorsCarryPosition) {
  auto r = cli::execute(job(cli::Command::Classify,
                            {{"flavor", "xkx"}, {"B", Json::parse(R"([["0","1/0"],["0","5"]])")}}));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(r.report["error"]["kind"], "ParseError");
  EXPECT_NE(r.report["error"]["message"].get<std::string>().find("row 1, column 2"), std::string::npos);

  r = cli::execute(job(cli::Command::Classify, {{"flavor", "xkx"}, {"B", Json::parse(R"([["0","1"],["0"]])")}}));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(r.report["error"]["kind"], "DimensionMismatch");

  cli::JobSpec broken;
  broken.command = cli::Command::Verify;
  broken.input = "{\"A\": [";
  EXPECT_EQ(cli::execute(broken).exit_code, 2);
  EXPECT_EQ(cli::execute(job(cli::Command::SolveBlock, {{"s", 2}})).exit_code, 2);
}

TEST(Cli, AnalyzeIrrationalIsUndecided) {
  auto r = cli::execute(job(cli::Command::Analyze, {{"flavor", "xkx"},
                                                    {"A", Json::parse(R"([["0","-2"],["1","0"]])")},
                                                    {"B", Json::parse(R"([["0","0"],["0","0"]])")}}));
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_TRUE(r.report["submodule_witness"].is_null());
}

TEST(Cli, AnalyzeReportFields) {
  auto r = cli::execute(job(cli::Command::Analyze, {{"flavor", "xkx"},
                                                    {"A", Json::parse(R"([["2","1"],["0","2"]])")},
                                                    {"B", Json::parse(R"([["-1","0"],["0","0"]])")}}));
  EXPECT_EQ(r.exit_code, 0);
  for (const char* k : {"module", "valid", "irreducible", "submodule_witness", "indecomposable",
                        "commutant_dim", "regular_rank"})
    EXPECT_TRUE(r.report.contains(k)) << k;
  EXPECT_EQ(r.report["indecomposable"], "yes");
  EXPECT_EQ(r.report["regular_rank"], 1);
  EXPECT_EQ(r.report["submodule_witness"]["x_eigen"], "2");
}

TEST(Cli, RbCheckUsesTruncationOverride) {
  setenv("RBMOD_TRUNCATION", "5", 1);
  EXPECT_EQ(cli::default_truncation(), 5U);
  auto r = cli::execute(job(cli::Command::RbCheck, {{"family", "P1"}, {"weight", "-3"}, {"b", "1/2"}}));
  unsetenv("RBMOD_TRUNCATION");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report["operator"]["truncation"], 5);
  EXPECT_EQ(cli::default_truncation(), 12U);
}

TEST(Cli, OracleCompareAndCatalog) {
  auto r = cli::execute(job(cli::Command::OracleCompare, {{"s", 3}, {"t", 2}, {"b1", "-1"}, {"b2", "0"}}));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report["equal"], true);
  r = cli::execute(job(cli::Command::OracleCompare,
                       {{"variant", "i23"}, {"B", Json::parse(R"([["-1","0"],["0","0"]])")}}));
  EXPECT_EQ(r.exit_code, 0);
  r = cli::execute(job(cli::Command::Catalog, {{"n", 3}}));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report["families"].size(), 14U);
  EXPECT_EQ(cli::execute(job(cli::Command::Catalog, {{"n", 5}})).exit_code, 2);
}

TEST(Cli, BatchKeepsOrder) {
  Json jobs = Json::array();
  for (int s = 1; s <= 6; ++s)
    jobs.push_back({{"command", "solve-block"}, {"s", s}, {"t", 2}, {"b1", "-1"}, {"b2", "0"}});
  jobs.push_back({{"command", "catalog"}, {"n", 9}});
  cli::JobSpec b;
  b.command = cli::Command::Batch;
  b.input = jobs.dump();
  const auto r = cli::execute(b);
  EXPECT_EQ(r.exit_code, 2);
  ASSERT_EQ(r.report["results"].size(), 7U);
  for (int s = 1; s <= 6; ++s) {
    EXPECT_EQ(r.report["results"][s - 1]["index"], s - 1);
    EXPECT_EQ(r.report["results"][s - 1]["report"]["free_count"], s + 1);
  }
}

TEST(Cli, Deterministic) {
  const auto j = job(cli::Command::Classify,
                     {{"flavor", "xkx"}, {"B", Json::parse(R"([["0","1","0"],["0","0","0"],["0","0","-1"]])")}});
  EXPECT_EQ(cli::execute(j).report.dump(), cli::execute(j).report.dump());
}

// The executable itself.

struct Proc {
  int code;
  std::string out;
};

Proc run_exe(const std::string& args) {
  const std::string cmd = std::string(RBMOD_EXE) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

TEST(CliProcess, SolveBlockWithNegativeArguments) {
  const auto p = run_exe("solve-block --s 2 --t 2 --b1 -1 --b2 0");
  ASSERT_EQ(p.code, 0);
  EXPECT_EQ(Json::parse(p.out)["free_count"], 3);
}

TEST(CliProcess, VerifyExitCodes) {
  EXPECT_EQ(run_exe(R"(verify --flavor xkx --A '[["0"]]' --B '[["7"]]')").code, 0);
  EXPECT_EQ(run_exe(R"(verify --flavor xkx --A '[["1"]]' --B '[["7"]]')").code, 1);
  EXPECT_EQ(run_exe(R"(verify --flavor nope --A '[["1"]]' --B '[["7"]]')").code, 2);
  EXPECT_EQ(run_exe(R"(analyze --flavor xkx --A '[["0","-2"],["1","0"]]' --B '[["0","0"],["0","0"]]')").code, 3);
  EXPECT_EQ(run_exe("solve-block --s 0 --t 1 --b1 0 --b2 0").code, 2);
}

TEST(CliProcess, InputAndOutputFiles) {
  const std::string in = ::testing::TempDir() + "rbmod_in.json";
  const std::string out = ::testing::TempDir() + "rbmod_out.json";
  std::ofstream(in) << R"({"flavor":"xkx","B":[["0","0"],["0","5"]]})";
  ASSERT_EQ(run_exe("classify -i " + in + " -o " + out).code, 0);
  std::ifstream f(out);
  const Json r = Json::parse(f);
  EXPECT_EQ(r["solution_dim"], 2);
}

TEST(CliProcess, HelpListsFlags) {
  const auto p = run_exe("solve-block --help");
  EXPECT_EQ(p.code, 0);
  for (const char* flag : {"--s", "--t", "--b1", "--b2", "--input", "--output", "--truncation"})
    EXPECT_NE(p.out.find(flag), std::string::npos) << flag;
}

}  // namespace

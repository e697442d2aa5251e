#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "commands.hpp"

namespace evenodd::cli {
namespace {

const std::string kData = EVENODD_TEST_DATA;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "evenodd");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(nlohmann::json::parse(line));
  return lines;
}

TEST(QueryCommandTest, Inside) {
  const Outcome r = invoke({"query", "--polygon", kData + "/square.txt", "--point", "2,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"x\":2,\"y\":2,\"result\":\"inside\",\"crossings\":1}\n");
}

TEST(QueryCommandTest, PaperModeReportsBoundaryAsInside) {
  EXPECT_EQ(invoke({"query", "--polygon", kData + "/square.txt", "--point", "2,0"}).out,
            "{\"x\":2,\"y\":0,\"result\":\"boundary\",\"crossings\":0}\n");
  const Outcome r =
      invoke({"query", "--polygon", kData + "/square.txt", "--point", "2,0", "--paper-mode"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json_lines(r.out).at(0)["result"], "inside");
}

TEST(QueryCommandTest, HexagonTraceIsGolden) {
  const Outcome r =
      invoke({"query", "--polygon", kData + "/hexagon.txt", "--point", "0,0", "--trace"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "{\"x\":0,\"y\":0,\"result\":\"inside\",\"crossings\":1,\"trace\":["
            "{\"from\":0,\"skipped\":[],\"to\":1,\"axis\":\"positive\",\"intersection\":\"no\"},"
            "{\"from\":1,\"skipped\":[2,3],\"to\":4,\"axis\":\"complete\",\"intersection\":\"no\"},"
            "{\"from\":4,\"skipped\":[5],\"to\":0,\"axis\":\"complete\",\"intersection\":\"yes\"}]}\n");
}

TEST(QueryCommandTest, ReadsWkt) {
  const Outcome r = invoke({"query", "--polygon", kData + "/bowtie.wkt", "--point=1,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json_lines(r.out).at(0)["result"], "inside");
  EXPECT_EQ(json_lines(invoke({"query", "--polygon", kData + "/bowtie.wkt", "--point=-1,2"}).out)
                .at(0)["result"],
            "outside");
}

TEST(QueryCommandTest, UsageAndInputErrorsExitTwo) {
  EXPECT_EQ(invoke({"query", "--polygon", kData + "/missing.txt", "--point", "1,1"}).code, 2);
  EXPECT_EQ(invoke({"query", "--polygon", kData + "/square.txt", "--point", "1;1"}).code, 2);
  EXPECT_EQ(invoke({"query", "--polygon", kData + "/square.txt"}).code, 2);
  EXPECT_EQ(invoke({"query", "--polygon", kData + "/bad_points.txt", "--point", "1,1"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
}

TEST(BatchCommandTest, PreservesInputOrder) {
  const Outcome r = invoke({"batch", "--polygon", kData + "/square.txt", "--points",
                            kData + "/square_points.txt", "--threads", "3"});
  EXPECT_EQ(r.code, 0);
  const auto lines = json_lines(r.out);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0]["result"], "inside");
  EXPECT_EQ(lines[1]["result"], "outside");
  EXPECT_EQ(lines[2]["result"], "boundary");
  EXPECT_EQ(r.err, "3 points: 1 inside, 1 outside, 1 boundary\n");
}

TEST(BatchCommandTest, ManyThreadsMatchSingleThread) {
  const std::string points = ::testing::TempDir() + "/many_points.txt";
  {
    std::ofstream file(points);
    for (int y = -2; y <= 6; ++y) {
      for (int x = -2; x <= 6; ++x) file << x << ' ' << y << '\n';
    }
  }
  const Outcome one = invoke({"batch", "--polygon", kData + "/hexagon.txt", "--points", points,
                              "--threads", "1", "--trace"});
  const Outcome many = invoke({"batch", "--polygon", kData + "/hexagon.txt", "--points", points,
                               "--threads", "7", "--trace"});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, many.out);
  EXPECT_EQ(json_lines(one.out).size(), 81u);
}

TEST(BatchCommandTest, EmptyPointsFile) {
  const Outcome r = invoke({"batch", "--polygon", kData + "/square.txt", "--points",
                            kData + "/empty_points.txt"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "");
  EXPECT_NE(r.err.find("0 points"), std::string::npos);
}

TEST(BatchCommandTest, BadPointNamesTheLine) {
  const Outcome r = invoke({"batch", "--polygon", kData + "/square.txt", "--points",
                            kData + "/bad_points.txt"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

TEST(DifftestCommandTest, AgreesAndPrintsSeed) {
  const Outcome r = invoke({"difftest", "--cases", "2000", "--seed", "42"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("seed 42"), std::string::npos);
  EXPECT_NE(r.out.find("2000/2000 agree"), std::string::npos) << r.out;
}

TEST(DifftestCommandTest, ForcedBoundaryCase) {
  const Outcome r =
      invoke({"difftest", "--cases", "1", "--seed", "42", "--p-on-boundary-query", "1.0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1/1 agree (0 inside, 0 outside, 1 boundary)"), std::string::npos) << r.out;
}

TEST(DifftestCommandTest, NaiveMutantIsCaught) {
  const Outcome r = invoke({"difftest", "--cases", "100000", "--seed", "42", "--naive-positive-axis"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("DISAGREEMENT"), std::string::npos);
  EXPECT_NE(r.out.find("polygon: POLYGON"), std::string::npos);
}

TEST(DifftestCommandTest, RejectsBadConfig) {
  EXPECT_EQ(invoke({"difftest", "--cases", "0"}).code, 2);
  EXPECT_EQ(invoke({"difftest", "--p-on-axis", "2"}).code, 2);
}

TEST(BenchCommandTest, EmitsCsv) {
  const Outcome r = invoke({"bench", "--sizes", "1,10,100", "--repetitions", "5"});
  EXPECT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,mean_ns,ns_per_vertex");
  std::vector<std::string> sizes;
  while (std::getline(in, line)) sizes.push_back(line.substr(0, line.find(',')));
  EXPECT_EQ(sizes, (std::vector<std::string>{"1", "10", "100"}));
  EXPECT_NE(r.err.find("seed 42"), std::string::npos);
}

TEST(BenchCommandTest, ZeroRepetitions) {
  const Outcome r = invoke({"bench", "--sizes", "1000", "--repetitions", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n,mean_ns,ns_per_vertex\n1000,0.0,0.0000\n");
}

TEST(ExecutableTest, ExitCodesFromTheRealBinary) {
  const std::string exe = EVENODD_CLI_PATH;
  auto status = [](const std::string& cmd) {
    const int raw = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  EXPECT_EQ(status(exe + " query --polygon " + kData + "/square.txt --point 2,2"), 0);
  EXPECT_EQ(status(exe + " batch --polygon " + kData + "/square.txt --points " + kData +
                   "/bad_points.txt"),
            2);
  EXPECT_EQ(status(exe + " difftest --cases 20000 --naive-positive-axis"), 1);
  EXPECT_EQ(status(exe + " --help"), 0);
}

}  // namespace
}  // namespace evenodd::cli

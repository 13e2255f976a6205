#include "codim/cli.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "codim/bounds.hpp"
#include "codim/mahonian.hpp"

namespace codim {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::istringstream fs(line);
    std::string field;
    while (std::getline(fs, field, ',')) fields.push_back(field);
    rows.push_back(fields);
  }
  return rows;
}

TEST(CliTest, MahonianCsvRoundTrips) {
  const CliRun r = run({"mahonian", "--n", "6", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.front(), (std::vector<std::string>{"n", "k", "count"}));
  const MahonianRow row = mahonian_row(6);
  ASSERT_EQ(rows.size(), row.coefficients.size() + 1);
  for (std::size_t k = 0; k < row.coefficients.size(); ++k) {
    EXPECT_EQ(rows[k + 1][0], "6");
    EXPECT_EQ(std::stoi(rows[k + 1][1]), static_cast<int>(k));
    EXPECT_EQ(BigInt(rows[k + 1][2]), row.coefficients[k]);
  }
}

TEST(CliTest, MahonianCheck) {
  const CliRun r = run({"mahonian", "--n", "7", "--check"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("OK"), std::string::npos);
}

TEST(CliTest, BoundsCsvRoundTrips) {
  const CliRun r = run({"--format", "csv", "bounds", "--d", "3", "--n-max", "12"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"n", "classic", "theorem", "phi",
                                                "factorial", "winner"}));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const int n = std::stoi(rows[i][0]);
    EXPECT_EQ(BigInt(rows[i][1]), classic_bound(n, 3));
    EXPECT_EQ(BigInt(rows[i][2]), theorem_bound(n, 3));
    EXPECT_EQ(BigInt(rows[i][4]), factorial(n));
  }
}

TEST(CliTest, BoundsTableReportsCrossover) {
  const CliRun r = run({"bounds", "--d", "3", "--n-max", "10"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("n(3) = 9"), std::string::npos);
}

TEST(CliTest, CrossoverColumnIsMonotone) {
  const CliRun r = run({"crossover", "--d-max", "10", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk);
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 10u);
  EXPECT_EQ(rows[1], (std::vector<std::string>{"2", "2"}));
  EXPECT_EQ(rows[2], (std::vector<std::string>{"3", "9"}));
  for (std::size_t i = 2; i < rows.size(); ++i) {
    EXPECT_LE(std::stoi(rows[i - 1][1]), std::stoi(rows[i][1]));
  }
}

TEST(CliTest, VerifySelectedSuites) {
  const CliRun r = run({"verify", "--n-max", "5", "--suites", "metric,lemma31",
                     "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1][0], "metric");
  EXPECT_EQ(rows[1].back(), "pass");
  EXPECT_EQ(rows[2][0], "lemma31");
}

TEST(CliTest, VerifyJson) {
  const CliRun r = run({"--format", "json", "verify", "--n-max", "3", "--suites",
                     "metric"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind(R"({"ok":true,)", 0), 0u);
}

TEST(CliTest, GreedyTable) {
  const CliRun r = run({"greedy", "--perm", "1,3,2,4"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("form: w0=[1] c1=[3,2] w1=[4]"), std::string::npos);
  EXPECT_NE(run({"greedy", "--perm", "1,2,3"}).out.find("no chunks"),
            std::string::npos);
}

TEST(CliTest, ReduceStepAndClosure) {
  const CliRun step = run({"reduce", "--perm", "3,2,1", "--d", "3", "--mode",
                        "classic", "--format", "csv"});
  ASSERT_EQ(step.code, kExitOk) << step.err;
  EXPECT_EQ(parse_csv(step.out).size(), 6u);

  const CliRun closure = run({"reduce", "--n", "6", "--d", "4", "--mode", "main",
                           "--closure", "--summary-only", "--format", "csv"});
  ASSERT_EQ(closure.code, kExitOk) << closure.err;
  const auto rows = parse_csv(closure.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1], (std::vector<std::string>{"main", "6", "4", "1", "24", "1",
                                                "23", "719", "0"}));
}

TEST(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"mahonian"}).code, kExitUsage);
  EXPECT_EQ(run({"mahonian", "--n", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"--format", "xml", "mahonian", "--n", "3"}).code, kExitUsage);
  EXPECT_EQ(run({"greedy", "--perm", "1,1,2"}).code, kExitUsage);
  EXPECT_EQ(run({"reduce", "--perm", "1,2,3", "--d", "2", "--mode", "classic"})
                .code,
            kExitUsage);
  EXPECT_EQ(run({"reduce", "--perm", "2,1,4,3,5,6", "--d", "3", "--mode",
                 "main"})
                .code,
            kExitUsage);
  EXPECT_EQ(run({"verify", "--suites", "nope"}).code, kExitUsage);
  EXPECT_EQ(run({"reduce", "--n", "9", "--d", "3", "--mode", "main",
                 "--closure"})
                .code,
            kExitUsage);
  const CliRun r = run({"mahonian", "--n", "201"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST(CliTest, OutputIsDeterministic) {
  const std::vector<std::string> args = {"--format", "json", "reduce", "--n",
                                         "5", "--d", "3", "--mode", "classic",
                                         "--closure"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(CliTest, OutputFileAndMeta) {
  const auto path =
      std::filesystem::temp_directory_path() / "codim_cli_test_output.csv";
  std::filesystem::remove(path);
  const CliRun r = run({"--meta", "--output", path.string(), "--format", "csv",
                     "mahonian", "--n", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str().rfind("# codim", 0), 0u);
  EXPECT_NE(text.str().find("n,k,count\n3,0,1\n3,1,2\n3,2,2\n3,3,1\n"),
            std::string::npos);
  std::filesystem::remove(path);
}

TEST(CliTest, CapCanBeLoweredByEnvironment) {
  ::setenv("CODIM_MAX_N", "4", 1);
  const CliRun r = run({"reduce", "--n", "5", "--d", "3", "--mode", "classic",
                     "--closure"});
  ::unsetenv("CODIM_MAX_N");
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_EQ(run({"reduce", "--n", "5", "--d", "3", "--mode", "classic",
                 "--closure"})
                .code,
            kExitOk);
}

TEST(CliTest, BinaryExitCodes) {
  const std::string bin = CODIM_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  EXPECT_EQ(status("mahonian --n 4"), kExitOk);
  EXPECT_EQ(status("mahonian"), kExitUsage);
  EXPECT_EQ(status("reduce --perm 1,2,3 --d 2 --mode classic"), kExitUsage);
  std::array<char, 256> buffer{};
  std::string text;
  FILE* pipe = ::popen((bin + " --format csv mahonian --n 4").c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  while (std::fgets(buffer.data(), buffer.size(), pipe)) text += buffer.data();
  ::pclose(pipe);
  EXPECT_EQ(text,
            "n,k,count\n4,0,1\n4,1,3\n4,2,5\n4,3,6\n4,4,5\n4,5,3\n4,6,1\n");
}

}  // namespace
}  // namespace codim

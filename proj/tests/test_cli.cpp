#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "snakeword/cli.hpp"

using namespace snakeword;
using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, AnalyzeCountsAgree) {
  const CliRun r = run({"analyze", "10010111", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["counts"]["subwords"], 32);
  EXPECT_EQ(doc["counts"]["antichains"], 32);
  EXPECT_EQ(doc["counts"]["filters"], 32);
  EXPECT_EQ(doc["counts"]["matchings"], 32);
  EXPECT_EQ(doc["agree"], true);
  EXPECT_EQ(doc["blocks"], "1^1 0^2 1^1 0^1 1^3");
}

TEST(Cli, AnalyzeSmallWords) {
  EXPECT_EQ(json::parse(run({"analyze", "1", "--format", "json"}).out)["counts"]["subwords"], 2);
  EXPECT_EQ(json::parse(run({"analyze", "101110", "--format", "json"}).out)["counts"]["matchings"], 16);
  const CliRun text = run({"analyze", "101110"});
  EXPECT_NE(text.out.find("agree       true"), std::string::npos);
}

TEST(Cli, Count) {
  EXPECT_EQ(run({"count", "101110"}).out, "16 16 16 16\n");
}

TEST(Cli, RenderHasseDot) {
  const CliRun r = run({"render", "101110", "--kind", "hasse", "--format", "dot"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("graph \"hasse_101110\"", 0), 0u);
}

TEST(Cli, RenderSingleSquare) {
  EXPECT_EQ(run({"render", "1", "--kind", "snake", "--format", "ascii"}).out, "+---+\n| a |\n+---+\n");
}

TEST(Cli, RenderSvgWithMatching) {
  const CliRun r = run({"render", "1011101100", "--kind", "snake", "--format", "svg", "--matching", "11010"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("<svg"), std::string::npos);
}

TEST(Cli, RenderRejectsSvgForTries) {
  EXPECT_EQ(run({"render", "101110", "--kind", "subword-trie", "--format", "svg"}).code, exit_usage);
  EXPECT_EQ(run({"render", "101110", "--kind", "hasse", "--matching", "1"}).code, exit_usage);
}

TEST(Cli, MapFinv) {
  const json doc = json::parse(run({"map", "1011101100", "finv", "11010"}).out);
  EXPECT_EQ(doc["antichain"], json({1, 3, 7, 9}));
}

TEST(Cli, MapFOfEmptyAntichain) {
  for (const std::string empty : {"", "{}", "∅"}) {
    const CliRun r = run({"map", "1011101100", "f", empty});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out)["subword"], "");
  }
}

TEST(Cli, MapF) {
  EXPECT_EQ(json::parse(run({"map", "1011101100", "f", "4,10"}).out)["subword"], "101101100");
  EXPECT_EQ(json::parse(run({"map", "1011101100", "f", "{1, 3, 7, 9}"}).out)["subword"], "11010");
}

TEST(Cli, MapPm) {
  const json doc = json::parse(run({"map", "1011101100", "pm", "101101100"}).out);
  EXPECT_EQ(doc["fil"], json({4, 5, 8, 9, 10}));
  EXPECT_EQ(doc["matching"].size(), 11u);
}

TEST(Cli, MapRecord) {
  const json doc = json::parse(run({"map", "1011101100", "record", "11010"}).out);
  EXPECT_EQ(doc["schema"], "snakeword.record/1");
  for (const char* key : {"word", "subword", "embedding", "antichain", "filter", "matching"}) {
    EXPECT_TRUE(doc.contains(key)) << key;
  }
}

TEST(Cli, MapErrors) {
  const CliRun bad_antichain = run({"map", "1011101100", "f", "2,3"});
  EXPECT_EQ(bad_antichain.code, exit_usage);
  EXPECT_NE(bad_antichain.err.find("NotAnAntichain"), std::string::npos);
  const CliRun not_subword = run({"map", "10", "finv", "11"});
  EXPECT_EQ(not_subword.code, exit_usage);
  EXPECT_NE(not_subword.err.find("NotASubword"), std::string::npos);
  EXPECT_EQ(run({"map", "10", "f", "1,x"}).code, exit_usage);
}

TEST(Cli, ParseErrors) {
  EXPECT_EQ(run({"analyze", "0101"}).code, exit_usage);
  EXPECT_EQ(run({"analyze", "12"}).code, exit_usage);
  EXPECT_EQ(run({"analyze", ""}).code, exit_usage);
  EXPECT_EQ(run({"frobnicate"}).code, exit_usage);
  EXPECT_EQ(run({}).code, exit_usage);
  EXPECT_EQ(run({"render", "101", "--kind", "cube"}).code, exit_usage);
}

TEST(Cli, HelpExitsCleanly) {
  const CliRun r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, VerifyWord) {
  const CliRun r = run({"verify", "--word", "10010111", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.out;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["passed"], true);
  EXPECT_EQ(doc["counts"]["subwords"], 32);
  EXPECT_EQ(doc["counts"]["matchings"], 32);
  EXPECT_EQ(run({"verify", "--word", "1"}).code, 0);
}

TEST(Cli, VerifySweepWritesReport) {
  const auto path = std::filesystem::temp_directory_path() / "snakeword_cli_report.json";
  const CliRun r = run({"verify", "--max-length", "8", "--json-report", path.string()});
  ASSERT_EQ(r.code, 0) << r.out;
  std::ifstream in(path);
  const json doc = json::parse(in);
  EXPECT_EQ(doc["words_checked"], 255);
  EXPECT_EQ(doc["passed"], true);
  for (const auto& p : doc["properties"]) {
    EXPECT_EQ(p["passed"], true) << p["name"];
    EXPECT_TRUE(p["counterexample"].is_null());
  }
  std::filesystem::remove(path);
}

TEST(Cli, VerifyLengthGuard) {
  EXPECT_EQ(run({"verify", "--max-length", "13"}).code, exit_usage);
  EXPECT_EQ(run({"verify", "--max-length", "2", "--word", "1"}).code, exit_usage);
  EXPECT_EQ(run({"verify"}).code, exit_usage);
}

TEST(Cli, CapFlagAndEnvironment) {
  const CliRun flag = run({"--cap", "5", "count", "101110"});
  EXPECT_EQ(flag.code, exit_usage);
  EXPECT_NE(flag.err.find("CapExceeded"), std::string::npos);
  ::setenv("SNAKEWORD_CAP", "5", 1);
  EXPECT_EQ(run({"count", "101110"}).code, exit_usage);
  EXPECT_EQ(run({"count", "101110", "--cap", "6"}).code, 0);
  ::setenv("SNAKEWORD_CAP", "lots", 1);
  EXPECT_EQ(run({"count", "101110"}).code, exit_usage);
  ::unsetenv("SNAKEWORD_CAP");
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "snakeword_cli_out.dot";
  const CliRun r = run({"render", "101110", "--kind", "hasse", "--format", "dot", "--output", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str().rfind("graph", 0), 0u);
  std::filesystem::remove(path);
}

TEST(ParseIndexList, Forms) {
  EXPECT_EQ(parse_index_list("1,3,7,9"), (std::vector<std::size_t>{1, 3, 7, 9}));
  EXPECT_EQ(parse_index_list(" { 2 , 6 } "), (std::vector<std::size_t>{2, 6}));
  EXPECT_TRUE(parse_index_list("").empty());
  EXPECT_THROW(parse_index_list("1,"), Error);
  EXPECT_THROW(parse_index_list("1,,2"), Error);
  EXPECT_THROW(parse_index_list("-1"), Error);
}

TEST(ParseSubwordOperand, Forms) {
  EXPECT_TRUE(parse_subword_operand("e").empty());
  EXPECT_TRUE(parse_subword_operand("ε").empty());
  EXPECT_TRUE(parse_subword_operand("").empty());
  EXPECT_EQ(parse_subword_operand("101").str(), "101");
  EXPECT_THROW(parse_subword_operand("011"), Error);
}

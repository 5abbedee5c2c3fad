#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using afrob::cli::run_cli;
using nlohmann::json;

namespace {

const std::string kG3 = std::string(AFROB_DATA_DIR) + "/g3.apx";
const std::string kMutual = std::string(AFROB_DATA_DIR) + "/mutual.apx";

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int status = run_cli(args, in, out, err);
  return {status, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Outcome r = run(args);
  EXPECT_EQ(r.status, 0) << r.err;
  return json::parse(r.out);
}

}  // namespace

TEST(Cli, ExtensionsJson) {
  const json j = run_json({"extensions", "--semantics", "adm", "--input", kG3});
  EXPECT_EQ(j["schema"], "afrob/1");
  EXPECT_EQ(j["command"], "extensions");
  const json expected = json::parse(R"([[],["1"],["4"],["1","3"],["1","4"],["1","3","4"]])");
  EXPECT_EQ(j["result"]["extensions"], expected);
  EXPECT_EQ(j["result"]["count"], 6);
}

TEST(Cli, ExtensionsText) {
  const Outcome r = run({"extensions", "--semantics", "stb", "--input", kG3});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "stb: 1 extension\n{1,3,4}\n");
}

TEST(Cli, LabellingsJson) {
  const json j = run_json({"labellings", "--semantics", "prf", "--input", kG3});
  ASSERT_EQ(j["result"]["labellings"].size(), 1u);
  EXPECT_EQ(j["result"]["labellings"][0]["in"], json::parse(R"(["1","3","4"])"));
  EXPECT_EQ(j["result"]["labellings"][0]["out"], json::parse(R"(["2"])"));
}

TEST(Cli, LabellingsRejectAdmissible) {
  EXPECT_EQ(run({"labellings", "--semantics", "adm", "--input", kG3}).status,
            afrob::cli::kUsageError);
}

TEST(Cli, CheckAttackOnG3) {
  const json j = run_json({"check-attack", "--from", "1", "--to", "4", "--semantics", "adm",
                           "--input", kG3, "--oracle"});
  EXPECT_EQ(j["result"]["verdict"], "breaks_non_decreasing");
  EXPECT_EQ(j["result"]["witnesses"][0]["bullet"], "ND-in-in");
  EXPECT_EQ(j["result"]["oracle"]["agrees"], true);

  const Outcome text = run({"check-attack", "--from", "2", "--to", "1", "--semantics", "adm",
                        "--input", kG3});
  EXPECT_EQ(text.status, 0);
  EXPECT_NE(text.out.find("breaks_non_increasing"), std::string::npos);
  EXPECT_NE(text.out.find("NI-out-self-defense"), std::string::npos);
}

TEST(Cli, CheckAttackUnknownArgument) {
  const Outcome r = run({"check-attack", "--from", "9", "--to", "1", "--semantics", "cf", "--input", kG3});
  EXPECT_EQ(r.status, afrob::cli::kUsageError);
  EXPECT_NE(r.err.find("UnknownArgument"), std::string::npos);
}

TEST(Cli, InvariantAttacks) {
  const json j = run_json({"invariant-attacks", "--semantics", "cf", "--input", kG3});
  EXPECT_EQ(j["result"]["attacks"],
            json::parse(R"([{"from":"2","to":"1"},{"from":"3","to":"2"}])"));
}

TEST(Cli, Robustness) {
  const json j = run_json({"robustness", "--semantics", "cf", "--strategy", "exhaustive",
                           "--input", kG3});
  EXPECT_EQ(j["result"]["degree"], 2);
  EXPECT_EQ(j["result"]["verified"], true);
  const json capped = run_json({"robustness", "--semantics", "cf", "--max-steps", "1",
                                "--input", kG3});
  EXPECT_EQ(capped["result"]["degree"], 1);
  EXPECT_EQ(capped["result"]["lower_bound"], true);
}

TEST(Cli, Equivalent) {
  const json same = run_json({"equivalent", "--semantics", "prf", "--input", kG3, "--other", kG3});
  EXPECT_EQ(same["result"]["equivalent"], true);
  EXPECT_EQ(run({"equivalent", "--semantics", "cf", "--input", kG3, "--other", kMutual}).status,
            afrob::cli::kUsageError);
}

TEST(Cli, AuditConflictFree) {
  const json j = run_json({"audit", "--args", "2", "--semantics", "cf"});
  EXPECT_EQ(j["result"]["frameworks"], 16);
  EXPECT_EQ(j["result"]["disagreements"], 0);
}

TEST(Cli, AuditJsonIndependentOfJobs) {
  const Outcome one = run({"audit", "--args", "4", "--semantics", "adm", "--samples", "60",
                       "--seed", "3", "--format", "json"});
  const Outcome four = run({"audit", "--args", "4", "--semantics", "adm", "--samples", "60",
                        "--seed", "3", "--jobs", "4", "--format", "json"});
  EXPECT_EQ(one.status, 0);
  EXPECT_EQ(one.out, four.out);
}

TEST(Cli, Dot) {
  const Outcome r = run({"dot", "--input", kG3, "--in", "1,3,4"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"2\" [class=\"out\""), std::string::npos);
  EXPECT_EQ(run({"dot", "--input", kG3, "--in", "3"}).status, afrob::cli::kUsageError);
}

TEST(Cli, StandardInput) {
  const Outcome r = run({"extensions", "--semantics", "prf", "--input", "-"},
                    "arg(a).\narg(b).\natt(a,b).\natt(b,a).\n");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "prf: 2 extensions\n{a}\n{b}\n");
}

TEST(Cli, ExitStatuses) {
  EXPECT_EQ(run({}).status, afrob::cli::kUsageError);
  EXPECT_EQ(run({"extensions", "--semantics", "xyz", "--input", kG3}).status,
            afrob::cli::kUsageError);
  EXPECT_EQ(run({"extensions", "--semantics", "cf", "--input", "/nonexistent.apx"}).status,
            afrob::cli::kUsageError);

  const Outcome undeclared = run({"extensions", "--semantics", "cf", "--input", "-"}, "arg(x).\natt(x,y).\n");
  EXPECT_EQ(undeclared.status, afrob::cli::kParseError);
  EXPECT_NE(undeclared.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run({"extensions", "--semantics", "cf", "--input", "-"}, "arg(x\n").status,
            afrob::cli::kParseError);

  std::string big;
  for (int i = 0; i < 25; ++i) big += "arg(a" + std::to_string(i) + ").\n";
  EXPECT_EQ(run({"extensions", "--semantics", "cf", "--input", "-"}, big).status,
            afrob::cli::kSizeLimit);
  EXPECT_EQ(run({"--help"}).status, afrob::cli::kSuccess);
}

TEST(Cli, JsonIsByteIdenticalAcrossRuns) {
  const std::vector<std::string> args{"check-attack", "--from", "4", "--to", "2", "--semantics",
                                      "adm", "--oracle", "--input", kG3, "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, TextAndJsonAgreeOnCounts) {
  for (const char* s : {"cf", "adm", "com", "stb", "prf", "gde", "sst"}) {
    const json j = run_json({"extensions", "--semantics", s, "--input", kG3});
    const Outcome t = run({"extensions", "--semantics", s, "--input", kG3});
    const std::size_t n = j["result"]["count"];
    std::size_t lines = 0;
    for (char c : t.out) lines += c == '\n';
    EXPECT_EQ(lines, n + 1) << s;
  }
}

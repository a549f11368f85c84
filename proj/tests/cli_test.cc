// Copyright 2026 The Gasket Walk Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gasket/cli.h"
#include "gasket/io.h"

namespace gasket {
namespace {

struct CliRun {
  int status;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "gasket-walk");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

TEST(Cli, Version) {
  const CliRun r = run({"--version"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out, version_string() + "\n");
}

TEST(Cli, ExitDistExact) {
  const CliRun r = run({"exit-dist", "--d", "1", "--level", "3", "--start", "-", "--exact"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 9u);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    EXPECT_NE(lines[i].find(",1/8,0.125"), std::string::npos) << lines[i];
  }
  const CliRun approx = run({"exit-dist", "--d", "1", "--level", "3"});
  EXPECT_EQ(approx.status, kExitOk);
  EXPECT_EQ(data_lines(approx.out).size(), 9u);
}

TEST(Cli, CouplingFixture) {
  const CliRun r = run({"coupling", "--d", "1", "--path", "-,0,-,1,10,100,011,01,00"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  std::vector<std::string> z;
  for (const auto& row : doc["rows"]) {
    if (!row["z_tilde"].is_null()) z.push_back(row["z_tilde"]);
  }
  EXPECT_EQ(z, (std::vector<std::string>{"0", "01", "011", "01", "00"}));

  const CliRun rnd = run({"coupling", "--d", "2", "--random", "--steps", "30", "--seed", "4"});
  ASSERT_EQ(rnd.status, kExitOk) << rnd.err;
  EXPECT_EQ(nlohmann::json::parse(rnd.out)["rows"].size(), 31u);
  EXPECT_EQ(run({"coupling", "--d", "2", "--random", "--steps", "30", "--seed", "4"}).out, rnd.out);
}

TEST(Cli, VerifyGroupPasses) {
  const CliRun r = run({"verify", "--identity", "group", "--d", "2", "--level", "2", "--walks",
                     "100000", "--seed", "7"});
  EXPECT_EQ(r.status, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["identity"], "group");
  EXPECT_EQ(doc["d"], 2);
  EXPECT_EQ(doc["level"], 2);
  EXPECT_TRUE(doc["pass"].get<bool>());
}

TEST(Cli, VerifyWritesJsonFile) {
  const auto path = std::filesystem::temp_directory_path() / "gasket_cli_report.json";
  const CliRun r = run({"verify", "--identity", "shift", "--d", "1", "--level", "2", "--walks",
                     "20000", "--start", "00", "--sets", "3", "--json", path.string()});
  EXPECT_EQ(r.status, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  EXPECT_EQ(doc["comparisons"].size(), 3u);
  std::filesystem::remove(path);
}

TEST(Cli, SimulateToFileMatchesStdout) {
  const auto path = std::filesystem::temp_directory_path() / "gasket_cli_hist.csv";
  const std::vector<std::string> base{"simulate", "--d",     "1", "--level", "2", "--walks",
                                      "3000",     "--seed", "5", "--burn",  "4"};
  const CliRun a = run(base);
  auto with_out = base;
  with_out.insert(with_out.end(), {"--out", path.string(), "--threads", "3"});
  ASSERT_EQ(run(with_out).status, kExitOk);
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  EXPECT_EQ(s.str(), a.out);
  std::filesystem::remove(path);
}

TEST(Cli, GraphExportBothSpellings) {
  const CliRun a = run({"graph", "export", "--d", "1", "--level", "2"});
  const CliRun b = run({"graph-export", "--d", "1", "--level", "2"});
  ASSERT_EQ(a.status, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("src,dst,kind\n"), std::string::npos);
  EXPECT_NE(a.out.find("01,10,h\n"), std::string::npos);
}

TEST(Cli, Green) {
  const CliRun r = run({"green", "--d", "1", "--radius", "2"});
  ASSERT_EQ(r.status, kExitOk);
  EXPECT_NE(r.out.find("x,y,value,exact_flag\n"), std::string::npos);
}

TEST(Cli, UsageErrorsNameTheFlag) {
  struct Case {
    std::vector<std::string> args;
    std::string flag;
  };
  const std::vector<Case> cases{
      {{"simulate", "--d", "0", "--level", "2", "--walks", "5"}, "--d"},
      {{"simulate", "--d", "1", "--level", "2"}, "--walks"},
      {{"simulate", "--d", "1", "--level", "2", "--walks", "5", "--start", "7"}, "--start"},
      {{"exit-dist", "--d", "1", "--level", "2", "--start", "00"}, "--start"},
      {{"verify", "--identity", "other", "--d", "1", "--level", "2", "--walks", "5"},
       "--identity"},
      {{"verify", "--identity", "shift", "--d", "1", "--level", "2", "--walks", "5", "--start",
        "1"},
       "--start"},
      {{"coupling", "--d", "1", "--path", "-,0,11"}, "--path"},
      {{"coupling", "--d", "1"}, "--path"},
      {{"green", "--d", "1"}, "--radius"},
  };
  for (const Case& c : cases) {
    const CliRun r = run(c.args);
    EXPECT_EQ(r.status, kExitUsage) << c.args[0] << " " << r.err;
    EXPECT_NE(r.err.find(c.flag), std::string::npos) << r.err;
  }
  EXPECT_EQ(run({}).status, kExitUsage);
}

}  // namespace
}  // namespace gasket

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "spectile/cli.hpp"
#include "spectile/errors.hpp"

namespace spectile::cli {
namespace {

struct Run {
  int status;
  std::string out, err;
  Json json() const { return Json::parse(out.substr(0, out.find('\n'))); }
};

Run run(const RunConfig& config) {
  std::ostringstream out, err;
  const int status = execute(config, out, err);
  return {status, out.str(), err.str()};
}

RunConfig make(Command c) {
  RunConfig r;
  r.command = c;
  return r;
}

TEST(Cli, VerifyExample) {
  auto c = make(Command::Verify);
  c.omega = "0,1/2;1,1/2";
  c.spectrum = "d=2;0,1/2";
  const auto r = run(c);
  EXPECT_EQ(r.status, kOk);
  EXPECT_EQ(r.out, "{\"orthogonal\":true,\"complete\":\"Complete\",\"spectral\":true}\n");
}

TEST(Cli, VerifyNotOrthogonal) {
  auto c = make(Command::Verify);
  c.omega = "0,1/2;1,1/2";
  c.spectrum = "d=2;0,1";
  const auto j = run(c).json();
  EXPECT_EQ(j["orthogonal"], false);
  EXPECT_TRUE(j["complete"].is_null());
  EXPECT_EQ(j["spectral"], false);
}

TEST(Cli, ParseErrorNamesTheToken) {
  auto c = make(Command::Verify);
  c.omega = "0,1/2;1,abc";
  c.spectrum = "d=2;0,1/2";
  const auto r = run(c);
  EXPECT_EQ(r.status, kInvalidInput);
  EXPECT_EQ(r.json()["error"], "ParseError");
  EXPECT_NE(r.json()["message"].get<std::string>().find("abc"), std::string::npos);
  EXPECT_NE(r.err.find("abc"), std::string::npos);
}

TEST(Cli, InvalidGeometryAndSpectrum) {
  auto c = make(Command::Verify);
  c.omega = "0,1/2;1/4,1/2";
  c.spectrum = "d=2;0,1/2";
  EXPECT_EQ(run(c).status, kInvalidInput);
  c.omega = "0,1/2;1,1/2";
  c.spectrum = "d=2;0";
  EXPECT_EQ(run(c).status, kInvalidInput);
}

TEST(Cli, MissingArgument) {
  auto c = make(Command::Tiles);
  const auto r = run(c);
  EXPECT_EQ(r.status, kInvalidInput);
  EXPECT_EQ(r.json()["error"], "PreconditionViolated");
}

TEST(Cli, Tiles) {
  auto c = make(Command::Tiles);
  c.omega = "0,2/3;1,1/3";
  const auto r = run(c);
  EXPECT_EQ(r.status, kOk);
  EXPECT_EQ(r.json()["tiles"], false);
}

TEST(Cli, Classify) {
  auto c = make(Command::Classify2);
  c.omega = "0,1/2;1,1/2";
  c.spectrum = "d=2;0,1/2";
  EXPECT_EQ(run(c).json()["branch"], "Case1");
  c.command = Command::Classify3;
  c.omega = "0,1/3;1,1/3;2,1/3";
  c.spectrum = "d=3;0,1/3,2/3";
  EXPECT_EQ(run(c).json()["branch"], "ThreeEqualIntervals");
  c.omega = "0,1/2;1,1/2";
  EXPECT_EQ(run(c).status, kInvalidInput);
}

TEST(Cli, GvAndTorus) {
  auto c = make(Command::GV);
  c.exponents = "1,2,3";
  const auto g = run(c).json();
  EXPECT_EQ(g["g"], 1);
  EXPECT_EQ(g["t"], "1");
  auto t = make(Command::Torus);
  t.system = "1,2,3";
  t.order = 3;
  const auto j = run(t).json();
  EXPECT_EQ(j["nontrivialCount"], 0);
  EXPECT_EQ(j["trivialCount"], 27);
  t.order = 0;
  EXPECT_EQ(run(t).status, kInvalidInput);
}

TEST(Cli, SearchLines) {
  auto c = make(Command::Search);
  c.d_max = 3;
  const auto r = run(c);
  EXPECT_EQ(r.status, kOk);
  std::istringstream lines(r.out);
  std::string line, last;
  std::size_t n = 0;
  while (std::getline(lines, line)) {
    ++n;
    last = line;
  }
  EXPECT_EQ(n, 16u);
  EXPECT_EQ(Json::parse(last)["kind"], "summary");
  c.d_max = 2;
  EXPECT_EQ(run(c).status, kInvalidInput);
}

TEST(Cli, FileOutput) {
  const std::string path = testing::TempDir() + "spectile_cli_output.jsonl";
  auto c = make(Command::GV);
  c.exponents = "2,4,6";
  c.output = path;
  const auto r = run(c);
  EXPECT_EQ(r.status, kOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string line;
  ASSERT_TRUE(std::getline(in, line));
  EXPECT_EQ(Json::parse(line)["t"], "1");
  std::remove(path.c_str());
  c.output = "/nonexistent-dir/x.jsonl";
  EXPECT_EQ(run(c).status, kInvalidInput);
}

TEST(Cli, JobsFromEnvironment) {
  unsetenv("SPECTILE_JOBS");
  EXPECT_EQ(jobs_from_environment(), 1u);
  setenv("SPECTILE_JOBS", "3", 1);
  EXPECT_EQ(jobs_from_environment(), 3u);
  setenv("SPECTILE_JOBS", "zero", 1);
  EXPECT_THROW(jobs_from_environment(), ParseError);
  unsetenv("SPECTILE_JOBS");
}

TEST(Cli, CommandNames) {
  for (auto c : {Command::Verify, Command::Tiles, Command::Classify2, Command::Classify3, Command::GV, Command::Torus,
                 Command::Search})
    EXPECT_EQ(parse_command(to_string(c)), c);
  EXPECT_THROW(parse_command("nope"), ParseError);
}

}  // namespace
}  // namespace spectile::cli

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "torelli/cli.hpp"
#include "torelli/families.hpp"
#include "torelli/json_io.hpp"

using namespace torelli;
using torelli::io::Json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, CertifyXn) {
  const Outcome r = run({"certify", "--family", "xn", "--n", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = io::parse(r.out);
  EXPECT_EQ(j["schema"], "torelli-kit/1");
  EXPECT_EQ(j["kind"], "certificate");
  EXPECT_EQ(j["d"], 6);
  EXPECT_EQ(j["infinitely_many_nonsmoothable"], true);
  EXPECT_EQ(j["all_nontrivial_nonsmoothable"], true);
}

TEST(Cli, SwCheckDistinct) {
  const Outcome r = run({"sw", "--family", "zn", "--n", "1..5", "--check-distinct", "--format", "text"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("all distinct"), std::string::npos) << r.out;

  const Outcome j = run({"sw", "--family", "zn", "--n", "1..5", "--check-distinct"});
  ASSERT_EQ(j.code, kExitOk);
  const Json doc = io::parse(j.out);
  EXPECT_EQ(doc["items"].size(), 5u);
}

TEST(Cli, Distinguish) {
  const Outcome r = run({"distinguish", "--r", "1", "--m", "2", "--format", "text"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("Distinct: upper 7 < lower 15"), std::string::npos) << r.out;
}

TEST(Cli, DehnTwist) {
  Outcome r = run({"dehn-twist", "--b1", "3", "--t3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(io::parse(r.out)["verdict"], "Realizable");
  r = run({"dehn-twist", "--b1", "4"});
  EXPECT_EQ(io::parse(r.out)["verdict"], "NotRealizable");
  r = run({"dehn-twist", "--table"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(io::parse(r.out)["items"].size(), 12u);
  EXPECT_EQ(run({"dehn-twist", "--b1", "2", "--t3"}).code, kExitMalformed);
}

TEST(Cli, HypothesisFailureExitsOne) {
  const std::string input = R"({
    "schema": "torelli-kit/1",
    "source": "explicit",
    "trace": {"linking": [[0,0],[0,0]]},
    "c1_restriction": [0, 0],
    "invariant_nonzero": true,
    "cap": {"cap_h1_vanishes": true}
  })";
  const Outcome r = run({"certify"}, input);
  EXPECT_EQ(r.code, kExitHypothesisFailed);
  const Json j = io::parse(r.out);
  EXPECT_EQ(j["status"], "hypothesis_failed");
  EXPECT_EQ(j["failure_reason"], "nontorsion");

  const Outcome unknot = run({"stein-certify"}, "orientations: +\nL0, R0\n");
  EXPECT_EQ(unknot.code, kExitHypothesisFailed);
  EXPECT_EQ(io::parse(unknot.out)["failure_reason"], "b1");
}

TEST(Cli, MalformedInputExitsTwo) {
  EXPECT_EQ(run({"snf"}, "[[1,2],[3]]").code, kExitMalformed);
  EXPECT_EQ(run({"snf"}, "not json").code, kExitMalformed);
  EXPECT_EQ(run({"snf"}, R"({"schema": "other/9", "matrix": [[1]]})").code, kExitMalformed);
  EXPECT_EQ(run({"certify"}, R"({"trace": {"linking": [[0,1],[2,0]]}})").code, kExitMalformed);
  EXPECT_EQ(run({"stein-certify"}, "L0, Q1\n").code, kExitMalformed);
  EXPECT_EQ(run({"frobnicate"}).code, kExitMalformed);
  EXPECT_EQ(run({}).code, kExitMalformed);
  EXPECT_EQ(run({"certify", "--family", "xn", "--n", "0"}).code, kExitMalformed);
  const Outcome r = run({"snf"}, "[[1,2],[3]]");
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, SnfAndHomology) {
  Outcome r = run({"snf"}, "[[2,4],[4,8]]");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(io::parse(r.out)["diagonal"], Json::array({2, 0}));
  r = run({"homology", "--family", "z"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(io::parse(r.out)["h1_boundary"]["description"], "Z^2");
}

TEST(Cli, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"certify", "--family", "z"},
           {"stein-certify", "--family", "xn", "--n", "1..4"},
           {"sw", "--family", "xn", "--n", "1..3", "--format", "text"},
       }) {
    const Outcome a = run(args);
    const Outcome b = run(args);
    ASSERT_EQ(a.code, kExitOk) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, OutputFile) {
  const std::filesystem::path path = std::filesystem::temp_directory_path() / "torelli_kit_cli_test.json";
  std::filesystem::remove(path);
  const Outcome r = run({"certify", "--family", "xn", "--n", "2", "--output", path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  EXPECT_EQ(buf.str(), run({"certify", "--family", "xn", "--n", "2"}).out);
  std::filesystem::remove(path);
}

TEST(Cli, InputFile) {
  const std::filesystem::path path = std::filesystem::temp_directory_path() / "torelli_kit_cli_front.txt";
  {
    std::ofstream f(path);
    f << front_to_text(xn_front(2));
  }
  const Outcome r = run({"stein-certify", "--input", path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(io::parse(r.out)["d"], 4);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"stein-certify", "--input", path.string()}).code, kExitMalformed);
}

#include "cli.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "braids/json_io.hpp"
#include "test_util.hpp"

namespace braids {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, EnumerateNC4) {
  auto r = invoke({"nc", "enumerate", "--n", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j.size(), 14u);
}

TEST(Cli, GoldenBytes) {
  auto r = invoke({"nc", "enumerate", "--n", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "[{\"blocks\":[[1],[2],[3]],\"n\":3},"
            "{\"blocks\":[[1],[2,3]],\"n\":3},"
            "{\"blocks\":[[1,2],[3]],\"n\":3},"
            "{\"blocks\":[[1,3],[2]],\"n\":3},"
            "{\"blocks\":[[1,2,3]],\"n\":3}]\n");
}

TEST(Cli, ConflictingFlagsRejected) {
  auto r = invoke({"conf", "build", "--k", "2", "--n", "4", "--labeled", "--unlabeled"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, DeterministicByteIdenticalRuns) {
  for (auto args : std::vector<std::vector<std::string>>{
           {"nc", "enumerate", "--n", "5"},
           {"cplx", "boundaryball", "--n", "5", "--B", "2,4,5", "--radius", "1"},
           {"conf", "build", "--k", "2", "--n", "6", "--unlabeled"},
           {"ortho", "cube", "--k", "3"}}) {
    auto r1 = invoke(args);
    auto r2 = invoke(args);
    ASSERT_EQ(r1.code, 0) << r1.err;
    EXPECT_EQ(r1.out, r2.out);
  }
}

TEST(Cli, RoundTripPartitionThroughReader) {
  auto r = invoke({"nc", "enumerate", "--n", "5"});
  ASSERT_EQ(r.code, 0);
  for (const auto& j : json::parse(r.out)) {
    auto pi = decode_partition(j);
    EXPECT_EQ(encode(pi), j);
  }
}

TEST(Cli, RoundTripElementAndWord) {
  auto r = invoke({"braid", "nf", "--word",
                   R"({"n":6,"word":[{"n":6,"blocks":[[1,5,6],[2],[3],[4]]},)"
                   R"({"n":6,"blocks":[[1],[2,3,4,5],[6]]}]})"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["inf"], 1);
  EXPECT_TRUE(j["factors"].empty());
  auto g = decode_element(j);
  EXPECT_EQ(encode(g), j);
}

TEST(Cli, ComplexRoundTrip) {
  auto r = invoke({"conf", "build", "--k", "2", "--n", "4", "--labeled"});
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  auto x = decode_complex(j);
  EXPECT_EQ(encode(x), j);
}

TEST(Cli, ExampleFixMoveDecompose) {
  auto r = invoke({"boundary", "decompose", "--n", "9", "--B", "2,4,5,7",
                   "--word",
                   R"({"n":9,"word":[{"n":9,"blocks":[[1,2,3,4,5,6],[7,8,9]]}]})"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  auto fix = decode_element(j["fix"]);
  auto move = decode_element(j["move"]);
  EXPECT_EQ(cycle_string(fix.permutation()), "(1 3 6)(8 9)");
  EXPECT_EQ(cycle_string(move.permutation()), "(2 3)(4 5 6)(7 8)");
}

TEST(Cli, BraidingRelationEquality) {
  const std::string w1 =
      R"({"n":3,"word":[{"n":3,"blocks":[[1,2],[3]]},{"n":3,"blocks":[[1],[2,3]]},{"n":3,"blocks":[[1,2],[3]]}]})";
  const std::string w2 =
      R"({"n":3,"word":[{"n":3,"blocks":[[1],[2,3]]},{"n":3,"blocks":[[1,2],[3]]},{"n":3,"blocks":[[1],[2,3]]}]})";
  auto r = invoke({"braid", "eq", "--a", w1, "--b", w2});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out), json({{"equal", true}}));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"nonsense"}).code, 2);
  EXPECT_EQ(invoke({"nc", "rank", "--a", "{oops"}).code, 2);
  EXPECT_EQ(invoke({"nc", "enumerate", "--n", "99"}).code, 2);
  // crossing partition: precondition failure
  auto r = invoke({"nc", "rank", "--a", R"({"n":4,"blocks":[[1,3],[2,4]]})"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json::parse(r.err)["error"], "crossing");
}

TEST(Cli, ErrorObjectsAreMachineReadable) {
  auto r = invoke({"boundary", "wrap", "--n", "6", "--B", "5", "--word",
                   R"({"n":6,"word":[{"n":6,"blocks":[[1],[2,3,4,5],[6]]}]})"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json::parse(r.err)["error"], "factor-not-boundary");
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, OutFlagWritesFile) {
  std::string path = ::testing::TempDir() + "braidtool_out.json";
  auto r = invoke({"nc", "enumerate", "--n", "3", "--out", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  ASSERT_TRUE(f.good());
  json j;
  f >> j;
  EXPECT_EQ(j.size(), 5u);
}

TEST(Cli, FileInputsAccepted) {
  std::string path = ::testing::TempDir() + "braidtool_in.json";
  {
    std::ofstream f(path);
    f << R"({"n":4,"blocks":[[1,2,3,4]]})";
  }
  auto r = invoke({"nc", "perm", "--a", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["cycles"], "(1 2 3 4)");
}

TEST(Cli, MoveSimpleAndSplit) {
  auto r = invoke({"boundary", "movesimple", "--n", "4", "--B", "1,2", "--B2", "2,3"});
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_TRUE(j["exists"].get<bool>());
  EXPECT_EQ(decode_partition(j["partition"]),
            testutil::nc(4, {{1, 2, 3}, {4}}));

  auto s = invoke({"cplx", "split", "--n", "4", "--B", "1,2,3,4", "--path", "[[1,2,3,4]]"});
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(json::parse(s.out)["inf"], 1);
}

TEST(Cli, ProfileRoundTrip) {
  auto r = invoke({"boundary", "realize", "--n", "6", "--B", "1,3", "--w", "0,2"});
  ASSERT_EQ(r.code, 0);
  auto word = r.out;
  word.pop_back();  // trailing newline
  auto w = invoke({"boundary", "wrap", "--n", "6", "--B", "1,3", "--word", word});
  ASSERT_EQ(w.code, 0);
  auto j = json::parse(w.out);
  EXPECT_EQ(j["profile"]["w"], json::array({0, 2}));
}

TEST(Cli, EmittedValuesReadBackUnchanged) {
  // realized word
  auto r = invoke({"boundary", "realize", "--n", "7", "--B", "2,5", "--w", "-1,1"});
  ASSERT_EQ(r.code, 0);
  auto jw = json::parse(r.out);
  EXPECT_EQ(encode(decode_word(jw)), jw);
  // wrapping profile
  auto w = invoke({"boundary", "wrap", "--n", "7", "--B", "2,5", "--word", r.out});
  ASSERT_EQ(w.code, 0);
  auto jp = json::parse(w.out)["profile"];
  EXPECT_EQ(encode(decode_profile(jp)), jp);
  // garside element
  auto m = invoke({"braid", "inv", "--a",
                   R"({"n":5,"word":[{"n":5,"blocks":[[1,4],[2,3],[5]]}]})"});
  ASSERT_EQ(m.code, 0);
  auto jg = json::parse(m.out);
  EXPECT_EQ(encode(decode_element(jg)), jg);
  // complex from a dilated column window
  auto col = invoke({"conf", "column", "--k", "2", "--n", "5", "--levels", "0:8"});
  ASSERT_EQ(col.code, 0);
  auto jc = json::parse(col.out);
  EXPECT_EQ(encode(decode_complex(jc)), jc);
}

TEST(Cli, HelpExitsCleanly) {
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

}  // namespace
}  // namespace braids

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "sppr/constructions.hpp"
#include "sppr/io.hpp"

using namespace sppr;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Io, Fig1MatchesGoldenFile) {
  auto f = fig1_fixture();
  std::ostringstream out;
  write_graph(out, f.g);
  EXPECT_EQ(out.str(), slurp(std::string(SPPR_TEST_DATA) + "/fig1.graph"));
  std::ostringstream wout;
  write_weights(wout, f.g, f.h);
  EXPECT_EQ(wout.str(), slurp(std::string(SPPR_TEST_DATA) + "/fig1_h.weights"));
}

TEST(Io, RoundTripNormalises) {
  std::istringstream in(
      "# messy input\n"
      "graph undirected 3\n"
      "\n"
      "e 2 1 10/4   # reversed, not lowest terms\n"
      "e 0 1 3\n");
  auto g = read_graph(in);
  std::ostringstream out;
  write_graph(out, g);
  EXPECT_EQ(out.str(), "graph undirected 3\ne 0 1 3/1\ne 1 2 5/2\n");
  std::istringstream again(out.str());
  std::ostringstream out2;
  write_graph(out2, read_graph(again));
  EXPECT_EQ(out2.str(), out.str());
}

TEST(Io, ParseErrorsNameTheLine) {
  std::istringstream in("graph directed 2\ne 0 1 3/0\n");
  try {
    read_graph(in);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  for (const char* bad : {"", "graph sideways 2\n", "graph directed 2\ne 0 5 1/1\n",
                          "graph directed 2\ne 0 1 0.5\n", "graph directed 2\ne 0 0 1/1\n",
                          "graph directed 2\ne 0 1 -1/1\n", "graph directed 2\nx 0 1 1/1\n",
                          "graph directed 2\ne 0 1 1/1\ne 0 1 2/1\n"}) {
    std::istringstream s(bad);
    EXPECT_THROW(read_graph(s), ParseError) << bad;
  }
}

TEST(Io, WeightsMustCoverEveryEdgeOnce) {
  auto f = fig1_fixture();
  std::istringstream missing("w 0 1 1/1\n");
  EXPECT_THROW(read_weights(missing, f.g), ParseError);
  std::istringstream twice("w 0 1 1/1\nw 1 0 1/1\nw 0 2 1/1\nw 0 3 1/1\nw 1 3 1/1\nw 2 3 1/1\n");
  EXPECT_THROW(read_weights(twice, f.g), ParseError);
  std::istringstream foreign("w 1 2 1/1\n");
  EXPECT_THROW(read_weights(foreign, f.g), ParseError);
  std::ifstream ok(std::string(SPPR_TEST_DATA) + "/fig1_h.weights");
  EXPECT_EQ(read_weights(ok, f.g), f.h);
}

TEST(Io, PathSystemRoundTrip) {
  auto c = gen_path_shortcut(4);
  std::ostringstream out;
  write_paths(out, c.paths);
  std::istringstream in(out.str());
  auto back = read_paths(in, c.graph);
  EXPECT_EQ(back.size(), c.paths.size());
  for (const auto& [k, e] : c.paths.entries()) EXPECT_EQ(back.find(k.first, k.second)->path, e.path);

  std::istringstream wrong_end("path 0 3 0 1 2\n");
  EXPECT_THROW(read_paths(wrong_end, c.graph), ParseError);
  std::istringstream not_path("path 0 2 0 2\n");
  EXPECT_THROW(read_paths(not_path, c.graph), ParseError);
}

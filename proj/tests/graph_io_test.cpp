#include <gtest/gtest.h>

#include <random>

#include "graphdelta/constructions.hpp"
#include "graphdelta/error.hpp"
#include "graphdelta/graph_io.hpp"
#include "support.hpp"

namespace graphdelta {
namespace {

TEST(Graph6, FixedVectors) {
  EXPECT_EQ(testing::hand_packed_graph6(2, {{0, 1}}), "A_");
  EXPECT_EQ(testing::hand_packed_graph6(1, {}), "@");
  EXPECT_EQ(encode_graph6(complete(2)), "A_");
  EXPECT_EQ(encode_graph6(Graph::empty(1)), "@");
  EXPECT_EQ(decode_graph6("A_"), complete(2));
  EXPECT_EQ(decode_graph6("@"), Graph::empty(1));
  EXPECT_EQ(decode_graph6(encode_graph6(cycle(7))), cycle(7));
}

TEST(Graph6, MatchesHandPackedBits) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 64);
    const Graph g = testing::random_graph(rng, n, 0.3);
    EXPECT_EQ(encode_graph6(g), testing::hand_packed_graph6(n, g.edges()));
  }
}

TEST(Graph6, LongFormOrders) {
  for (int n : {62, 63, 64}) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    const Graph g = testing::random_graph(rng, n);
    const std::string s = encode_graph6(g);
    EXPECT_EQ(s[0] == '~', n >= 63);
    EXPECT_EQ(s, testing::hand_packed_graph6(n, g.edges()));
    EXPECT_EQ(decode_graph6(s), g);
  }
  EXPECT_EQ(encode_graph6(Graph::empty(64)).substr(0, 4), "~?@?");
}

TEST(Graph6, RejectsMalformedInput) {
  for (const char* bad : {"", "A", "A_x", "A ", "Ao", "C", "~~", "\x7f", "A__", "~??~"}) {
    EXPECT_THROW(decode_graph6(bad), Error) << '"' << bad << '"';
  }
}

TEST(Json, Shapes) {
  EXPECT_EQ(to_json(complete(2)), R"({"n":2,"edges":[[0,1]]})");
  EXPECT_EQ(to_json(Graph::empty(3)), R"({"n":3,"edges":[]})");
  EXPECT_EQ(from_json(to_json(cycle(6))), cycle(6));
  EXPECT_EQ(from_json(R"({"edges": [[1, 0]], "n": 2})"), complete(2));
}

TEST(Json, RejectsMalformedInput) {
  for (const char* bad : {"{", "[]", R"({"n":2})", R"({"n":0,"edges":[]})", R"({"n":2,"edges":[[0,2]]})",
                          R"({"n":2,"edges":[[0]]})", R"({"n":2,"edges":[[1,1]]})"}) {
    EXPECT_THROW(from_json(bad), Error) << bad;
  }
}

TEST(Dot, Labels) {
  const std::string one = to_dot(path(2));
  EXPECT_NE(one.find("graph G {"), std::string::npos);
  EXPECT_NE(one.find("1 -- 2;"), std::string::npos);
  const std::string zero = to_dot(path(2), Labels::ZeroBased);
  EXPECT_NE(zero.find("0 -- 1;"), std::string::npos);
}

TEST(Graph6Property, RoundTripRandomOrders) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 64);
    const double p = static_cast<double>(rng() % 101) / 100.0;
    const Graph g = testing::random_graph(rng, n, p);
    EXPECT_EQ(decode_graph6(encode_graph6(g)), g);
    EXPECT_EQ(from_json(to_json(g)), g);
  }
}

}  // namespace
}  // namespace graphdelta

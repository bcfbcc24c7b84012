#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "support.hpp"
#include "tdroute/graph_io.hpp"

namespace tdroute {
namespace {

constexpr const char* kFig1Text = R"(# four nodes, one non-FIFO arc
p tdsp 4 4
n s
n u
n v
n f
a s u const 1
a s v const 1
a u v const 1
a v f pwc 0:10,2:1   # drops at time 2
)";

TEST(ParseGraph, CounterexampleText) {
  const Graph g = parse_graph(kFig1Text);
  EXPECT_EQ(g, fig1_graph());
  EXPECT_EQ(g.tick(), 1);
}

TEST(ParseGraph, NumericNamesAndTick) {
  const Graph g = parse_graph("p tdsp 2 1\ntick 60\na 0 1 pwl 0:5,10:7\n");
  EXPECT_EQ(g.tick(), 60);
  EXPECT_EQ(g.name(1), "1");
  EXPECT_EQ(g.edge(0).cost.kind(), ProfileKind::kPiecewiseLinear);
  EXPECT_EQ(g.edge(0).cost(TimePoint{5}).ticks, 6);
}

struct BadInput {
  const char* text;
  std::size_t line;
  std::size_t column;
};

class ParseErrors : public ::testing::TestWithParam<BadInput> {};

TEST_P(ParseErrors, PointAtTheOffendingToken) {
  const BadInput& bad = GetParam();
  try {
    parse_graph(bad.text);
    FAIL() << "accepted: " << bad.text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), bad.line) << e.what();
    EXPECT_EQ(e.column(), bad.column) << e.what();
    EXPECT_FALSE(e.reason().empty());
  }
}

INSTANTIATE_TEST_SUITE_P(
    Inputs, ParseErrors,
    ::testing::Values(BadInput{"", 1, 1},
                      BadInput{"a 0 1 const 1\n", 1, 1},
                      BadInput{"p tdsp 2 1\na 0 1 const x\n", 2, 13},
                      BadInput{"p tdsp 2 1\na 0 1 const -4\n", 2, 13},
                      BadInput{"p tdsp 2 1\na 0 7 const 4\n", 2, 5},
                      BadInput{"p tdsp 2 1\na 0 1 spline 0:1\n", 2, 7},
                      BadInput{"p tdsp 2 1\na 0 1 pwc 0:1,3\n", 2, 15},
                      BadInput{"p tdsp 2 1\na 0 1 pwc 0:1,5:2,4:3\n", 2, 1},
                      BadInput{"p tdsp 2 1\na 0 1 pwc 2:1\n", 2, 1},
                      BadInput{"p tdsp 2 2\na 0 1 const 1\n", 1, 1},
                      BadInput{"p tdsp 2 1\nn a\nn a\n", 3, 3},
                      BadInput{"p tdsp 2 1\nn a\na a a const 1\n", 3, 1},
                      BadInput{"p tdsp 2 1\na 0 1 const 1\nn a\n", 3, 1},
                      BadInput{"p tdsp 2 1\nq\n", 2, 1},
                      BadInput{"p tdsp 2 1\ntick 0\n", 2, 6},
                      BadInput{"p tdsp 2 1\na 0 1 const 1 9\n", 2, 15}));

TEST(Serialize, RoundTripsTheCorpus) {
  for (const auto& inst : paper_corpus()) {
    const std::string text = serialize_graph(inst.graph);
    const Graph back = parse_graph(text);
    EXPECT_EQ(back, inst.graph) << inst.name;
    EXPECT_EQ(serialize_graph(back), text);
  }
}

TEST(Serialize, RoundTripsRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    RandomGraphSpec spec;
    spec.nodes = 12;
    spec.seed = seed;
    spec.fifo = seed % 2 == 0;
    spec.breakpoints = 6;
    const Graph g = gen_random(spec).graph;
    EXPECT_EQ(parse_graph(serialize_graph(g)), g) << seed;
  }
}

TEST(LoadGraphFile, ReadsFromDisk) {
  const auto path = std::filesystem::temp_directory_path() / "tdroute_io_test.tdsp";
  {
    std::ofstream out(path);
    out << kFig1Text;
  }
  EXPECT_EQ(load_graph_file(path), fig1_graph());
  std::filesystem::remove(path);
  EXPECT_THROW(load_graph_file(path), std::runtime_error);
}

}  // namespace
}  // namespace tdroute

#include <gtest/gtest.h>

#include "support.hpp"
#include "tdroute/parallel.hpp"
#include "tdroute/td_routing.hpp"

namespace tdroute {
namespace {

std::vector<TdQuery> queries_for(const Graph& g, std::uint64_t seed, int count) {
  Rng rng(seed);
  const auto n = static_cast<Ticks>(g.node_count());
  std::vector<TdQuery> out;
  for (int i = 0; i < count; ++i) {
    out.push_back({static_cast<NodeId>(rng.uniform(0, n - 1)),
                   static_cast<NodeId>(rng.uniform(0, n - 1)), TimePoint{rng.uniform(0, 50)}});
  }
  return out;
}

bool same_violations(const std::vector<FifoViolation>& a, const std::vector<FifoViolation>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].edge != b[i].edge || !(a[i].witness == b[i].witness)) return false;
  }
  return true;
}

TEST(ParallelScanFifo, MatchesSerial) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    RandomGraphSpec spec;
    spec.nodes = 40;
    spec.edge_prob = 0.3;
    spec.fifo = false;
    spec.breakpoints = 5;
    spec.seed = seed;
    const Graph g = gen_random(spec).graph;
    ASSERT_GT(g.edge_count(), 256u);
    const auto s = serial::scan_fifo(g.edges());
    EXPECT_FALSE(s.empty());
    EXPECT_TRUE(same_violations(s, par::scan_fifo(g.edges())));
    EXPECT_EQ(s.size(), g.fifo_violations().size());
  }
}

TEST(ParallelRouteBatch, MatchesSerialAndSingleQueries) {
  RandomGraphSpec spec;
  spec.nodes = 30;
  spec.edge_prob = 0.1;
  spec.seed = 5;
  const Graph g = gen_random(spec).graph;
  const auto queries = queries_for(g, 9, 200);
  for (BatchAlgorithm algo : {BatchAlgorithm::kTdFifo, BatchAlgorithm::kTdAstar}) {
    const auto s = serial::route_batch(g, queries, algo);
    EXPECT_EQ(s, par::route_batch(g, queries, algo));
    for (std::size_t i = 0; i < queries.size(); ++i) {
      const auto labels = td_dijkstra_fifo(g, queries[i]);
      EXPECT_EQ(s[i].arrival, labels.arrival[*queries[i].target]);
    }
  }
}

TEST(ParallelRouteBatch, StateGraphOnNonFifo) {
  const Graph g = gen_random(testing::small_fifo_spec(4, false, 8)).graph;
  const auto queries = queries_for(g, 4, 40);
  EXPECT_EQ(serial::route_batch(g, queries, BatchAlgorithm::kStateGraph),
            par::route_batch(g, queries, BatchAlgorithm::kStateGraph));
  EXPECT_THROW(serial::route_batch(g, queries, BatchAlgorithm::kTdFifo), NonFifoEdgeError);
  EXPECT_THROW(par::route_batch(g, queries, BatchAlgorithm::kTdFifo), NonFifoEdgeError);
}

}  // namespace
}  // namespace tdroute

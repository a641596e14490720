#include "interfere/graph.hpp"

#include <random>

#include <gtest/gtest.h>

#include "interfere/errors.hpp"
#include "interfere/families.hpp"
#include "interfere/graph_io.hpp"
#include "interfere/metrics.hpp"
#include "test_support.hpp"

namespace interfere {
namespace {

TEST(GraphTest, RejectsMalformedEdges) {
  const std::vector<Edge> loop{{1, 1}};
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  const std::vector<Edge> out{{0, 3}};
  EXPECT_THROW(Graph(3, loop), PreconditionError);
  EXPECT_THROW(Graph(3, dup), PreconditionError);
  EXPECT_THROW(Graph(3, out), PreconditionError);
}

TEST(GraphTest, EdgesAreCanonicalAndIndexed) {
  const std::vector<Edge> edges{{2, 0}, {1, 0}};
  Graph g(3, edges);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.edge(0), (Edge{0, 1}));
  EXPECT_EQ(g.edge(1), (Edge{0, 2}));
  EXPECT_EQ(g.edge_index(2, 0), 1u);
  EXPECT_FALSE(g.edge_index(1, 2).has_value());
}

TEST(GraphTest, LineGraphOfStarIsTriangle) {
  const auto lg = line_graph(families::star(3));
  EXPECT_EQ(lg.graph, families::complete(3));
  EXPECT_EQ(line_graph(families::path(5)).graph, families::path(4));
  EXPECT_EQ(line_graph(families::cycle(6)).graph.size(), 6u);
}

TEST(GraphTest, JoinUnionComplement) {
  const auto j = join(families::complete(2), families::empty(3));
  EXPECT_EQ(j.order(), 5u);
  EXPECT_EQ(j.size(), 1u + 6u);
  EXPECT_EQ(disjoint_union(families::path(2), families::path(2)), families::matching(2));
  EXPECT_EQ(complement(families::complete(4)), families::empty(4));
}

TEST(MetricsTest, NeighbourhoodPartition) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto g = testing::random_graph(9, 0.35, rng);
    for (Vertex u = 0; u < g.order(); ++u) {
      const auto n = neighborhood(g, u);
      const auto c = complemented_neighborhood(g, u);
      EXPECT_FALSE(n.intersects(c));
      EXPECT_EQ((n | c).count(), g.order());
      EXPECT_TRUE(c.test(u));
      const auto dist = bfs_distances(g, u);
      for (Vertex w = 0; w < g.order(); ++w)
        EXPECT_EQ(second_neighborhood(g, u).test(w), dist[w] == Distance(2));
    }
  }
}

TEST(MetricsTest, ParallelAllPairsMatchesSerial) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto g = testing::random_graph(40, 0.08, rng);
    EXPECT_EQ(all_pairs_distances(g), serial::all_pairs_distances(g));
  }
}

TEST(MetricsTest, DiameterAndConnectivity) {
  EXPECT_EQ(diameter(families::path(5)), Distance(4));
  EXPECT_EQ(diameter(families::petersen()), Distance(2));
  EXPECT_EQ(diameter(Graph(1)), Distance(0));
  EXPECT_FALSE(diameter(families::matching(2)).is_finite());
  EXPECT_EQ(components(families::matching(3)).size(), 3u);
  EXPECT_THROW(diameter(families::matching(2)).value(), PreconditionError);
}

TEST(MetricsTest, PointDetermining) {
  EXPECT_FALSE(is_point_determining(families::cycle(4)));
  EXPECT_TRUE(is_point_determining(families::cycle(5)));
  EXPECT_TRUE(is_point_determining(families::complete(2)));
  EXPECT_FALSE(is_point_determining(families::empty(2)));
}

TEST(MetricsTest, IndependenceNumberMatchesBruteForce) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 60; ++i) {
    const auto g = testing::random_graph(11, 0.3, rng);
    std::size_t best = 0;
    for (std::uint32_t s = 0; s < (1u << 11); ++s) {
      bool independent = true;
      for (const auto& e : g.edges())
        if ((s >> e.u & 1u) && (s >> e.v & 1u)) independent = false;
      if (independent) best = std::max<std::size_t>(best, __builtin_popcount(s));
    }
    EXPECT_EQ(independence_number(g), best);
  }
  EXPECT_EQ(independence_number(families::petersen()), 4u);
  EXPECT_THROW(independence_number(families::empty(20)), ResourceError);
}

TEST(GraphIoTest, EdgeListRoundTripAndErrors) {
  const auto g = families::petersen();
  EXPECT_EQ(from_edge_list(to_edge_list(g)), g);
  EXPECT_EQ(from_edge_list("# c\n3\n2 0\n\n0 1\n"), Graph(3, std::vector<Edge>{{0, 1}, {0, 2}}));
  EXPECT_THROW(from_edge_list("3\n0 0\n"), FormatError);
  EXPECT_THROW(from_edge_list("3\n0 1\n1 0\n"), FormatError);
  EXPECT_THROW(from_edge_list("3\n0 5\n"), FormatError);
  EXPECT_THROW(from_edge_list("3\n0 x\n"), FormatError);
  EXPECT_THROW(from_edge_list(""), FormatError);
}

TEST(GraphIoTest, Graph6KnownStrings) {
  EXPECT_EQ(to_graph6(families::complete(4)), "C~");
  EXPECT_EQ(to_graph6(families::path(4)), "Ch");
  EXPECT_EQ(to_graph6(families::petersen()).size(), 1u + 8u);
  EXPECT_EQ(from_graph6(">>graph6<<C~"), families::complete(4));
  EXPECT_THROW(from_graph6("C"), FormatError);
  EXPECT_THROW(from_graph6("C~~"), FormatError);
  EXPECT_THROW(from_graph6("C\x7f"), FormatError);
}

TEST(GraphIoTest, Graph6RoundTripRandom) {
  std::mt19937_64 rng(17);
  for (std::size_t n : {0u, 1u, 2u, 7u, 13u, 40u, 62u}) {
    const auto g = testing::random_graph(n, 0.4, rng);
    EXPECT_EQ(from_graph6(to_graph6(g)), g);
  }
  EXPECT_THROW(to_graph6(families::empty(63)), PreconditionError);
}

TEST(FamiliesTest, DocumentedShapes) {
  EXPECT_EQ(families::wheel(3), families::complete(4));
  EXPECT_EQ(families::wheel(5).degree(5), 5u);
  EXPECT_EQ(families::windmill(3, 2).order(), 5u);
  EXPECT_EQ(families::windmill(3, 2).degree(0), 4u);
  EXPECT_EQ(families::husimi({3, 4, 5}).order(), 1u + 2u + 3u + 4u);
  EXPECT_EQ(families::star_polygon(4).order(), 8u);
  EXPECT_TRUE(families::star_polygon(4).adjacent(4, 0));
  EXPECT_TRUE(families::star_polygon(4).adjacent(4, 1));
  EXPECT_EQ(families::helm(4).order(), 9u);
  EXPECT_EQ(families::helm(4).degree(5), 1u);
  EXPECT_EQ(families::crown(5).size(), 10u);
  EXPECT_EQ(regular_degree(families::petersen()), 3u);
  EXPECT_EQ(families::complete_bipartite(2, 3).size(), 6u);
  EXPECT_TRUE(families::complete_bipartite(2, 3).adjacent(0, 2));
}

TEST(FamiliesTest, SpecParser) {
  EXPECT_EQ(families::from_spec("wheel:5"), families::wheel(5));
  EXPECT_EQ(families::from_spec("kpq:2,3"), families::complete_bipartite(2, 3));
  EXPECT_EQ(families::from_spec("husimi:3,4,5"), families::husimi({3, 4, 5}));
  EXPECT_EQ(families::from_spec("petersen"), families::petersen());
  EXPECT_THROW(families::from_spec("wheel"), FormatError);
  EXPECT_THROW(families::from_spec("nonsense:3"), FormatError);
  EXPECT_THROW(families::from_spec("wheel:x"), FormatError);
  EXPECT_THROW(families::from_spec("cycle:2"), PreconditionError);
}

}  // namespace
}  // namespace interfere

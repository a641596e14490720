#include "interfere/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "interfere/families.hpp"
#include "interfere/graph_io.hpp"
#include "interfere/metrics.hpp"
#include "test_support.hpp"

namespace interfere {
namespace {

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back(Edge::canonical(perm[e.u], perm[e.v]));
  return Graph(g.order(), edges);
}

TEST(CatalogTest, CanonicalFormIsRelabellingInvariant) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + i % 10;
    const auto g = testing::random_graph(n, 0.45, rng);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_graph6(g), canonical_graph6(relabel(g, perm)));
  }
}

TEST(CatalogTest, CanonicalFormSeparatesNonIsomorphicGraphs) {
  EXPECT_NE(canonical_graph6(families::path(4)), canonical_graph6(families::star(3)));
  EXPECT_NE(canonical_graph6(families::cycle(6)),
            canonical_graph6(disjoint_union(families::cycle(3), families::cycle(3))));
  EXPECT_EQ(canonical_form(families::petersen()).size(), 15u);
}

// OEIS A001349 and A000088.
TEST(CatalogTest, ConnectedCounts) {
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
  for (std::size_t n = 1; n <= expected.size(); ++n) {
    const auto graphs = connected_graphs(n);
    EXPECT_EQ(graphs.size(), expected[n - 1]) << "n=" << n;
    for (const auto& g : graphs) EXPECT_TRUE(is_connected(g));
  }
}

TEST(CatalogTest, AllGraphCounts) {
  const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156};
  for (std::size_t n = 1; n <= expected.size(); ++n) EXPECT_EQ(all_graphs(n).size(), expected[n - 1]);
}

TEST(CatalogTest, SerialGeneratorMatchesParallel) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto a = connected_graphs(n);
    const auto b = serial::connected_graphs(n);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(to_graph6(a[i]), to_graph6(b[i]));
  }
}

TEST(CatalogTest, EntriesArePairwiseNonIsomorphic) {
  std::set<std::string> seen;
  for (const auto& g : connected_graphs(6)) EXPECT_TRUE(seen.insert(canonical_graph6(g)).second);
}

}  // namespace
}  // namespace interfere
